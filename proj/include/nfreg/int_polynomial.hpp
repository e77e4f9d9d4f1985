// Exact univariate polynomials over the integers and rationals: the
// arithmetic needed for defining polynomials, characteristic/minimal
// polynomials, resultants and cyclotomic polynomials.  Coefficients are
// stored little-endian (index i = coefficient of x^i).
#pragma once

#include "nfreg/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfreg {

struct RatPolynomial;

struct IntPolynomial {
    std::vector<Int> coeffs;  // coeffs[i] multiplies x^i; trailing zeros stripped

    IntPolynomial() : coeffs{0} {}
    explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { strip(); }

    void strip() {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(0);
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }
    const Int& leading() const { return coeffs.back(); }
    bool is_monic() const { return leading() == 1; }

    Int content() const {
        Int g = 0;
        for (const Int& c : coeffs) g = gcd(g, c);
        return g;
    }

    // Content-free copy with positive leading coefficient.
    IntPolynomial primitive() const {
        if (is_zero()) return *this;
        Int g = content();
        if (leading() < 0) g = -g;
        std::vector<Int> out(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i] / g;
        return IntPolynomial(std::move(out));
    }

    IntPolynomial derivative() const {
        if (degree() == 0) return IntPolynomial();
        std::vector<Int> out(coeffs.size() - 1);
        for (size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * static_cast<int>(i);
        return IntPolynomial(std::move(out));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rat(*it);
        return acc;
    }

    Cx eval(const Cx& z) const {
        Cx acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * z;
            acc.re += to_real(*it);
        }
        return acc;
    }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }

    std::string str() const;  // "x^3 - 2x + 1" style, for diagnostics
};

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial(std::move(out));
}

// Exact division in Z[x]; throws if the division is not exact.
inline IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Int> rem = a.coeffs;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) throw std::domain_error("inexact polynomial division");
    std::vector<Int> q(dq + 1, Int(0));
    for (int k = dq; k >= 0; --k) {
        Int num = rem[k + db];
        if (num % b.leading() != 0) throw std::domain_error("inexact polynomial division");
        Int c = num / b.leading();
        q[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b.coeffs[i];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

struct RatPolynomial {
    std::vector<Rat> coeffs;

    RatPolynomial() : coeffs{Rat(0)} {}
    explicit RatPolynomial(std::vector<Rat> c) : coeffs(std::move(c)) { strip(); }
    explicit RatPolynomial(const IntPolynomial& p) {
        coeffs.reserve(p.coeffs.size());
        for (const Int& c : p.coeffs) coeffs.emplace_back(c);
    }

    void strip() {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(Rat(0));
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }
    const Rat& leading() const { return coeffs.back(); }

    RatPolynomial monic() const {
        if (is_zero()) return *this;
        std::vector<Rat> out(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i] / leading();
        return RatPolynomial(std::move(out));
    }

    RatPolynomial derivative() const {
        if (degree() == 0) return RatPolynomial();
        std::vector<Rat> out(coeffs.size() - 1);
        for (size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * static_cast<int>(i);
        return RatPolynomial(std::move(out));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Scale coefficients to a primitive integer polynomial with positive lead.
    IntPolynomial to_primitive_int() const {
        Int den = 1;
        for (const Rat& c : coeffs) den = lcm(den, denominator(c));
        std::vector<Int> out(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i)
            out[i] = numerator(coeffs[i]) * (den / denominator(coeffs[i]));
        return IntPolynomial(std::move(out)).primitive();
    }

    bool operator==(const RatPolynomial& o) const { return coeffs == o.coeffs; }
};

inline RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rat> out(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return RatPolynomial(std::move(out));
}

inline RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rat> out(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
    return RatPolynomial(std::move(out));
}

// Euclidean remainder in Q[x]; the leading term cancels exactly each pass.
inline RatPolynomial rem(RatPolynomial a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rat c = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) a.coeffs[i + shift] -= c * b.coeffs[i];
        a.coeffs.pop_back();
        a.strip();
    }
    return a;
}

// Monic gcd in Q[x].
inline RatPolynomial poly_gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        RatPolynomial r = rem(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

inline RatPolynomial exact_div(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> remv = a.coeffs;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) throw std::domain_error("inexact polynomial division");
    std::vector<Rat> q(dq + 1, Rat(0));
    for (int k = dq; k >= 0; --k) {
        Rat c = remv[k + db] / b.leading();
        q[k] = c;
        for (int i = 0; i <= db; ++i) remv[k + i] -= c * b.coeffs[i];
    }
    for (const Rat& c : remv)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return RatPolynomial(std::move(q));
}

inline bool is_squarefree(const IntPolynomial& f) {
    RatPolynomial g = poly_gcd(RatPolynomial(f), RatPolynomial(f.derivative()));
    return g.degree() == 0;
}

// Resultant of two integer polynomials: fraction-free Bareiss elimination
// on the Sylvester matrix.
inline Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    const int n = f.degree(), m = g.degree();
    if (m == 0) return pow(g.coeffs[0], n);
    if (n == 0) {
        Int r = pow(f.coeffs[0], m);
        return r;
    }
    const int N = n + m;
    std::vector<std::vector<Int>> a(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[i][i + j] = f.coeffs[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[m + i][i + j] = g.coeffs[m - j];
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (a[k][k] == 0) {
            int s = k + 1;
            while (s < N && a[s][k] == 0) ++s;
            if (s == N) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

// Discriminant of a monic integer polynomial.
inline Int poly_discriminant(const IntPolynomial& f) {
    if (!f.is_monic()) throw std::invalid_argument("discriminant requires a monic polynomial");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant of a constant");
    if (d == 1) return 1;
    Int res = resultant(f, f.derivative());
    return ((Int(d) * (d - 1) / 2) % 2 == 0) ? res : -res;
}

// n-th cyclotomic polynomial by the recursive exact-division definition,
// memoized (single-threaded library).
inline const IntPolynomial& cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<int, IntPolynomial> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial acc(std::move(xn));
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) acc = exact_div(acc, cyclotomic(d));
    }
    return cache.emplace(n, std::move(acc)).first->second;
}

inline std::string IntPolynomial::str() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs[i];
        if (c == 0 && degree() > 0) continue;
        std::string term;
        Int a = abs(c);
        if (i == 0)
            term = a.str();
        else if (i == 1)
            term = (a == 1 ? "x" : a.str() + "x");
        else
            term = (a == 1 ? "x^" : a.str() + "x^") + std::to_string(i);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace nfreg
