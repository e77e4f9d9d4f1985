// Exact number fields: defining data, certified embeddings, archimedean
// places, and field-element arithmetic in the power basis.  Elements are
// vectors of exact rationals; every identity between rationals/integers is
// computed exactly, approximation enters only through the certified roots.
#pragma once

#include "nfreg/int_polynomial.hpp"
#include "nfreg/numeric.hpp"
#include "nfreg/roots.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nfreg {

class FieldDataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Place {
    enum class Kind { real, complex };
    Kind kind;
    int local_degree;     // 1 for real, 2 for complex
    int embedding_index;  // index into NumberField::roots (positive-im member for complex)
};

using RatMatrix = std::vector<std::vector<Rat>>;

namespace linalg {

// Gaussian elimination determinant over the rationals, exact.
inline Rat det(RatMatrix a) {
    const size_t n = a.size();
    Rat out = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            out = -out;
        }
        out *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat m = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
        }
    }
    return out;
}

// Exact inverse; throws on singular input.
inline RatMatrix inverse(RatMatrix a) {
    const size_t n = a.size();
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw FieldDataError("singular matrix");
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        Rat piv = a[k][k];
        for (size_t j = 0; j < n; ++j) {
            a[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat m = a[i][k];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= m * a[k][j];
                inv[i][j] -= m * inv[k][j];
            }
        }
    }
    return inv;
}

}  // namespace linalg

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    std::string label;
    IntPolynomial poly;      // monic defining polynomial
    Int disc;                // signed field discriminant
    int r1 = 0, r2 = 0;
    RatMatrix integral_basis;  // row j = omega_j in the power basis
    RatMatrix basis_inverse;   // power-basis coords -> integral-basis coords
    std::vector<CertifiedRoot> roots;
    std::vector<Place> places;

    int degree() const { return poly.degree(); }
    int unit_rank() const { return r1 + r2 - 1; }
    Int abs_disc() const { return abs(disc); }

    // trace(theta^k) for k = 0..d-1, from Newton's identities
    const std::vector<Rat>& power_traces() const { return power_traces_; }

    // reduction row for theta^(d+k), k = 0..d-2
    const RatMatrix& power_reductions() const { return power_reductions_; }

    static NumberFieldPtr create(std::string label, IntPolynomial poly, Int disc,
                                 int r1, int r2, RatMatrix integral_basis);

  private:
    std::vector<Rat> power_traces_;
    RatMatrix power_reductions_;

    void build_tables();
    void validate() const;
};

// An element of a number field: exact rational coordinates in the power
// basis 1, theta, ..., theta^(d-1).
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(NumberFieldPtr field, std::vector<Rat> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw std::invalid_argument("coordinate length does not match field degree");
    }

    static FieldElement zero(NumberFieldPtr field) {
        return FieldElement(field, std::vector<Rat>(field->degree(), Rat(0)));
    }
    static FieldElement one(NumberFieldPtr field) { return from_rational(std::move(field), Rat(1)); }
    static FieldElement from_rational(NumberFieldPtr field, const Rat& q) {
        std::vector<Rat> c(field->degree(), Rat(0));
        c[0] = q;
        return FieldElement(std::move(field), std::move(c));
    }
    static FieldElement generator(NumberFieldPtr field) {
        std::vector<Rat> c(field->degree(), Rat(0));
        if (field->degree() == 1) {
            // theta = the rational root of the degree-1 defining polynomial
            c[0] = Rat(-field->poly.coeffs[0]);
        } else {
            c[1] = 1;
        }
        return FieldElement(std::move(field), std::move(c));
    }

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const Rat& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }

    FieldElement operator+(const FieldElement& o) const {
        check_same_field(o);
        std::vector<Rat> c(coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return FieldElement(field_, std::move(c));
    }
    FieldElement operator-(const FieldElement& o) const {
        check_same_field(o);
        std::vector<Rat> c(coords_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return FieldElement(field_, std::move(c));
    }
    FieldElement operator-() const {
        std::vector<Rat> c(coords_);
        for (Rat& x : c) x = -x;
        return FieldElement(field_, std::move(c));
    }
    FieldElement operator*(const Rat& q) const {
        std::vector<Rat> c(coords_);
        for (Rat& x : c) x *= q;
        return FieldElement(field_, std::move(c));
    }

    FieldElement operator*(const FieldElement& o) const {
        check_same_field(o);
        const int d = field_->degree();
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (coords_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (o.coords_[j] == 0) continue;
                prod[i + j] += coords_[i] * o.coords_[j];
            }
        }
        std::vector<Rat> c(prod.begin(), prod.begin() + d);
        const RatMatrix& red = field_->power_reductions();
        for (int k = 0; k < d - 1; ++k) {
            if (prod[d + k] == 0) continue;
            for (int j = 0; j < d; ++j) c[j] += prod[d + k] * red[k][j];
        }
        return FieldElement(field_, std::move(c));
    }

    // Extended Euclid against the (irreducible) defining polynomial.
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        RatPolynomial a{std::vector<Rat>(coords_)};
        RatPolynomial f(field_->poly);
        // Solve s*a = gcd(a, f) mod f; gcd must be a nonzero constant.
        RatPolynomial r0 = f, r1 = a;
        RatPolynomial s0(std::vector<Rat>{Rat(0)}), s1(std::vector<Rat>{Rat(1)});
        while (!r1.is_zero() && r1.degree() > 0) {
            // quotient of r0 by r1
            RatPolynomial q;
            q.coeffs.assign(r0.degree() - r1.degree() + 1, Rat(0));
            RatPolynomial r = r0;
            while (!r.is_zero() && r.degree() >= r1.degree()) {
                Rat c = r.leading() / r1.leading();
                int shift = r.degree() - r1.degree();
                q.coeffs[shift] += c;
                for (int i = 0; i <= r1.degree(); ++i) r.coeffs[i + shift] -= c * r1.coeffs[i];
                r.coeffs.pop_back();
                r.strip();
            }
            q.strip();
            RatPolynomial s2 = s0 - q * s1;
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        if (r1.is_zero() || r1.coeffs[0] == 0)
            throw FieldDataError("element not invertible: defining polynomial is reducible");
        Rat unit = r1.coeffs[0];
        std::vector<Rat> c(field_->degree(), Rat(0));
        for (int i = 0; i <= s1.degree() && i < field_->degree(); ++i) c[i] = s1.coeffs[i] / unit;
        return FieldElement(field_, std::move(c));
    }

    FieldElement pow(const Int& e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = one(field_);
        FieldElement base = *this;
        Int n = e;
        while (n > 0) {
            if ((n & 1) == 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    // Image under the embedding attached to root index i.
    Cx embed(int root_index) const {
        Cx acc;
        const Cx& z = field_->roots[root_index].value;
        for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
            acc = acc * z;
            acc.re += to_real(*it);
        }
        return acc;
    }

    // ||alpha||_v at an archimedean place.
    Real abs_at(const Place& p) const { return embed(p.embedding_index).abs(); }

    // Coordinates with respect to the integral basis.
    std::vector<Rat> integral_coords() const {
        const RatMatrix& inv = field_->basis_inverse;
        const int d = field_->degree();
        std::vector<Rat> out(d, Rat(0));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) out[j] += coords_[i] * inv[i][j];
        return out;
    }

    bool is_integral() const {
        for (const Rat& c : integral_coords())
            if (denominator(c) != 1) return false;
        return true;
    }

  private:
    void check_same_field(const FieldElement& o) const {
        if (field_ != o.field_) throw std::invalid_argument("elements of different fields");
    }

    NumberFieldPtr field_;
    std::vector<Rat> coords_;
};

inline void NumberField::build_tables() {
    const int d = degree();
    // theta^(d+k) reduced to the power basis, k = 0..d-2
    power_reductions_.assign(std::max(0, d - 1), std::vector<Rat>(d, Rat(0)));
    std::vector<Rat> cur(d, Rat(0));  // coordinates of theta^d
    for (int j = 0; j < d; ++j) cur[j] = -Rat(poly.coeffs[j]);
    for (int k = 0; k < d - 1; ++k) {
        power_reductions_[k] = cur;
        // advance: cur <- theta * cur, reduced mod the defining polynomial
        std::vector<Rat> next(d, Rat(0));
        Rat top = cur[d - 1];
        for (int j = d - 1; j >= 1; --j) next[j] = cur[j - 1];
        if (top != 0)
            for (int j = 0; j < d; ++j) next[j] -= top * Rat(poly.coeffs[j]);
        cur = std::move(next);
    }
    // Newton's identities: p_k = trace(theta^k)
    power_traces_.assign(d, Rat(0));
    power_traces_[0] = d;
    // monic poly: x^d + a_{d-1} x^{d-1} + ... + a_0, e_i = (-1)^i a_{d-i}
    for (int k = 1; k < d; ++k) {
        Rat pk = -Rat(k) * Rat(poly.coeffs[d - k]);
        for (int i = 1; i < k; ++i) pk -= Rat(poly.coeffs[d - i]) * power_traces_[k - i];
        power_traces_[k] = pk;
    }
}

inline void NumberField::validate() const {
    const int d = degree();
    if (d < 1) throw FieldDataError(label + ": defining polynomial must have degree >= 1");
    if (!poly.is_monic()) throw FieldDataError(label + ": defining polynomial must be monic");
    if (!is_squarefree(poly)) throw FieldDataError(label + ": defining polynomial is not squarefree");
    // Cheap necessary irreducibility condition: no rational root when d <= 3.
    if (d >= 2 && d <= 3) {
        Int a0 = poly.coeffs[0];
        if (a0 == 0) throw FieldDataError(label + ": defining polynomial has root 0");
        const Int a0abs = abs(a0);
        for (Int t = 1; t * t <= a0abs; ++t) {
            if (a0abs % t != 0) continue;
            const Int cofactor = a0abs / t;
            for (const Int& cand : {t, cofactor}) {
                if (poly.eval(Rat(cand)) == 0 || poly.eval(Rat(-cand)) == 0)
                    throw FieldDataError(label + ": defining polynomial has a rational root");
            }
        }
    }
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != d)
        throw FieldDataError(label + ": signature inconsistent with degree");
    if (d > 1 && disc == 0) throw FieldDataError(label + ": zero discriminant");
    // root pattern vs signature
    int found_real = 0;
    for (const auto& r : roots)
        if (r.is_real) ++found_real;
    if (found_real != r1)
        throw FieldDataError(label + ": signature inconsistent with certified root pattern");
    if (static_cast<int>(integral_basis.size()) != d)
        throw FieldDataError(label + ": integral basis must have d rows");
    for (const auto& row : integral_basis)
        if (static_cast<int>(row.size()) != d)
            throw FieldDataError(label + ": integral basis rows must have length d");
    if (!(integral_basis[0][0] == 1)) throw FieldDataError(label + ": first basis element must be 1");
    for (int j = 1; j < d; ++j)
        if (integral_basis[0][j] != 0)
            throw FieldDataError(label + ": first basis element must be 1");
    if (linalg::det(integral_basis) == 0)
        throw FieldDataError(label + ": integral basis is singular");
}

inline NumberFieldPtr NumberField::create(std::string label, IntPolynomial poly, Int disc,
                                          int r1, int r2, RatMatrix integral_basis) {
    auto nf = std::make_shared<NumberField>();
    nf->label = std::move(label);
    nf->poly = std::move(poly);
    nf->disc = std::move(disc);
    nf->r1 = r1;
    nf->r2 = r2;
    nf->integral_basis = std::move(integral_basis);
    nf->roots = find_roots(nf->poly, working_precision() + kGuardBits / 2);
    nf->validate();
    nf->basis_inverse = linalg::inverse(nf->integral_basis);
    nf->build_tables();
    // archimedean places: the root ordering gives reals first, then pairs
    for (int i = 0; i < nf->degree(); ++i) {
        const auto& r = nf->roots[i];
        if (r.is_real)
            nf->places.push_back({Place::Kind::real, 1, i});
        else if (r.value.im > 0)
            nf->places.push_back({Place::Kind::complex, 2, i});
    }
    if (static_cast<int>(nf->places.size()) != nf->r1 + nf->r2)
        throw FieldDataError(nf->label + ": place enumeration mismatch");
    return nf;
}

// Multiplication-by-elem matrix in the power basis: column j holds the
// coordinates of elem * theta^j.
inline RatMatrix multiplication_matrix(const FieldElement& elem) {
    const int d = elem.field()->degree();
    RatMatrix m(d, std::vector<Rat>(d, Rat(0)));
    FieldElement cur = elem;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = cur.coords()[i];
        if (j + 1 < d) cur = cur * FieldElement::generator(elem.field());
    }
    return m;
}

// Characteristic polynomial of the multiplication matrix, monic of degree
// d, by the Faddeev-LeVerrier recurrence (exact rational arithmetic).
inline RatPolynomial char_poly(const FieldElement& elem) {
    const int d = elem.field()->degree();
    RatMatrix m = multiplication_matrix(elem);
    std::vector<Rat> coeff(d + 1, Rat(0));
    coeff[d] = 1;
    RatMatrix mk = m;
    for (int k = 1; k <= d; ++k) {
        Rat tr = 0;
        for (int i = 0; i < d; ++i) tr += mk[i][i];
        Rat ck = tr / k;
        coeff[d - k] = -ck;
        if (k == d) break;
        // mk <- m * (mk - ck I)
        RatMatrix t = mk;
        for (int i = 0; i < d; ++i) t[i][i] -= ck;
        RatMatrix next(d, std::vector<Rat>(d, Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (m[i][l] == 0) continue;
                for (int j = 0; j < d; ++j) next[i][j] += m[i][l] * t[l][j];
            }
        mk = std::move(next);
    }
    return RatPolynomial(std::move(coeff));
}

// Primitive integer minimal polynomial: the squarefree part of char_poly.
// char_poly = minimal_poly^(d/m) is re-verified by exact division.
inline IntPolynomial minimal_poly(const FieldElement& elem) {
    if (elem.is_zero()) return IntPolynomial(std::vector<Int>{0, 1});
    RatPolynomial cp = char_poly(elem);
    RatPolynomial g = poly_gcd(cp, cp.derivative());
    RatPolynomial sq = exact_div(cp, g).monic();
    IntPolynomial mp = sq.to_primitive_int();
    const int d = elem.field()->degree();
    const int m = mp.degree();
    if (d % m != 0) throw FieldDataError("minimal polynomial degree does not divide field degree");
    RatPolynomial power(std::vector<Rat>{Rat(1)});
    for (int i = 0; i < d / m; ++i) power = power * sq;
    if (!(power == cp)) throw FieldDataError("char_poly is not a power of the minimal polynomial");
    return mp;
}

// (norm, trace) read off the characteristic polynomial.
inline std::pair<Rat, Rat> norm_and_trace(const FieldElement& elem) {
    RatPolynomial cp = char_poly(elem);
    const int d = cp.degree();
    Rat norm = (d % 2 == 0) ? cp.coeffs[0] : -cp.coeffs[0];
    Rat trace = -cp.coeffs[d - 1];
    return {norm, trace};
}

// Trace via precomputed power sums; equal to the char_poly route.
inline Rat trace_fast(const FieldElement& elem) {
    const auto& pt = elem.field()->power_traces();
    Rat out = 0;
    for (size_t i = 0; i < pt.size(); ++i) out += elem.coords()[i] * pt[i];
    return out;
}

}  // namespace nfreg
