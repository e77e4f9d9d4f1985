// Simultaneous complex root approximation for squarefree integer
// polynomials: Aberth-Ehrlich iteration started from a perturbed circle,
// Newton polish, and a residual-based error radius per root.  The radius
// bound d*|f(z)/f'(z)| covers the distance to the nearest true root.
#pragma once

#include "nfreg/int_polynomial.hpp"
#include "nfreg/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nfreg {

struct CertifiedRoot {
    Cx value;
    Real radius;      // distance bound to the true root
    bool is_real;
    int conj_index;   // index of the conjugate root; own index when real
};

class RootFindingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Cx eval_real_coeffs(const std::vector<Real>& c, const Cx& z) {
    Cx acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z;
        acc.re += *it;
    }
    return acc;
}

}  // namespace detail

// Returns the d roots of a squarefree polynomial, each with an error
// radius at most 2^(16 - bits).  Ordering: real roots ascending, then
// conjugate pairs by ascending real part (positive-imaginary member
// first), pairs with equal real part by ascending imaginary part.
inline std::vector<CertifiedRoot> find_roots(const IntPolynomial& poly, unsigned bits) {
    const int d = poly.degree();
    if (d < 1) throw std::invalid_argument("find_roots: constant polynomial");
    if (!is_squarefree(poly)) throw std::invalid_argument("find_roots: polynomial is not squarefree");

    const Real target = ldexp(Real(1), -static_cast<int>(bits) - 8);
    const Real radius_limit = ldexp(Real(1), 16 - static_cast<int>(bits));

    std::vector<Real> c(poly.coeffs.size());
    for (size_t i = 0; i < poly.coeffs.size(); ++i) c[i] = to_real(poly.coeffs[i]);
    std::vector<Real> cd(d);
    for (int i = 1; i <= d; ++i) cd[i - 1] = c[i] * i;

    std::vector<CertifiedRoot> out;

    if (d == 1) {
        Rat root = Rat(-poly.coeffs[0]) / Rat(poly.coeffs[1]);
        CertifiedRoot r;
        r.value = Cx(to_real(root));
        r.radius = ldexp(Real(1), -static_cast<int>(bits + kGuardBits / 2));
        r.is_real = true;
        r.conj_index = 0;
        out.push_back(std::move(r));
        return out;
    }

    // Cauchy bound on root moduli.
    Real bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, Real(abs(c[i]) / abs(c[d])));
    bound += 1;

    // Initial guesses on a slightly eccentric circle; the offset angle
    // avoids symmetry traps for even/palindromic polynomials.
    std::vector<Cx> z(d);
    const Real pi = boost::math::constants::pi<Real>();
    for (int j = 0; j < d; ++j) {
        Real angle = (2 * pi * j) / d + Real(0.3779) + Real(j) / (7 * d);
        Real rad = bound * (Real(1) + Real(j % 3) / 64);
        z[j] = Cx(rad * cos(angle), rad * sin(angle));
    }

    const int max_iter = 600;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        Real worst = 0;
        for (int j = 0; j < d; ++j) {
            Cx p = detail::eval_real_coeffs(c, z[j]);
            Cx dp = detail::eval_real_coeffs(cd, z[j]);
            if (dp.is_zero()) {
                z[j].re += ldexp(Real(1), -30);
                worst = 1;
                continue;
            }
            Cx w = p / dp;  // Newton correction
            Cx s;
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                s += Cx(Real(1), Real(0)) / (z[j] - z[k]);
            }
            Cx denom = Cx(Real(1), Real(0)) - w * s;
            Cx step = denom.is_zero() ? w : w / denom;
            z[j] -= step;
            Real rel = step.abs() / std::max(Real(1), z[j].abs());
            worst = std::max(worst, rel);
        }
        if (worst < target) break;
    }
    if (iter >= max_iter)
        throw RootFindingError("find_roots: no convergence within iteration budget for " + poly.str());

    // Newton polish and certification.  The radius covers both the Newton
    // quotient and the rounding noise of evaluating p near a root, where
    // cancellation makes the computed residual unreliable on its own.
    const int work_bits = static_cast<int>(mpfr_get_prec(c[0].backend().data()));
    std::vector<CertifiedRoot> roots(d);
    for (int j = 0; j < d; ++j) {
        for (int polish = 0; polish < 3; ++polish) {
            Cx p = detail::eval_real_coeffs(c, z[j]);
            Cx dp = detail::eval_real_coeffs(cd, z[j]);
            if (dp.is_zero()) break;
            z[j] -= p / dp;
        }
        Cx p = detail::eval_real_coeffs(c, z[j]);
        Cx dp = detail::eval_real_coeffs(cd, z[j]);
        // magnitude bound sum |c_i| max(1, |z|)^i for the evaluation noise
        Real az = std::max(Real(1), z[j].abs());
        Real mag = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) mag = mag * az + abs(*it);
        Real eval_err = mag * (4 * d + 4) * ldexp(Real(1), -work_bits);
        Real denom = dp.abs() - d * eval_err;
        if (denom <= 0)
            throw RootFindingError("find_roots: derivative below noise at approximation for " +
                                   poly.str());
        Real radius = 2 * d * ((p.abs() + eval_err) / denom);
        if (radius > radius_limit)
            throw RootFindingError("find_roots: root cluster indistinguishable at requested precision for " +
                                   poly.str());
        roots[j].value = z[j];
        roots[j].radius = radius;
    }

    // Identify real roots.  A nonreal root of a real polynomial pairs with
    // its conjugate; an imaginary part below the pairing gap must be zero.
    Real snap = ldexp(Real(1), -static_cast<int>(bits) / 2);
    for (auto& r : roots) {
        r.is_real = abs(r.value.im) <= std::max(snap, 4 * r.radius);
        if (r.is_real) r.value.im = 0;
    }

    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.is_real != b.is_real) return a.is_real;
        if (a.is_real) return a.value.re < b.value.re;
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return abs(a.value.im) < abs(b.value.im);
    });

    // Pair conjugates: after the sort the two members of a pair are
    // adjacent; put the positive-imaginary member first.
    int i = 0;
    while (i < d && roots[i].is_real) {
        roots[i].conj_index = i;
        ++i;
    }
    if ((d - i) % 2 != 0)
        throw RootFindingError("find_roots: conjugate pairing failed (odd complex root count)");
    for (; i < d; i += 2) {
        if (roots[i].value.im < 0) std::swap(roots[i], roots[i + 1]);
        Real gap = (roots[i].value - roots[i + 1].value.conj()).abs();
        if (gap > 2 * (roots[i].radius + roots[i + 1].radius))
            throw RootFindingError("find_roots: conjugate pairing failed");
        roots[i].conj_index = i + 1;
        roots[i + 1].conj_index = i;
    }
    return roots;
}

}  // namespace nfreg
