// Arbitrary-precision scalar types: exact integers/rationals (GMP) and
// dynamic-precision reals (MPFR), plus a minimal complex type on top of
// the real one.  All approximate computation in the library runs at a
// single global working precision with a fixed number of guard bits.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace nfreg {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

namespace detail {
inline unsigned& working_bits_ref() {
    static unsigned bits = 128;
    return bits;
}
}  // namespace detail

// Guard bits added on top of the requested precision for all internal
// arithmetic, so that reported error bounds stay conservative.
inline constexpr unsigned kGuardBits = 96;

// Sets the global working precision to `bits` fractional bits.  Values
// constructed afterwards carry bits + kGuardBits of mantissa.
inline void set_working_precision(unsigned bits) {
    if (bits < 24 || bits > 1u << 20)
        throw std::invalid_argument("working precision out of range: " + std::to_string(bits));
    detail::working_bits_ref() = bits;
    const unsigned total = bits + kGuardBits;
    const unsigned digits10 = static_cast<unsigned>(total * 0.30103) + 3;
    Real::default_precision(digits10);
}

inline unsigned working_precision() { return detail::working_bits_ref(); }

// Conservative bound on accumulated rounding error of any single library
// operation chain, as an absolute value: 2^-P with P the working precision.
// The guard bits keep true rounding error far below this.
inline Real working_error_bound() {
    return ldexp(Real(1), -static_cast<int>(working_precision()));
}

inline Real to_real(const Rat& q) { return Real(q); }
inline Real to_real(const Int& n) { return Real(n); }

inline Real log_positive(const Real& x) {
    if (x <= 0) throw std::domain_error("log of nonpositive value");
    return log(x);
}

// max(0, log x)
inline Real log_plus(const Real& x) {
    if (x <= 1) return Real(0);
    return log(x);
}

// Complex numbers over the dynamic-precision reals.  Only the operations
// the root finder and embedding evaluations need.
struct Cx {
    Real re{0}, im{0};

    Cx() = default;
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cx(const Real& r) : re(r), im(0) {}

    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cx operator/(const Cx& o) const {
        Real d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("complex division by zero");
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx operator-() const { return {-re, -im}; }

    Cx conj() const { return {re, -im}; }
    Real norm_sq() const { return re * re + im * im; }
    Real abs() const {
        using boost::multiprecision::hypot;
        return hypot(re, im);
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline Cx operator*(const Real& s, const Cx& z) { return {s * z.re, s * z.im}; }

}  // namespace nfreg
