// Explicit regulator lower bounds in terms of the absolute discriminant,
// and the per-field verification that evaluates every applicable bound
// against the computed regulator.  Each evaluation carries its hypothesis
// flags; a bound whose hypothesis fails is reported as such, never
// silently marked as passed.
#pragma once

#include "nfreg/numeric.hpp"
#include "nfreg/towers.hpp"

#include <map>
#include <string>
#include <vector>

namespace nfreg {

enum class Verdict { verified, vacuous, hypothesis_failed, failed };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::vacuous: return "vacuous";
        case Verdict::hypothesis_failed: return "hypothesis-failed";
        case Verdict::failed: return "failed";
    }
    return "?";
}

struct BoundReport {
    std::string theorem;
    std::map<std::string, bool> hypotheses;   // named hypothesis flags
    Real bound{0};
    Real regulator{0};
    Real margin{0};
    Verdict verdict = Verdict::vacuous;
    std::string note;
};

// The regulator floor attained by the sextic field of discriminant -10051.
inline Real regulator_floor() { return Real("0.2052"); }

// (1/4) (log log d / log d)^3; negative (flagged vacuous) at d = 2.
inline Real voutier_constant(int d) {
    if (d < 2) throw std::invalid_argument("voutier_constant: d >= 2 required");
    Real ld = log(Real(d));
    Real r = log(ld) / ld;
    return r * r * r / 4;
}

namespace detail {

inline Real factorial_real(int n) {
    Real out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

// (2r)! / (r!)^3
inline Real binomial_factor(int r) {
    return factorial_real(2 * r) / boost::multiprecision::pow(factorial_real(r), 3);
}

inline void finalize(BoundReport& rep, const Real& reg) {
    rep.regulator = reg;
    rep.margin = reg - rep.bound;
    for (const auto& [name, ok] : rep.hypotheses) {
        if (!ok) {
            rep.verdict = Verdict::hypothesis_failed;
            return;
        }
    }
    rep.verdict = rep.margin >= -(Real(8) * working_error_bound()) ? Verdict::verified : Verdict::failed;
}

}  // namespace detail

// log(gamma_d * D) for the three gamma_d normalizations in play.
enum class GammaChoice { degree_power, half_log2_power, classic };

inline Real log_gamma_inverse(GammaChoice g, int d) {
    Real ld = log(Real(d));
    switch (g) {
        case GammaChoice::degree_power:  // gamma_d = d^-d
            return d * ld;
        case GammaChoice::half_log2_power: {  // gamma_d = d^{-d^{log2 d}/2}
            Real e = exp(ld * (ld / log(Real(2))));  // d^{log2 d}
            return e / 2 * ld;
        }
        case GammaChoice::classic: {  // gamma_d = d^{-d^{log2 8d}}
            Real e = exp(ld * (log(Real(8 * d)) / log(Real(2))));  // d^{log2 8d}
            return e * ld;
        }
    }
    throw std::logic_error("unreachable");
}

inline Real log_gamma_d(GammaChoice g, int d, const Int& disc_abs) {
    return log_positive(to_real(disc_abs)) - log_gamma_inverse(g, d);
}

// 2^{-4d^2} (log(gamma_d D))^{r - rho} with the classic gamma_d.
inline BoundReport silverman_bound(int d, const Int& disc_abs, int r, int rho_val,
                                   const Real& reg) {
    if (d < 2) throw std::invalid_argument("silverman_bound: d >= 2 required");
    BoundReport rep;
    rep.theorem = "silverman";
    Real lg = log_gamma_d(GammaChoice::classic, d, disc_abs);
    rep.hypotheses["gamma_D_above_one"] = lg > 0;
    if (lg > 0 || r == rho_val) {
        Real base = ldexp(Real(1), -4 * d * d);
        rep.bound = base * boost::multiprecision::pow(lg, r - rho_val);
    }
    detail::finalize(rep, reg);
    return rep;
}

// ((2r)!/(r!)^3) (log log d / (2 log d))^{3 rho} (log(gamma_d D)/(4d))^{r - rho},
// gamma_d = d^-d; requires d >= 3 and a non-CM field.
inline BoundReport theorem_rho_bound(int d, const Int& disc_abs, int r, int rho_val,
                                     const Real& reg) {
    if (d < 3) throw std::invalid_argument("theorem_rho_bound: d >= 3 required");
    if (r == rho_val) throw std::invalid_argument("theorem_rho_bound: CM field (rho = r)");
    BoundReport rep;
    rep.theorem = "regulator-lower-1";
    Real lg = log_gamma_d(GammaChoice::degree_power, d, disc_abs);
    rep.hypotheses["gamma_D_above_one"] = lg > 0;
    if (lg > 0) {
        Real ld = log(Real(d));
        Real voutier_term = boost::multiprecision::pow(log(ld) / (2 * ld), 3 * rho_val);
        Real disc_term = boost::multiprecision::pow(lg / (4 * d), r - rho_val);
        rep.bound = detail::binomial_factor(r) * voutier_term * disc_term;
    }
    detail::finalize(rep, reg);
    return rep;
}

// (0.2/r!) (2d log(gamma_d D) / ((d-2) d^{log2 d}))^{r - rho},
// gamma_d = d^{-d^{log2 d}/2}; requires d >= 3 and a non-CM field.
inline BoundReport theorem_alpha_bound(int d, const Int& disc_abs, int r, int rho_val,
                                       const Real& reg) {
    if (d < 3) throw std::invalid_argument("theorem_alpha_bound: d >= 3 required");
    if (r == rho_val) throw std::invalid_argument("theorem_alpha_bound: CM field (rho = r)");
    BoundReport rep;
    rep.theorem = "regulator-lower-2";
    Real lg = log_gamma_d(GammaChoice::half_log2_power, d, disc_abs);
    rep.hypotheses["gamma_D_above_one"] = lg > 0;
    if (lg > 0) {
        Real ld = log(Real(d));
        Real dl2d = exp(ld * (ld / log(Real(2))));  // d^{log2 d}
        Real ratio = (2 * d * lg) / ((d - 2) * dl2d);
        rep.bound = Real("0.2") / detail::factorial_real(r) *
                    boost::multiprecision::pow(ratio, r - rho_val);
    }
    detail::finalize(rep, reg);
    return rep;
}

// ((2r)!/(r!)^3) d^{rho-1} / (1050 rho^5 log(1.5 d))^{rho^2 (rho+1)^2}
//   * (log(d^-d D)/(4d))^{r - rho}.
// The denominator grouping "log (1.5)d" is read as log(1.5 * d); the
// report notes the alternative reading.
inline BoundReport amoroso_explicit_bound(int d, const Int& disc_abs, int r, int rho_val,
                                          const Real& reg) {
    if (d < 3) throw std::invalid_argument("amoroso_explicit_bound: d >= 3 required");
    if (r == rho_val) throw std::invalid_argument("amoroso_explicit_bound: CM field (rho = r)");
    BoundReport rep;
    rep.theorem = "amoroso-explicit";
    rep.note = "denominator parsed as (1050 rho^5 log(1.5 d))^{rho^2 (rho+1)^2}; "
               "alternative reading (log 1.5) * d not used";
    Real lg = log_gamma_d(GammaChoice::degree_power, d, disc_abs);
    rep.hypotheses["gamma_D_above_one"] = lg > 0;
    rep.hypotheses["rho_positive"] = rho_val >= 1;
    if (lg > 0 && rho_val >= 1) {
        Real denom_base = 1050 * boost::multiprecision::pow(Real(rho_val), 5) * log(Real(3) * d / 2);
        int denom_exp = rho_val * rho_val * (rho_val + 1) * (rho_val + 1);
        Real disc_term = boost::multiprecision::pow(lg / (4 * d), r - rho_val);
        rep.bound = detail::binomial_factor(r) * boost::multiprecision::pow(Real(d), rho_val - 1) /
                    boost::multiprecision::pow(denom_base, denom_exp) * disc_term;
    }
    detail::finalize(rep, reg);
    return rep;
}

// (1/2) log(D/4) <= Reg for totally real quadratic fields.
inline BoundReport quadratic_bound(const Int& disc_abs, const Real& reg) {
    BoundReport rep;
    rep.theorem = "quadratic";
    rep.bound = (log_positive(to_real(disc_abs)) - log(Real(4))) / 2;
    detail::finalize(rep, reg);
    if (rep.verdict == Verdict::verified && rep.bound <= 0) rep.verdict = Verdict::vacuous;
    return rep;
}

// In the small-discriminant regime gamma_d D <= 1, the floor gives
// log D < 5 log(gamma_d^-1) Reg.
inline BoundReport small_disc_bound(GammaChoice g, int d, const Int& disc_abs, const Real& reg) {
    BoundReport rep;
    rep.theorem = (g == GammaChoice::degree_power)      ? "small-disc-1"
                  : (g == GammaChoice::half_log2_power) ? "small-disc-2"
                                                        : "small-disc-classic";
    Real lg = log_gamma_d(g, d, disc_abs);
    rep.hypotheses["gamma_D_at_most_one"] = lg <= 0;
    if (lg > 0) {
        detail::finalize(rep, reg);
        return rep;
    }
    // verified means: log D < 5 log(gamma^-1) Reg
    Real logd = log_positive(to_real(disc_abs));
    Real rhs = 5 * log_gamma_inverse(g, d) * reg;
    rep.bound = 0;  // not a direct lower bound on Reg; margin carries the slack
    rep.regulator = reg;
    rep.margin = rhs - logd;
    rep.verdict = rep.margin > 0 ? Verdict::verified : Verdict::failed;
    if (disc_abs == 1) rep.verdict = Verdict::verified;  // log 1 = 0 < positive rhs
    return rep;
}

// Friedman's absolute floor, with a small tolerance for the floor value
// itself being a truncated decimal.
inline BoundReport friedman_floor_report(const Real& reg) {
    BoundReport rep;
    rep.theorem = "friedman-floor";
    rep.bound = regulator_floor();
    rep.regulator = reg;
    rep.margin = reg - rep.bound;
    rep.verdict = rep.margin >= -Real("1e-4") ? Verdict::verified : Verdict::failed;
    return rep;
}

}  // namespace nfreg
