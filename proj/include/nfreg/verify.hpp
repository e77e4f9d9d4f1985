// Per-field verification: evaluates every applicable explicit bound
// against the computed regulator, with CM detection and small-discriminant
// routing, plus the height-vs-discriminant checks for primitive units.
#pragma once

#include "nfreg/bounds.hpp"
#include "nfreg/heights.hpp"
#include "nfreg/towers.hpp"
#include "nfreg/units.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nfreg {

struct FieldVerification {
    std::string label;
    Real regulator_value{0};
    int rho_value = 0;
    bool cm = false;
    std::vector<BoundReport> bounds;
    std::vector<MarginReport> height_checks;

    bool any_failed() const {
        for (const auto& b : bounds)
            if (b.verdict == Verdict::failed) return true;
        for (const auto& h : height_checks)
            if (!h.holds && !h.vacuous) return true;
        return false;
    }
};

inline BoundReport cm_inapplicable(const std::string& theorem) {
    BoundReport rep;
    rep.theorem = theorem;
    rep.hypotheses["non_cm"] = false;
    rep.verdict = Verdict::hypothesis_failed;
    rep.note = "CM field: rho(k) = r(k), the discriminant does not enter";
    return rep;
}

inline FieldVerification verify_field(const NumberFieldPtr& field, const SubfieldLattice& lattice,
                                      const UnitSystem& units) {
    FieldVerification out;
    out.label = field->label;
    const int d = field->degree();
    const int r = field->unit_rank();
    const Int disc_abs = field->abs_disc();
    Real reg = regulator(units).value;
    out.regulator_value = reg;
    out.rho_value = rho(lattice);
    out.cm = (out.rho_value == r);

    out.bounds.push_back(friedman_floor_report(reg));

    if (d == 2) {
        if (field->r1 == 2) out.bounds.push_back(quadratic_bound(disc_abs, reg));
        out.bounds.push_back(silverman_bound(d, disc_abs, r, out.rho_value, reg));
        if (log_gamma_d(GammaChoice::classic, d, disc_abs) <= 0)
            out.bounds.push_back(small_disc_bound(GammaChoice::classic, d, disc_abs, reg));
    } else if (d >= 3) {
        out.bounds.push_back(silverman_bound(d, disc_abs, r, out.rho_value, reg));
        if (out.cm) {
            out.bounds.push_back(cm_inapplicable("regulator-lower-1"));
            out.bounds.push_back(cm_inapplicable("regulator-lower-2"));
            out.bounds.push_back(cm_inapplicable("amoroso-explicit"));
        } else {
            out.bounds.push_back(theorem_rho_bound(d, disc_abs, r, out.rho_value, reg));
            out.bounds.push_back(theorem_alpha_bound(d, disc_abs, r, out.rho_value, reg));
            out.bounds.push_back(amoroso_explicit_bound(d, disc_abs, r, out.rho_value, reg));
        }
        for (GammaChoice g :
             {GammaChoice::degree_power, GammaChoice::half_log2_power, GammaChoice::classic})
            if (log_gamma_d(g, d, disc_abs) <= 0)
                out.bounds.push_back(small_disc_bound(g, d, disc_abs, reg));
    }

    // height >= discriminant bound for units generating the whole field
    for (const auto& u : units.units()) {
        IntPolynomial mp = minimal_poly(u);
        if (mp.degree() == d && d >= 2)
            out.height_checks.push_back(height_discriminant_lower(u, disc_abs));
    }

    std::sort(out.bounds.begin(), out.bounds.end(),
              [](const BoundReport& a, const BoundReport& b) { return a.theorem < b.theorem; });
    return out;
}

}  // namespace nfreg
