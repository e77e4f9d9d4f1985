// Seeded randomized check suites over a field: exact identities run on
// pseudorandom elements and vectors.  Deterministic given (field, seed).
#pragma once

#include "nfreg/heights.hpp"
#include "nfreg/ideal_disc.hpp"
#include "nfreg/number_field.hpp"
#include "nfreg/units.hpp"

#include <random>
#include <string>
#include <vector>

namespace nfreg {

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    Real worst_deviation{0};
    bool pass = true;
};

inline FieldElement random_element(const NumberFieldPtr& field, std::mt19937_64& rng,
                                   int max_abs_num = 3) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, 2);
    for (;;) {
        std::vector<Rat> c(field->degree());
        bool nonzero = false;
        for (auto& x : c) {
            x = Rat(num(rng), den(rng));
            nonzero |= (x != 0);
        }
        if (nonzero) return FieldElement(field, std::move(c));
    }
}

// d entries, resampled until they are Q-linearly independent.
inline FieldVector random_independent_vector(const NumberFieldPtr& field, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<FieldElement> entries;
        for (int i = 0; i < field->degree(); ++i) entries.push_back(random_element(field, rng));
        FieldVector vec(field, std::move(entries));
        if (entries_independent(vec)) return vec;
    }
    throw FieldDataError(field->label + ": could not sample an independent vector");
}

// |h_places - h_mahler| <= tol on random nonzero elements.
inline SuiteResult suite_height_dual(const NumberFieldPtr& field, int trials, std::mt19937_64& rng,
                                     const Real& tol) {
    SuiteResult out{"height-dual-agreement", trials};
    for (int i = 0; i < trials; ++i) {
        FieldElement e = random_element(field, rng);
        Real dev = abs(weil_height_places(e).value - weil_height_mahler(e).value);
        if (dev > out.worst_deviation) out.worst_deviation = dev;
        if (dev > tol) ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

// Exact identity f_k = index^2 D_k plus the Hadamard-side height bound on
// random independent vectors.
inline SuiteResult suite_prop41(const NumberFieldPtr& field, int trials, std::mt19937_64& rng) {
    SuiteResult out{"ideal-index-identity", trials};
    for (int i = 0; i < trials; ++i) {
        FieldVector vec = random_independent_vector(field, rng);
        Prop41Report rep = verify_prop41(vec);
        if (!rep.identity_holds || !rep.height_bound.holds) ++out.failures;
        Real slack = rep.height_bound.margin;
        if (out.trials > 0 && (i == 0 || slack < out.worst_deviation)) out.worst_deviation = slack;
    }
    out.pass = out.failures == 0;
    return out;
}

// f_k(alpha beta) = f_k(beta) and [J:M](alpha beta) = [J:M](beta), exactly,
// for random nonzero alpha.
inline SuiteResult suite_scaling_invariance(const NumberFieldPtr& field, int trials,
                                            std::mt19937_64& rng) {
    SuiteResult out{"scaling-invariance", trials};
    FieldVector vec = random_independent_vector(field, rng);
    Int base_fk = f_k(vec);
    Int base_idx = lattice_index(vec);
    for (int i = 0; i < trials; ++i) {
        FieldElement alpha = random_element(field, rng);
        std::vector<FieldElement> scaled;
        scaled.reserve(vec.size());
        for (const auto& e : vec.entries) scaled.push_back(alpha * e);
        FieldVector sv(field, std::move(scaled));
        if (f_k(sv) != base_fk || lattice_index(sv) != base_idx) ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

// finite_part is independent of the denominator-clearing scale, exactly.
inline SuiteResult suite_scale_independence(const NumberFieldPtr& field, int trials,
                                            std::mt19937_64& rng) {
    SuiteResult out{"finite-part-scale-independence", trials};
    for (int i = 0; i < trials; ++i) {
        std::vector<FieldElement> entries;
        for (int j = 0; j < 2; ++j) entries.push_back(random_element(field, rng));
        FieldVector vec(field, std::move(entries));
        if (!vec.has_nonzero_entry()) continue;
        Int t = clearing_denominator(vec);
        if (finite_part(vec, t) != finite_part(vec, 2 * t) ||
            finite_part(vec, t) != finite_part(vec, 3 * t))
            ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

// Regulator independent of which archimedean place is dropped.
inline SuiteResult suite_regulator_drop_place(const UnitSystem& sys, const Real& tol) {
    SuiteResult out{"regulator-drop-place", static_cast<int>(sys.field()->places.size())};
    Real ref = regulator(sys).value;
    for (size_t w = 0; w < sys.field()->places.size(); ++w) {
        Real v = regulator(sys, static_cast<int>(w)).value;
        Real dev = abs(v - ref);
        if (dev > out.worst_deviation) out.worst_deviation = dev;
        if (dev > tol) ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

// Projective invariance of the Arakelov height: log H(eta xi) = log H(xi).
inline SuiteResult suite_projective_invariance(const NumberFieldPtr& field, int trials,
                                               std::mt19937_64& rng, const Real& tol) {
    SuiteResult out{"arakelov-projective-invariance", trials};
    for (int i = 0; i < trials; ++i) {
        std::vector<FieldElement> entries;
        for (int j = 0; j < 2; ++j) entries.push_back(random_element(field, rng));
        FieldVector vec(field, entries);
        if (!vec.has_nonzero_entry()) continue;
        FieldElement eta = random_element(field, rng);
        std::vector<FieldElement> scaled;
        for (const auto& e : entries) scaled.push_back(eta * e);
        Real dev = abs(arakelov_height(FieldVector(field, scaled)).value -
                       arakelov_height(vec).value);
        if (dev > out.worst_deviation) out.worst_deviation = dev;
        if (dev > tol) ++out.failures;
    }
    out.pass = out.failures == 0;
    return out;
}

}  // namespace nfreg
