// Weil and Arakelov heights.  The Weil height comes in two independently
// computed forms (sum over places / Mahler measure of the minimal
// polynomial) whose agreement is a library-wide self check.  The finite
// part of the Arakelov height is an exact rational obtained from one
// integer lattice determinant; only logarithms are approximate.
#pragma once

#include "nfreg/lattice.hpp"
#include "nfreg/number_field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nfreg {

struct FieldVector {
    NumberFieldPtr field;
    std::vector<FieldElement> entries;

    FieldVector(NumberFieldPtr f, std::vector<FieldElement> e)
        : field(std::move(f)), entries(std::move(e)) {
        for (const auto& x : entries)
            if (x.field() != field) throw std::invalid_argument("vector entries from different fields");
    }

    bool has_nonzero_entry() const {
        for (const auto& x : entries)
            if (!x.is_zero()) return true;
        return false;
    }
    size_t size() const { return entries.size(); }
};

// A nonnegative logarithmic height with a conservative error bound.
struct HeightValue {
    Real value;
    Real error_bound;
};

struct MarginReport {
    std::string check;
    Real lhs;      // quantity bounded above
    Real rhs;      // bound
    Real margin;   // rhs - lhs
    bool holds;
    bool vacuous = false;
};

// ----------------------------------------------------------------------
// finite places, exactly
// ----------------------------------------------------------------------

// Norm [O_k : J] of the integral ideal generated by the (integral) entries:
// the covolume of the Z-span of all products entry_i * omega_j.
inline Int integral_ideal_norm(const FieldVector& vec) {
    const auto& field = vec.field;
    const int d = field->degree();
    IntMatrix rows;
    rows.reserve(vec.entries.size() * d);
    for (const auto& e : vec.entries) {
        if (e.is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            FieldElement omega(field, field->integral_basis[j]);
            FieldElement prod = e * omega;
            std::vector<Rat> ic = prod.integral_coords();
            std::vector<Int> row(d);
            for (int c = 0; c < d; ++c) {
                if (denominator(ic[c]) != 1)
                    throw FieldDataError(field->label +
                                         ": product of integral elements left the order");
                row[c] = numerator(ic[c]);
            }
            rows.push_back(std::move(row));
        }
    }
    return hnf_det(hermite_normal_form(std::move(rows)));
}

// Smallest positive integer t with t * entry integral for every entry.
inline Int clearing_denominator(const FieldVector& vec) {
    Int t = 1;
    for (const auto& e : vec.entries)
        for (const Rat& c : e.integral_coords()) t = lcm(t, denominator(c));
    return t;
}

// prod_{v not| infn} ||xi||_v^{d_v} as an exact rational, computed as
// t^d / N(J(t xi)) for any positive integer t clearing denominators.
inline Rat finite_part(const FieldVector& vec, const Int& scale = 0) {
    if (!vec.has_nonzero_entry()) throw std::invalid_argument("finite_part: zero vector");
    Int t = scale;
    if (t == 0) t = clearing_denominator(vec);
    if (t <= 0) throw std::invalid_argument("finite_part: scale must be positive");
    std::vector<FieldElement> scaled;
    scaled.reserve(vec.entries.size());
    for (const auto& e : vec.entries) scaled.push_back(e * Rat(t));
    Int n = integral_ideal_norm(FieldVector(vec.field, std::move(scaled)));
    return Rat(pow(t, vec.field->degree())) / Rat(n);
}

// ----------------------------------------------------------------------
// Weil height
// ----------------------------------------------------------------------

// h(alpha) from the primitive minimal polynomial f of degree m:
// (log|lead f| + sum log+ |root|) / m.
inline HeightValue weil_height_mahler(const FieldElement& elem) {
    if (elem.is_zero()) throw std::invalid_argument("weil height of zero");
    IntPolynomial f = minimal_poly(elem);
    const int m = f.degree();
    auto roots = find_roots(f, working_precision() + kGuardBits / 2);
    Real acc = log_positive(to_real(f.leading()));
    for (const auto& r : roots) acc += log_plus(r.value.abs());
    return {acc / m, working_error_bound()};
}

// h(alpha) as sum over places: archimedean terms from the certified
// embeddings of the ambient field, finite contribution exactly from the
// leading coefficient of the primitive minimal polynomial.
inline HeightValue weil_height_places(const FieldElement& elem) {
    if (elem.is_zero()) throw std::invalid_argument("weil height of zero");
    const auto& field = elem.field();
    const int d = field->degree();
    Real arch = 0;
    for (const Place& p : field->places)
        arch += Real(p.local_degree) * log_plus(elem.abs_at(p));
    arch /= d;
    IntPolynomial f = minimal_poly(elem);
    Real fin = log_positive(to_real(f.leading())) / f.degree();
    return {arch + fin, working_error_bound()};
}

// ----------------------------------------------------------------------
// Arakelov height
// ----------------------------------------------------------------------

// log H(xi) = sum_{v | infty} (d_v/d) log ||xi||_v + (1/d) log(finite part),
// with ||xi||_v the Euclidean norm of the embedded coordinate vector.
inline HeightValue arakelov_height(const FieldVector& vec) {
    if (!vec.has_nonzero_entry()) throw std::invalid_argument("arakelov height of zero vector");
    const auto& field = vec.field;
    const int d = field->degree();
    Real arch = 0;
    for (const Place& p : field->places) {
        Real sq = 0;
        for (const auto& e : vec.entries) sq += e.embed(p.embedding_index).norm_sq();
        arch += Real(p.local_degree) * log_positive(sqrt(sq));
    }
    arch /= d;
    Real fin = log(to_real(finite_part(vec))) / d;
    return {arch + fin, working_error_bound()};
}

// ----------------------------------------------------------------------
// special vectors and the height lemmas
// ----------------------------------------------------------------------

inline FieldVector power_vector(const FieldElement& elem, int count) {
    if (count < 1) throw std::invalid_argument("power_vector: count must be >= 1");
    std::vector<FieldElement> entries;
    entries.reserve(count);
    FieldElement cur = FieldElement::one(elem.field());
    for (int i = 0; i < count; ++i) {
        entries.push_back(cur);
        if (i + 1 < count) cur = cur * elem;
    }
    return FieldVector(elem.field(), std::move(entries));
}

// Entries alpha_1^{n_1} ... alpha_M^{n_M} for 0 <= n_m < N_m, ordered by
// the mixed-radix index (n_1, ..., n_M) with n_M varying fastest.  An
// empty generator list is the degenerate tower: the single entry 1.
inline FieldVector tensor_vector(const NumberFieldPtr& field,
                                 const std::vector<FieldElement>& generators,
                                 const std::vector<int>& degrees) {
    if (generators.size() != degrees.size())
        throw std::invalid_argument("tensor_vector: generator/degree count mismatch");
    if (generators.empty())
        return FieldVector(field, {FieldElement::one(field)});
    long total = 1;
    for (int n : degrees) {
        if (n < 1) throw std::invalid_argument("tensor_vector: degrees must be >= 1");
        total *= n;
    }
    std::vector<FieldElement> entries;
    entries.reserve(total);
    const size_t M = generators.size();
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        std::vector<int> exps(M, 0);
        for (size_t m = M; m-- > 0;) {
            exps[m] = static_cast<int>(rem % degrees[m]);
            rem /= degrees[m];
        }
        FieldElement e = FieldElement::one(field);
        for (size_t m = 0; m < M; ++m)
            if (exps[m] > 0) e = e * generators[m].pow(Int(exps[m]));
        entries.push_back(std::move(e));
    }
    return FieldVector(field, std::move(entries));
}

// log H((1, alpha, ..., alpha^{M-1})) <= (1/2) log M + (M-1) h(alpha)
inline MarginReport check_power_vector_bound(const FieldElement& elem, int count) {
    HeightValue lhs = arakelov_height(power_vector(elem, count));
    Real rhs = log(Real(count)) / 2;
    if (count > 1 && !elem.is_zero()) rhs += Real(count - 1) * weil_height_places(elem).value;
    MarginReport r{"power-vector-bound", lhs.value, rhs, rhs - lhs.value, false};
    r.holds = r.margin >= -(lhs.error_bound + working_error_bound());
    return r;
}

struct TensorHeightReport {
    Real log_h_tensor;            // log H(beta)
    Real sum_log_h_factors;       // sum of log H(a_m)
    Real multiplicativity_gap;    // |difference|, should be within error
    bool multiplicative;
    MarginReport degree_bound;    // the (1/2) log [l:k] + sum (N_m - 1) h bound
};

// Exact multiplicativity H(beta) = prod H(a_m) plus the degree bound.
inline TensorHeightReport check_tensor_height(const std::vector<FieldElement>& generators,
                                              const std::vector<int>& degrees) {
    if (generators.empty()) throw std::invalid_argument("check_tensor_height: no generators");
    FieldVector beta = tensor_vector(generators.front().field(), generators, degrees);
    HeightValue hb = arakelov_height(beta);
    Real sum = 0;
    Real err = hb.error_bound;
    Real bound = 0;
    long total = 1;
    for (size_t m = 0; m < generators.size(); ++m) {
        HeightValue hm = arakelov_height(power_vector(generators[m], degrees[m]));
        sum += hm.value;
        err += hm.error_bound;
        total *= degrees[m];
        if (degrees[m] > 1)
            bound += Real(degrees[m] - 1) * weil_height_places(generators[m]).value;
    }
    bound += log(Real(total)) / 2;
    TensorHeightReport out{hb.value, sum, abs(hb.value - sum), false,
                           {"tensor-degree-bound", hb.value, bound, bound - hb.value, false}};
    out.multiplicative = out.multiplicativity_gap <= 4 * err + working_error_bound();
    out.degree_bound.holds = out.degree_bound.margin >= -(err + working_error_bound());
    return out;
}

// h(alpha) >= log(D / m^m) / (2m(m-1)) for m = [Q(alpha):Q] >= 2, where D
// is the absolute discriminant of Q(alpha), supplied as data.
inline MarginReport height_discriminant_lower(const FieldElement& elem, const Int& disc_abs) {
    if (elem.is_zero()) throw std::invalid_argument("height_discriminant_lower: zero element");
    if (disc_abs <= 0) throw std::invalid_argument("height_discriminant_lower: D must be positive");
    IntPolynomial f = minimal_poly(elem);
    const int m = f.degree();
    if (m < 2)
        throw std::invalid_argument("height_discriminant_lower: rational element (m = 1)");
    Real bound = (log_positive(to_real(disc_abs)) - m * log(Real(m))) / (2 * m * (m - 1));
    Real h = weil_height_places(elem).value;
    MarginReport r{"height-disc-lower", bound, h, h - bound, false};
    r.holds = r.margin >= -2 * working_error_bound();
    r.vacuous = bound <= 0;
    return r;
}

}  // namespace nfreg
