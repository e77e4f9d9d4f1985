// Unit systems and regulators.  A unit system is validated at ingestion:
// integral coordinates, |norm| = 1, and a nonsingular log-embedding
// matrix.  The regulator is |det| of the r x r matrix (d_w log ||u_j||_w)
// over all but one archimedean place; independence of the dropped place is
// a tested property.
#pragma once

#include "nfreg/heights.hpp"
#include "nfreg/lattice.hpp"
#include "nfreg/number_field.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace nfreg {

struct RegulatorValue {
    Real value;
    Real error_bound;
};

namespace detail {

inline Real abs_det_real(std::vector<std::vector<Real>> a) {
    const size_t n = a.size();
    if (n == 0) return Real(1);  // empty determinant convention
    Real out = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        for (size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[p][k])) p = i;
        if (a[p][k] == 0) return Real(0);
        std::swap(a[p], a[k]);
        out *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Real m = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
        }
    }
    return abs(out);
}

}  // namespace detail

// d_w log ||u||_w at place w.
inline Real log_norm_at(const FieldElement& u, const Place& p) {
    return Real(p.local_degree) * log_positive(u.abs_at(p));
}

class UnitSystem {
  public:
    UnitSystem(NumberFieldPtr field, std::vector<FieldElement> units, Int torsion_order)
        : field_(std::move(field)), units_(std::move(units)), torsion_order_(std::move(torsion_order)) {
        validate();
    }

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& units() const { return units_; }
    const Int& torsion_order() const { return torsion_order_; }
    int rank() const { return static_cast<int>(units_.size()); }

  private:
    void validate() const {
        if (static_cast<int>(units_.size()) != field_->unit_rank())
            throw FieldDataError(field_->label + ": unit count " + std::to_string(units_.size()) +
                                 " does not match unit rank " + std::to_string(field_->unit_rank()));
        if (torsion_order_ < 2 || torsion_order_ % 2 != 0)
            throw FieldDataError(field_->label + ": torsion order must be a positive even integer");
        for (const auto& u : units_) {
            if (!u.is_integral())
                throw FieldDataError(field_->label + ": unit is not an algebraic integer");
            Rat n = norm_and_trace(u).first;
            if (!(n == 1 || n == -1))
                throw FieldDataError(field_->label + ": 'unit' has norm " + n.str());
        }
        if (!units_.empty()) {
            std::vector<std::vector<Real>> m;
            const int r = field_->unit_rank();
            for (int row = 0; row < r; ++row) {
                std::vector<Real> line;
                for (const auto& u : units_) line.push_back(log_norm_at(u, field_->places[row]));
                m.push_back(std::move(line));
            }
            Real det = detail::abs_det_real(std::move(m));
            if (det < ldexp(Real(1), -static_cast<int>(working_precision()) / 2))
                throw FieldDataError(field_->label + ": units are not multiplicatively independent");
        }
    }

    NumberFieldPtr field_;
    std::vector<FieldElement> units_;
    Int torsion_order_;
};

// Regulator with a configurable dropped place (default: the last one).
inline RegulatorValue regulator(const UnitSystem& sys, int dropped_place = -1) {
    const auto& field = sys.field();
    const int r = field->unit_rank();
    if (r == 0) return {Real(1), Real(0)};
    const int n_places = static_cast<int>(field->places.size());
    if (dropped_place < 0) dropped_place = n_places - 1;
    if (dropped_place >= n_places) throw std::invalid_argument("regulator: bad place index");
    std::vector<std::vector<Real>> m;
    for (int w = 0; w < n_places; ++w) {
        if (w == dropped_place) continue;
        std::vector<Real> line;
        for (const auto& u : sys.units()) line.push_back(log_norm_at(u, field->places[w]));
        m.push_back(std::move(line));
    }
    Real det = detail::abs_det_real(std::move(m));
    if (det == 0) throw FieldDataError(field->label + ": singular regulator matrix");
    return {det, working_error_bound()};
}

// Weil height of an algebraic integer with |norm| = 1: finite places
// contribute nothing, so the certified embeddings suffice.
inline Real unit_height(const FieldElement& u) {
    const auto& field = u.field();
    Real acc = 0;
    for (const Place& p : field->places)
        acc += Real(p.local_degree) * log_plus(u.abs_at(p));
    return acc / field->degree();
}

struct UnitSearchResult {
    std::vector<FieldElement> units;           // r independent products, ascending height
    std::vector<std::vector<long>> exponents;  // exponent vectors in the input system
    Real product;                              // prod of d * h(beta_i)
    Real bound;                                // r! * Reg(k)
    Real margin;                               // bound - product
    bool certified;                            // product <= bound within error
};

// Certifying search over products prod u_i^{e_i}, |e_i| <= box, for r
// multiplicatively independent elements with small height product.
// Greedy selection keyed on (quantized height, lexicographic exponents);
// independence is an exact integer rank test on exponent vectors.
inline UnitSearchResult search_small_units(const UnitSystem& sys, long box = 5) {
    const int r = sys.rank();
    UnitSearchResult out;
    out.product = 1;
    out.bound = 1;
    out.margin = 0;
    out.certified = true;
    if (r == 0) return out;  // empty product, 1 <= 1
    if (box < 1) throw std::invalid_argument("search_small_units: box must be >= 1");

    struct Candidate {
        std::vector<long> exps;
        FieldElement elem;
        Real height;
        Int key;  // height quantized to 2^-64
    };
    std::vector<Candidate> cands;
    std::vector<long> e(r, -box);
    while (true) {
        bool all_zero = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
        if (!all_zero) {
            FieldElement prod = FieldElement::one(sys.field());
            for (int i = 0; i < r; ++i)
                if (e[i] != 0) prod = prod * sys.units()[i].pow(Int(e[i]));
            Real h = unit_height(prod);
            Int key = Int(floor(ldexp(h, 64)));
            cands.push_back({e, std::move(prod), h, key});
        }
        int pos = r - 1;
        while (pos >= 0 && e[pos] == box) e[pos--] = -box;
        if (pos < 0) break;
        ++e[pos];
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.exps < b.exps;
    });

    IntMatrix chosen;
    for (const auto& c : cands) {
        if (static_cast<int>(out.units.size()) == r) break;
        IntMatrix trial = chosen;
        std::vector<Int> row(r);
        for (int i = 0; i < r; ++i) row[i] = c.exps[i];
        trial.push_back(std::move(row));
        if (int_rank(trial) != trial.size()) continue;
        chosen = std::move(trial);
        out.units.push_back(c.elem);
        out.exponents.push_back(c.exps);
    }

    const int d = sys.field()->degree();
    Real prod = 1;
    for (const auto& u : out.units) prod *= d * unit_height(u);
    out.product = prod;
    Real reg = regulator(sys).value;
    Real fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    out.bound = fact * reg;
    out.margin = out.bound - out.product;
    out.certified = static_cast<int>(out.units.size()) == r &&
                    out.margin >= -(Real(8) * working_error_bound());
    return out;
}

}  // namespace nfreg
