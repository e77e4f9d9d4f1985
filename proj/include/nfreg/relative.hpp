// Relative extensions l/k given by an exact embedding of coordinate
// spaces: the relative norm as a determinant over the base field, the
// exact torsion test behind relative-unit membership, relative regulators
// with a free choice of distinguished places, and the combined
// product-of-heights bound for ordinary plus relative units.
#pragma once

#include "nfreg/number_field.hpp"
#include "nfreg/units.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nfreg {

// Exact Kronecker test: an algebraic number is a root of unity iff its
// minimal polynomial is cyclotomic.  The numeric pass is only a shortcut;
// the decision is the exact polynomial comparison.
inline bool is_torsion_unit(const FieldElement& x) {
    if (x.is_zero()) return false;
    for (const Place& p : x.field()->places)
        if (abs(x.abs_at(p) - 1) > Real(0.5)) return false;
    IntPolynomial mp = minimal_poly(x);
    const int m = mp.degree();
    const long bound = 2L * m * m + 2;  // phi(n) >= sqrt(n/2)
    for (long n = 1; n <= bound; ++n) {
        IntPolynomial cn = cyclotomic(static_cast<int>(n));
        if (cn.degree() == m && cn == mp) return true;
    }
    return false;
}

class RelativeExtension {
  public:
    // embedding: d_l x d_k rational matrix, column j = image of theta_k^j
    // in the power basis of l.
    RelativeExtension(NumberFieldPtr base, NumberFieldPtr top, RatMatrix embedding)
        : base_(std::move(base)), top_(std::move(top)), embedding_(std::move(embedding)) {
        validate_embedding();
        build_decomposition();
        build_fibration();
    }

    const NumberFieldPtr& base() const { return base_; }
    const NumberFieldPtr& top() const { return top_; }
    int relative_degree() const { return top_->degree() / base_->degree(); }
    int relative_rank() const { return top_->unit_rank() - base_->unit_rank(); }

    // place of k under each archimedean place of l
    const std::vector<int>& fibration() const { return fibration_; }
    std::vector<std::vector<int>> fibers() const {
        std::vector<std::vector<int>> out(base_->places.size());
        for (size_t w = 0; w < fibration_.size(); ++w) out[fibration_[w]].push_back(static_cast<int>(w));
        return out;
    }

    FieldElement embed_to_top(const FieldElement& x) const {
        if (x.field() != base_) throw std::invalid_argument("element not in the base field");
        const int dl = top_->degree(), dk = base_->degree();
        std::vector<Rat> c(dl, Rat(0));
        for (int j = 0; j < dk; ++j) {
            if (x.coords()[j] == 0) continue;
            for (int i = 0; i < dl; ++i) c[i] += x.coords()[j] * embedding_[i][j];
        }
        return FieldElement(top_, std::move(c));
    }

    // Decompose x in l over the k-basis theta_l^0..theta_l^{n-1}: returns
    // n base-field components.
    std::vector<FieldElement> decompose(const FieldElement& x) const {
        if (x.field() != top_) throw std::invalid_argument("element not in the top field");
        const int dl = top_->degree(), dk = base_->degree(), n = relative_degree();
        // solve T c = x
        std::vector<Rat> rhs = x.coords();
        RatMatrix a = decomposition_;  // dl x dl, column (j*dk + i) = coords of theta_k^i theta_l^j
        std::vector<Rat> c(dl, Rat(0));
        // Gaussian elimination with the rhs carried along
        for (int k = 0; k < dl; ++k) {
            int p = k;
            while (p < dl && a[p][k] == 0) ++p;
            if (p == dl) throw FieldDataError("relative decomposition basis is singular");
            std::swap(a[p], a[k]);
            std::swap(rhs[p], rhs[k]);
            for (int i = 0; i < dl; ++i) {
                if (i == k || a[i][k] == 0) continue;
                Rat m = a[i][k] / a[k][k];
                for (int j = k; j < dl; ++j) a[i][j] -= m * a[k][j];
                rhs[i] -= m * rhs[k];
            }
        }
        for (int k = 0; k < dl; ++k) c[k] = rhs[k] / a[k][k];
        std::vector<FieldElement> out;
        out.reserve(n);
        for (int j = 0; j < n; ++j) {
            std::vector<Rat> comp(dk);
            for (int i = 0; i < dk; ++i) comp[i] = c[j * dk + i];
            out.emplace_back(base_, std::move(comp));
        }
        return out;
    }

  private:
    void validate_embedding() {
        const int dl = top_->degree(), dk = base_->degree();
        if (dk < 1 || dl < dk || dl % dk != 0)
            throw FieldDataError("relative extension: base degree must divide top degree");
        if (static_cast<int>(embedding_.size()) != dl)
            throw FieldDataError("embedding matrix must have d_l rows");
        for (const auto& row : embedding_)
            if (static_cast<int>(row.size()) != dk)
                throw FieldDataError("embedding matrix must have d_k columns");
        // column 0 must be the coordinates of 1
        FieldElement one = FieldElement::one(top_);
        for (int i = 0; i < dl; ++i)
            if (embedding_[i][0] != one.coords()[i])
                throw FieldDataError("embedding must send 1 to 1");
        if (dk >= 2) {
            std::vector<Rat> gc(dl);
            for (int i = 0; i < dl; ++i) gc[i] = embedding_[i][1];
            FieldElement g(top_, std::move(gc));
            // ring homomorphism on the generator: k's polynomial kills g
            FieldElement acc = FieldElement::zero(top_);
            FieldElement p = FieldElement::one(top_);
            for (int i = 0; i <= base_->poly.degree(); ++i) {
                acc = acc + p * Rat(base_->poly.coeffs[i]);
                if (i < base_->poly.degree()) p = p * g;
            }
            if (!acc.is_zero())
                throw FieldDataError("embedding image of the base generator does not satisfy "
                                     "the base defining polynomial");
            // remaining columns are the powers of g
            FieldElement gp = FieldElement::one(top_);
            for (int j = 0; j < dk; ++j) {
                for (int i = 0; i < dl; ++i)
                    if (embedding_[i][j] != gp.coords()[i])
                        throw FieldDataError("embedding column " + std::to_string(j) +
                                             " is not the corresponding power of the generator image");
                if (j + 1 < dk) gp = gp * g;
            }
            generator_image_ = g;
        } else {
            generator_image_ = embed_to_top(FieldElement::generator(base_));
        }
    }

    void build_decomposition() {
        const int dl = top_->degree(), dk = base_->degree(), n = relative_degree();
        decomposition_.assign(dl, std::vector<Rat>(dl, Rat(0)));
        FieldElement theta_l_pow = FieldElement::one(top_);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < dk; ++i) {
                std::vector<Rat> basis_elem(dk, Rat(0));
                basis_elem[i] = 1;
                FieldElement img = embed_to_top(FieldElement(base_, std::move(basis_elem)));
                FieldElement prod = img * theta_l_pow;
                for (int row = 0; row < dl; ++row) decomposition_[row][j * dk + i] = prod.coords()[row];
            }
            if (j + 1 < n) theta_l_pow = theta_l_pow * FieldElement::generator(top_);
        }
        // solvability is checked on first use; a singular matrix would mean
        // theta_l generates a proper subfield over k, impossible here
    }

    void build_fibration() {
        const FieldElement& g = *generator_image_;
        fibration_.assign(top_->places.size(), -1);
        // map each root of the base polynomial to its place
        std::vector<int> root_place(base_->degree(), -1);
        for (size_t pi = 0; pi < base_->places.size(); ++pi) {
            const Place& p = base_->places[pi];
            root_place[p.embedding_index] = static_cast<int>(pi);
            if (p.kind == Place::Kind::complex)
                root_place[base_->roots[p.embedding_index].conj_index] = static_cast<int>(pi);
        }
        Real tol = ldexp(Real(1), -static_cast<int>(working_precision()) / 4);
        for (size_t w = 0; w < top_->places.size(); ++w) {
            Cx val = g.embed(top_->places[w].embedding_index);
            int best = -1;
            Real best_dist = 0;
            for (int j = 0; j < base_->degree(); ++j) {
                Real dist = (val - base_->roots[j].value).abs();
                if (best < 0 || dist < best_dist) {
                    best = j;
                    best_dist = dist;
                }
            }
            if (best_dist > tol)
                throw FieldDataError("fibration: embedded generator does not match any base root");
            fibration_[w] = root_place[best];
        }
        // consistency: sum of local degrees over each fiber = [l:k] d_v
        const int n = relative_degree();
        std::vector<int> fiber_degree(base_->places.size(), 0);
        for (size_t w = 0; w < top_->places.size(); ++w)
            fiber_degree[fibration_[w]] += top_->places[w].local_degree;
        for (size_t v = 0; v < base_->places.size(); ++v) {
            if (fiber_degree[v] == 0) throw FieldDataError("fibration: base place with empty fiber");
            if (fiber_degree[v] != n * base_->places[v].local_degree)
                throw FieldDataError("fibration: local degree sum mismatch over a base place");
        }
    }

    NumberFieldPtr base_;
    NumberFieldPtr top_;
    RatMatrix embedding_;
    RatMatrix decomposition_;
    std::optional<FieldElement> generator_image_;
    std::vector<int> fibration_;
};

// Norm from l down to k: determinant of multiplication-by-alpha on l as a
// k-vector space, computed with exact field arithmetic in k.
inline FieldElement relative_norm(const RelativeExtension& ext, const FieldElement& alpha) {
    if (alpha.field() != ext.top()) throw std::invalid_argument("relative_norm: element not in l");
    const int n = ext.relative_degree();
    // columns: alpha * theta_l^j decomposed over the k-basis
    std::vector<std::vector<FieldElement>> m(n);
    FieldElement pow = FieldElement::one(ext.top());
    for (int j = 0; j < n; ++j) {
        std::vector<FieldElement> col = ext.decompose(alpha * pow);
        for (int i = 0; i < n; ++i) {
            if (j == 0) m[i].reserve(n);
            m[i].push_back(col[i]);
        }
        if (j + 1 < n) pow = pow * FieldElement::generator(ext.top());
    }
    // determinant over the field k
    FieldElement det = FieldElement::one(ext.base());
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return FieldElement::zero(ext.base());
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        FieldElement pivot_inv = m[k][k].inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FieldElement factor = m[i][k] * pivot_inv;
            for (int j = k; j < n; ++j) m[i][j] = m[i][j] - factor * m[k][j];
        }
    }
    return det;
}

// Membership in the relative unit group: Norm_{l/k}(alpha) is torsion.
inline bool is_relative_unit(const RelativeExtension& ext, const FieldElement& alpha) {
    if (alpha.is_zero()) return false;
    return is_torsion_unit(relative_norm(ext, alpha));
}

// Relative regulator |det M_{l/k}|.  `chosen` maps each base place index
// to the distinguished top place over it; -1 entries select the first
// fiber member.
inline RegulatorValue relative_regulator(const RelativeExtension& ext,
                                         const std::vector<FieldElement>& rel_units,
                                         std::vector<int> chosen = {}) {
    const int rr = ext.relative_rank();
    if (rr <= 0) throw std::invalid_argument("relative_regulator: r(l/k) must be positive");
    if (static_cast<int>(rel_units.size()) != rr)
        throw std::invalid_argument("relative_regulator: expected " + std::to_string(rr) + " units");
    auto fibs = ext.fibers();
    if (chosen.empty()) {
        for (const auto& f : fibs) chosen.push_back(f.front());
    }
    if (chosen.size() != fibs.size())
        throw std::invalid_argument("relative_regulator: one chosen place per base place required");
    std::vector<bool> excluded(ext.top()->places.size(), false);
    for (size_t v = 0; v < chosen.size(); ++v) {
        bool in_fiber = false;
        for (int w : fibs[v]) in_fiber |= (w == chosen[v]);
        if (!in_fiber) throw std::invalid_argument("relative_regulator: chosen place not over its base place");
        excluded[chosen[v]] = true;
    }
    std::vector<std::vector<Real>> m;
    for (size_t w = 0; w < ext.top()->places.size(); ++w) {
        if (excluded[w]) continue;
        std::vector<Real> row;
        for (const auto& u : rel_units) row.push_back(log_norm_at(u, ext.top()->places[w]));
        m.push_back(std::move(row));
    }
    if (static_cast<int>(m.size()) != rr)
        throw std::invalid_argument("relative_regulator: row count mismatch");
    Real det = detail::abs_det_real(std::move(m));
    if (det == 0) throw FieldDataError("relative_regulator: singular matrix");
    return {det, working_error_bound()};
}

// All ways of choosing one distinguished place over each base place.
inline std::vector<std::vector<int>> all_place_choices(const RelativeExtension& ext) {
    auto fibs = ext.fibers();
    std::vector<std::vector<int>> out{{}};
    for (const auto& f : fibs) {
        std::vector<std::vector<int>> next;
        for (const auto& partial : out)
            for (int w : f) {
                auto ext_choice = partial;
                ext_choice.push_back(w);
                next.push_back(std::move(ext_choice));
            }
        out = std::move(next);
    }
    return out;
}

// prod (d_k h(beta_i)) * prod (d_l h(psi_j)) <= r(l)! * Reg(l)
inline MarginReport check_combined_bound(const RelativeExtension& ext,
                                         const UnitSearchResult& base_search,
                                         const std::vector<FieldElement>& rel_units,
                                         const UnitSystem& top_units) {
    if (ext.relative_rank() <= 0)
        throw std::invalid_argument("check_combined_bound: r(l/k) must be positive");
    for (const auto& psi : rel_units)
        if (!is_relative_unit(ext, psi))
            throw std::invalid_argument("check_combined_bound: element is not a relative unit");
    Real product = base_search.product;  // prod of d_k h(beta_i)
    for (const auto& psi : rel_units) product *= ext.top()->degree() * unit_height(psi);
    const int rl = ext.top()->unit_rank();
    Real fact = 1;
    for (int i = 2; i <= rl; ++i) fact *= i;
    Real bound = fact * regulator(top_units).value;
    MarginReport r{"combined-unit-height-bound", product, bound, bound - product, false};
    r.holds = r.margin >= -(Real(8) * working_error_bound());
    return r;
}

}  // namespace nfreg
