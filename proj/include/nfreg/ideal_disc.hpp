// The embedding matrix M(beta), the exact trace Gram matrix, the integer
// functional f_k, fractional-ideal vs Z-module lattice indices, and the
// identity f_k(beta) = [J(beta) : M(beta)]^2 * D_k with its Hadamard-side
// height bound.  Everything on the identity side is exact; only the height
// comparison is approximate, with certified margins.
#pragma once

#include "nfreg/heights.hpp"
#include "nfreg/lattice.hpp"
#include "nfreg/number_field.hpp"

#include <string>
#include <vector>

namespace nfreg {

struct EmbeddingMatrix {
    std::vector<std::vector<Cx>> entries;  // entry (i, j) = sigma_j(beta_i)

    // |det| via complex Gaussian elimination with partial pivoting.
    Real abs_det() const {
        auto a = entries;
        const size_t n = a.size();
        Real out = 1;
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k].norm_sq() > a[p][k].norm_sq()) p = i;
            if (a[p][k].is_zero()) return Real(0);
            std::swap(a[p], a[k]);
            out *= a[k][k].abs();
            for (size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                Cx m = a[i][k] / a[k][k];
                for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - m * a[k][j];
            }
        }
        return out;
    }
};

// sigma_j(beta_i) from the certified roots; rows = entries, columns = the
// d embeddings in root order.
inline EmbeddingMatrix embedding_matrix(const FieldVector& vec) {
    const int d = vec.field->degree();
    if (static_cast<int>(vec.size()) != d)
        throw std::invalid_argument("embedding_matrix: vector length must equal the degree");
    EmbeddingMatrix m;
    m.entries.assign(d, std::vector<Cx>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.entries[i][j] = vec.entries[i].embed(j);
    return m;
}

// Exact symmetric Gram matrix (Trace(beta_i beta_j)).
inline RatMatrix gram_trace_matrix(const FieldVector& vec) {
    const int d = vec.field->degree();
    if (static_cast<int>(vec.size()) != d)
        throw std::invalid_argument("gram_trace_matrix: vector length must equal the degree");
    RatMatrix g(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Rat t = trace_fast(vec.entries[i] * vec.entries[j]);
            g[i][j] = t;
            g[j][i] = t;
        }
    return g;
}

inline bool entries_independent(const FieldVector& vec) {
    return linalg::det(gram_trace_matrix(vec)) != 0;
}

// f_k(beta) = |det Gram| * (finite part)^2, assembled exactly; the result
// is asserted to be a positive integer.
inline Int f_k(const FieldVector& vec) {
    Rat g = linalg::det(gram_trace_matrix(vec));
    if (g == 0) throw std::invalid_argument("f_k: entries are Q-linearly dependent");
    Rat fp = finite_part(vec);
    Rat val = abs(g) * fp * fp;
    if (denominator(val) != 1 || val <= 0)
        throw FieldDataError(vec.field->label + ": f_k is not a positive integer (got " +
                             val.str() + ")");
    return numerator(val);
}

// [J(beta) : M(beta)]: J realized as the Z-span of the products
// beta_i * omega_j, M as the Z-span of the beta_i, both scaled by one
// denominator-clearing integer.
inline Int lattice_index(const FieldVector& vec) {
    const auto& field = vec.field;
    const int d = field->degree();
    if (static_cast<int>(vec.size()) != d)
        throw std::invalid_argument("lattice_index: vector length must equal the degree");
    if (!entries_independent(vec))
        throw std::invalid_argument("lattice_index: entries are Q-linearly dependent");
    Int t = clearing_denominator(vec);
    IntMatrix module_rows;
    module_rows.reserve(d);
    std::vector<FieldElement> scaled;
    for (const auto& e : vec.entries) {
        FieldElement se = e * Rat(t);
        std::vector<Rat> ic = se.integral_coords();
        std::vector<Int> row(d);
        for (int c = 0; c < d; ++c) {
            if (denominator(ic[c]) != 1)
                throw FieldDataError(field->label + ": clearing denominator failed");
            row[c] = numerator(ic[c]);
        }
        module_rows.push_back(std::move(row));
        scaled.push_back(std::move(se));
    }
    Int module_det = abs(int_det(module_rows));
    Int ideal_det = integral_ideal_norm(FieldVector(field, std::move(scaled)));
    if (module_det % ideal_det != 0)
        throw FieldDataError(field->label + ": module covolume not divisible by ideal covolume");
    return module_det / ideal_det;
}

struct Prop41Report {
    Int fk;
    Int index;
    Int disc_abs;
    bool identity_holds;        // f_k == index^2 * D_k, exactly
    MarginReport height_bound;  // log f_k <= 2d log H(beta)
};

// The exact integer identity together with the Hadamard-side inequality
// f_k(beta) <= H(beta)^{2d}, checked in logarithms.
inline Prop41Report verify_prop41(const FieldVector& vec) {
    Prop41Report rep;
    rep.fk = f_k(vec);
    rep.index = lattice_index(vec);
    rep.disc_abs = vec.field->abs_disc();
    rep.identity_holds = (rep.fk == rep.index * rep.index * rep.disc_abs);
    HeightValue h = arakelov_height(vec);
    Real lhs = log_positive(to_real(rep.fk));
    Real rhs = 2 * vec.field->degree() * h.value;
    rep.height_bound = {"hadamard-height-bound", lhs, rhs, rhs - lhs, false};
    rep.height_bound.holds =
        rep.height_bound.margin >= -(2 * vec.field->degree() * h.error_bound + working_error_bound());
    return rep;
}

}  // namespace nfreg
