// Subfield lattices and their tower invariants: longest tower length
// lambda, the normalized tower weight aleph (an exact rational, strictly
// increasing along towers), and the maximal small-discriminant subfield
// k*.  Discriminant-power comparisons are exact integer comparisons; no
// floating point decides a tie.
#pragma once

#include "nfreg/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfreg {

struct SubfieldNode {
    std::string label;
    int degree = 1;
    int r1 = 1, r2 = 0;
    Int disc_abs = 1;  // absolute discriminant

    int unit_rank() const { return r1 + r2 - 1; }
};

class LatticeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Containment DAG of intermediate fields between Q and the top field.
// Edges a -> b mean a is properly contained in b; Q-below-everything and
// everything-below-top edges are implicit and added automatically.
class SubfieldLattice {
  public:
    SubfieldLattice(std::vector<SubfieldNode> nodes,
                    std::vector<std::pair<std::string, std::string>> edges) {
        nodes_ = std::move(nodes);
        if (nodes_.empty()) throw LatticeError("empty lattice");
        bottom_ = 0;
        top_ = static_cast<int>(nodes_.size()) - 1;  // == bottom for Q itself
        const SubfieldNode& q = nodes_[bottom_];
        if (q.degree != 1 || q.disc_abs != 1)
            throw LatticeError("bottom node must be the rationals (degree 1, D = 1)");
        adj_.assign(nodes_.size(), {});
        for (size_t i = 0; i < nodes_.size(); ++i) {
            if (static_cast<int>(i) != bottom_) add_edge(bottom_, static_cast<int>(i));
            if (static_cast<int>(i) != top_) add_edge(static_cast<int>(i), top_);
        }
        for (const auto& [a, b] : edges) add_edge(index_of(a), index_of(b));
        validate();
        compute_lambda();
        compute_reach();
    }

    int size() const { return static_cast<int>(nodes_.size()); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const SubfieldNode& node(int i) const { return nodes_.at(i); }
    const std::vector<SubfieldNode>& nodes() const { return nodes_; }

    int index_of(const std::string& label) const {
        for (size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].label == label) return static_cast<int>(i);
        throw LatticeError("no lattice node labelled '" + label + "'");
    }

    bool contains(int a, int b) const { return reach_[a][b]; }  // a strictly below b
    const std::vector<int>& successors(int a) const { return adj_[a]; }

    // longest tower length from Q
    int lambda(int i) const { return lambda_.at(i); }

    // aleph(k') = (2 [k : k'])^{lambda(k') - lambda(k)}, an exact rational in (0, 1]
    Rat aleph(int i) const {
        if (i == top_) return Rat(1);
        const int rel_degree = nodes_[top_].degree / nodes_[i].degree;
        const int e = lambda_[top_] - lambda_[i];
        if (e <= 0) throw LatticeError("lambda must increase strictly toward the top");
        return Rat(1, pow(Int(2 * rel_degree), e));
    }

  private:
    void add_edge(int a, int b) {
        if (a == b) throw LatticeError("self containment edge");
        if (std::find(adj_[a].begin(), adj_[a].end(), b) == adj_[a].end()) adj_[a].push_back(b);
    }

    void validate() const {
        const SubfieldNode& k = nodes_[top_];
        for (size_t i = 0; i < nodes_.size(); ++i) {
            const SubfieldNode& n = nodes_[i];
            if (n.degree < 1 || n.r1 < 0 || n.r2 < 0 || n.r1 + 2 * n.r2 != n.degree)
                throw LatticeError(n.label + ": inconsistent node signature");
            if (n.disc_abs < 1) throw LatticeError(n.label + ": absolute discriminant must be >= 1");
            if (k.degree % n.degree != 0)
                throw LatticeError(n.label + ": degree does not divide the top degree");
        }
        for (size_t a = 0; a < adj_.size(); ++a)
            for (int b : adj_[a]) {
                const SubfieldNode& na = nodes_[a];
                const SubfieldNode& nb = nodes_[b];
                if (nb.degree % na.degree != 0 || nb.degree == na.degree)
                    throw LatticeError("edge " + na.label + " -> " + nb.label +
                                       ": degree must strictly divide");
                // discriminant divisibility D_a^{[b:a]} | D_b
                Int p = pow(na.disc_abs, nb.degree / na.degree);
                if (nb.disc_abs % p != 0)
                    throw LatticeError("edge " + na.label + " -> " + nb.label +
                                       ": discriminant divisibility fails");
            }
    }

    void compute_lambda() {
        // edges strictly increase degree, so processing nodes by degree is
        // a topological order
        std::vector<int> order(nodes_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [this](int a, int b) { return nodes_[a].degree < nodes_[b].degree; });
        lambda_.assign(nodes_.size(), 0);
        for (int a : order)
            for (int b : adj_[a]) lambda_[b] = std::max(lambda_[b], lambda_[a] + 1);
        // lambda(k) <= log2(d)
        if (pow(Int(2), lambda_[top_]) > Int(nodes_[top_].degree))
            throw LatticeError("tower length exceeds log2 of the degree");
    }

    void compute_reach() {
        const size_t n = nodes_.size();
        reach_.assign(n, std::vector<bool>(n, false));
        std::vector<int> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [this](int a, int b) { return nodes_[a].degree > nodes_[b].degree; });
        for (int a : order)
            for (int b : adj_[a]) {
                reach_[a][b] = true;
                for (size_t c = 0; c < n; ++c)
                    if (reach_[b][c]) reach_[a][c] = true;
            }
    }

    std::vector<SubfieldNode> nodes_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> reach_;
    std::vector<int> lambda_;
    int bottom_ = 0, top_ = 0;
};

// Maximum unit rank over proper subfields.
inline int rho(const SubfieldLattice& lat) {
    int out = 0;
    for (int i = 0; i < lat.size(); ++i)
        if (i != lat.top()) out = std::max(out, lat.node(i).unit_rank());
    return out;
}

struct TowerCheck {
    bool holds;
    std::string detail;
};

// Strict increase of aleph along a directed path from Q to the top,
// verified with exact rational comparisons.
inline TowerCheck check_aleph_monotonic(const SubfieldLattice& lat, const std::vector<int>& path) {
    if (path.empty() || path.front() != lat.bottom() || path.back() != lat.top())
        throw std::invalid_argument("tower must run from Q to the top field");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!lat.contains(path[i], path[i + 1]))
            throw std::invalid_argument("tower step is not a containment");
    Rat prev(0);
    for (size_t i = 0; i < path.size(); ++i) {
        Rat a = lat.aleph(path[i]);
        if (!(prev < a))
            return {false, "aleph not strictly increasing at " + lat.node(path[i]).label};
        prev = a;
    }
    if (prev != 1) return {false, "aleph at the top is not 1"};
    return {true, ""};
}

// aleph(k'(alpha)) - aleph(k') [k:k'] >= 2^{lambda(k')-lambda(k)} [k:k']^{lambda(k')-lambda(k)+1},
// exactly in rational arithmetic.
inline TowerCheck check_tower_step_gap(const SubfieldLattice& lat, int kprime, int kprime_alpha) {
    if (!lat.contains(kprime, kprime_alpha))
        throw std::invalid_argument("first field must be properly contained in the second");
    const int m = lat.node(lat.top()).degree / lat.node(kprime).degree;  // [k : k']
    const int e = lat.lambda(lat.top()) - lat.lambda(kprime);            // lambda(k) - lambda(k')
    Rat lhs = lat.aleph(kprime_alpha) - lat.aleph(kprime) * m;
    Rat rhs = Rat(m, pow(Int(2), e) * pow(Int(m), e));  // 2^{-e} m^{1-e}
    if (lhs >= rhs) return {true, ""};
    return {false, "tower-step gap fails at " + lat.node(kprime).label + " -> " +
                       lat.node(kprime_alpha).label};
}

// Exact comparison a^q vs b (q >= 1): interval shortcut on bit lengths,
// exact power only when the sizes already overlap.
inline int compare_power_vs(const Int& a, const Int& q, const Int& b) {
    if (a < 1 || b < 1 || q < 1) throw std::invalid_argument("compare_power_vs: positive inputs required");
    if (a == 1) return b == 1 ? 0 : -1;
    const Int bits_a(msb(a) + 1);  // a in [2^(bits_a - 1), 2^bits_a)
    const Int bits_b(msb(b) + 1);
    if ((bits_a - 1) * q >= bits_b) return 1;   // a^q >= 2^bits_b > b
    if (bits_a * q <= bits_b - 1) return -1;    // a^q < 2^(bits_b - 1) <= b
    // now q * bits_a < bits_b + q, small enough to compute exactly
    Int p = pow(a, static_cast<unsigned>(q));
    return p < b ? -1 : (p == b ? 0 : 1);
}

// The maximal subfield k* != k with D_{k*} < D_k^{aleph(k*)}: every node
// strictly above it satisfies the reverse inequality.  Q always qualifies
// for the strict inequality, so a maximal element exists.
inline int maximal_kstar(const SubfieldLattice& lat) {
    const Int& dk = lat.node(lat.top()).disc_abs;
    auto small_disc = [&](int i) {
        // D_i < D_k^{1/q} with aleph(i) = 1/q  <=>  D_i^q < D_k
        Rat al = lat.aleph(i);
        if (numerator(al) != 1) throw LatticeError("aleph numerator must be 1 below the top");
        return compare_power_vs(lat.node(i).disc_abs, denominator(al), dk) < 0;
    };
    int best = -1;
    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.top() || !small_disc(i)) continue;
        bool maximal = true;
        for (int j = 0; j < lat.size(); ++j) {
            if (j == lat.top() || j == i || !lat.contains(i, j)) continue;
            if (small_disc(j)) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        if (best < 0 || lat.node(i).degree > lat.node(best).degree ||
            (lat.node(i).degree == lat.node(best).degree && lat.node(i).label < lat.node(best).label))
            best = i;
    }
    if (best < 0) throw LatticeError("no maximal small-discriminant subfield found");
    return best;
}

}  // namespace nfreg
