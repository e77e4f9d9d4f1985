#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nfreg;
using nfreg::test::elem;

namespace {
FieldVector vec2(const NumberFieldPtr& k, std::vector<Rat> a, std::vector<Rat> b) {
    return FieldVector(k, {elem(k, std::move(a)), elem(k, std::move(b))});
}
}  // namespace

TEST_CASE("embedding matrix") {
    auto k = test::sqrt2_field();
    FieldVector v = vec2(k, {Rat(1)}, {Rat(0), Rat(1)});
    EmbeddingMatrix m = embedding_matrix(v);
    REQUIRE(m.entries.size() == 2);
    // first row is the constant 1 under both embeddings
    CHECK(abs(m.entries[0][0].re - 1) < test::approx_tol());
    CHECK(abs(m.entries[0][1].re - 1) < test::approx_tol());
    // second row is +-sqrt2 in the deterministic root order
    CHECK(abs(m.entries[1][0].re + sqrt(Real(2))) < test::approx_tol());
    CHECK(abs(m.entries[1][1].re - sqrt(Real(2))) < test::approx_tol());
    // singular when an entry is zero
    EmbeddingMatrix s = embedding_matrix(vec2(k, {Rat(1)}, {Rat(0)}));
    CHECK(s.abs_det() < test::approx_tol());
    CHECK_THROWS(embedding_matrix(FieldVector(k, {FieldElement::one(k)})));
}

TEST_CASE("embedding determinant squares to the gram determinant") {
    std::mt19937_64 rng(31);
    for (auto field : {test::sqrt2_field(), test::gaussian_field(), test::cyclic_cubic()}) {
        for (int i = 0; i < 5; ++i) {
            FieldVector v = random_independent_vector(field, rng);
            Real lhs = embedding_matrix(v).abs_det();
            Rat g = linalg::det(gram_trace_matrix(v));
            CHECK(abs(lhs * lhs - abs(to_real(g))) < Real("1e-20") * (1 + abs(to_real(g))));
        }
    }
}

TEST_CASE("gram matrix examples") {
    auto k = test::sqrt2_field();
    RatMatrix g = gram_trace_matrix(vec2(k, {Rat(1)}, {Rat(0), Rat(1)}));
    CHECK(g[0][0] == 2);
    CHECK(g[0][1] == 0);
    CHECK(g[1][1] == 4);
    CHECK(linalg::det(g) == 8);
    // (1, 2 sqrt2) -> det 32
    CHECK(linalg::det(gram_trace_matrix(vec2(k, {Rat(1)}, {Rat(0), Rat(2)}))) == 32);
    // repeated entry -> singular
    CHECK(linalg::det(gram_trace_matrix(vec2(k, {Rat(1)}, {Rat(1)}))) == 0);
}

TEST_CASE("f_k examples") {
    auto k = test::sqrt2_field();
    CHECK(f_k(vec2(k, {Rat(1)}, {Rat(0), Rat(1)})) == 8);
    CHECK(f_k(vec2(k, {Rat(1)}, {Rat(0), Rat(2)})) == 32);
    // scaling invariance f_k(alpha beta) = f_k(beta)
    FieldElement alpha = elem(k, {Rat(3, 2), Rat(-1)});
    FieldElement one = FieldElement::one(k);
    FieldElement s2 = elem(k, {Rat(0), Rat(1)});
    CHECK(f_k(FieldVector(k, {alpha, alpha * s2})) == 8);
    CHECK_THROWS(f_k(vec2(k, {Rat(1)}, {Rat(2)})));  // dependent entries
}

TEST_CASE("lattice index examples") {
    auto k = test::sqrt2_field();
    CHECK(lattice_index(vec2(k, {Rat(1)}, {Rat(0), Rat(1)})) == 1);
    CHECK(lattice_index(vec2(k, {Rat(1)}, {Rat(0), Rat(2)})) == 2);
    FieldElement alpha = elem(k, {Rat(-2), Rat(5)});
    FieldElement s2 = elem(k, {Rat(0), Rat(1)});
    CHECK(lattice_index(FieldVector(k, {alpha, alpha * s2})) == 1);
    CHECK_THROWS(lattice_index(vec2(k, {Rat(1)}, {Rat(3)})));
}

TEST_CASE("identity and hadamard bound on examples") {
    auto k = test::sqrt2_field();
    Prop41Report rep = verify_prop41(vec2(k, {Rat(1)}, {Rat(0), Rat(1)}));
    CHECK(rep.fk == 8);
    CHECK(rep.index == 1);
    CHECK(rep.identity_holds);
    CHECK(rep.height_bound.holds);
    // H((1, sqrt2))^4 = 9 exactly: log 8 <= log 9
    CHECK(abs(rep.height_bound.rhs - log(Real(9))) < Real("1e-25"));

    Prop41Report r2 = verify_prop41(vec2(k, {Rat(1)}, {Rat(0), Rat(2)}));
    CHECK(r2.fk == 32);
    CHECK(r2.index == 2);
    CHECK(r2.identity_holds);
    CHECK(r2.height_bound.holds);
}

TEST_CASE("integral basis vector gives f_k = D_k with index one") {
    auto biq = test::biquadratic_field();
    std::vector<FieldElement> basis;
    for (int i = 0; i < 4; ++i) basis.emplace_back(biq, biq->integral_basis[i]);
    Prop41Report rep = verify_prop41(FieldVector(biq, basis));
    CHECK(rep.fk == 2304);
    CHECK(rep.index == 1);
    CHECK(rep.identity_holds);
    CHECK(rep.height_bound.holds);
}

TEST_CASE("randomized identity suite") {
    std::mt19937_64 rng(37);
    for (auto field : {test::rationals(), test::sqrt2_field(), test::gaussian_field(),
                       test::golden_field(), test::cyclic_cubic(), test::biquadratic_field()}) {
        SuiteResult r = suite_prop41(field, 6, rng);
        INFO(field->label);
        CHECK(r.pass);
        SuiteResult s = suite_scaling_invariance(field, 6, rng);
        CHECK(s.pass);
    }
}

TEST_CASE("f_k over D_k is a perfect square") {
    std::mt19937_64 rng(41);
    auto field = test::cyclic_cubic();
    for (int i = 0; i < 8; ++i) {
        FieldVector v = random_independent_vector(field, rng);
        Int ratio = f_k(v) / field->abs_disc();
        CHECK(f_k(v) % field->abs_disc() == 0);
        Int r = sqrt(ratio);
        CHECK(r * r == ratio);
        CHECK(r == lattice_index(v));
    }
}
