#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace nfreg;
using nfreg::test::elem;

namespace {

RelativeExtension quad_over_q(const NumberFieldPtr& q, const NumberFieldPtr& l) {
    RatMatrix embedding = {{Rat(1)}, {Rat(0)}};
    return RelativeExtension(q, l, embedding);
}

RelativeExtension biq_over_sqrt2(const NumberFieldPtr& k, const NumberFieldPtr& biq) {
    // columns: 1 and sqrt2 = (theta^3 - 9 theta)/2
    RatMatrix embedding = {{Rat(1), Rat(0)},
                           {Rat(0), Rat(-9, 2)},
                           {Rat(0), Rat(0)},
                           {Rat(0), Rat(1, 2)}};
    return RelativeExtension(k, biq, embedding);
}

}  // namespace

TEST_CASE("embedding validation") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    CHECK_NOTHROW(biq_over_sqrt2(k, biq));
    // an image that does not satisfy x^2 - 2 is rejected
    RatMatrix bad = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
    CHECK_THROWS_AS(RelativeExtension(k, biq, bad), FieldDataError);
    // degree mismatch
    auto kc = test::cyclic_cubic();
    CHECK_THROWS_AS(RelativeExtension(kc, biq, RatMatrix(4, std::vector<Rat>(3, Rat(0)))),
                    FieldDataError);
}

TEST_CASE("fibration covers every base place with the right local degrees") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    auto fibs = ext.fibers();
    REQUIRE(fibs.size() == 2);
    CHECK(fibs[0].size() == 2);
    CHECK(fibs[1].size() == 2);
    CHECK(ext.relative_degree() == 2);
    CHECK(ext.relative_rank() == 2);
}

TEST_CASE("relative norm examples") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    // alpha in the image of k: norm = alpha^{[l:k]}
    FieldElement a = elem(k, {Rat(1), Rat(1)});
    FieldElement na = relative_norm(ext, ext.embed_to_top(a));
    CHECK(na == a * a);
    // norm of sqrt3 over Q(sqrt2) is -3
    FieldElement s3 = test::sqrt3_in_biquadratic(biq);
    CHECK(relative_norm(ext, s3) == elem(k, {Rat(-3)}));
    // norm of 1 is 1
    CHECK(relative_norm(ext, FieldElement::one(biq)) == FieldElement::one(k));
    // multiplicativity on random elements, exactly
    std::mt19937_64 rng(53);
    for (int i = 0; i < 5; ++i) {
        FieldElement x = random_element(biq, rng);
        FieldElement y = random_element(biq, rng);
        CHECK(relative_norm(ext, x * y) == relative_norm(ext, x) * relative_norm(ext, y));
    }
}

TEST_CASE("place identity for the relative norm") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    std::mt19937_64 rng(59);
    const int n = ext.relative_degree();
    const int dl = biq->degree(), dk = k->degree();
    for (int i = 0; i < 5; ++i) {
        FieldElement x = random_element(biq, rng);
        if (x.is_zero()) continue;
        FieldElement nx = relative_norm(ext, x);
        auto fibs = ext.fibers();
        for (size_t v = 0; v < fibs.size(); ++v) {
            Real lhs = 0;  // [l:k] sum_{w|v} log |x|_w with |.|_w = ||.||_w^{d_w/d_l}
            for (int w : fibs[v])
                lhs += Real(biq->places[w].local_degree) / dl * log_positive(x.abs_at(biq->places[w]));
            lhs *= n;
            Real rhs = Real(k->places[v].local_degree) / dk * log_positive(nx.abs_at(k->places[v]));
            CHECK(abs(lhs - rhs) < Real("1e-25"));
        }
    }
}

TEST_CASE("relative unit membership") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    FieldElement theta = elem(biq, {Rat(0), Rat(1)});                     // sqrt2 + sqrt3
    FieldElement u3 = elem(biq, {Rat(-5, 4), Rat(-9, 4), Rat(1, 4), Rat(1, 4)});
    FieldElement sqrt2_unit = elem(biq, {Rat(1), Rat(-9, 2), Rat(0), Rat(1, 2)});  // 1 + sqrt2
    CHECK(is_relative_unit(ext, theta));
    CHECK(is_relative_unit(ext, u3));
    CHECK(!is_relative_unit(ext, sqrt2_unit));  // norm (1+sqrt2)^2 is not torsion

    // over Q every unit of a real quadratic field is relative
    auto q = test::rationals();
    RelativeExtension extq = quad_over_q(q, k);
    CHECK(is_relative_unit(extq, elem(k, {Rat(1), Rat(1)})));
}

TEST_CASE("relative regulator of a real quadratic over Q equals its regulator") {
    auto q = test::rationals();
    struct Case { const char* label; std::vector<Int> poly; Int disc; std::vector<Rat> unit; };
    std::vector<Case> cases = {
        {"x2-2", {-2, 0, 1}, 8, {Rat(1), Rat(1)}},
        {"x2-3", {-3, 0, 1}, 12, {Rat(2), Rat(1)}},
        {"x2-x-1", {-1, -1, 1}, 5, {Rat(0), Rat(1)}},
        {"x2-6", {-6, 0, 1}, 24, {Rat(5), Rat(2)}},
        {"x2-7", {-7, 0, 1}, 28, {Rat(8), Rat(3)}},
    };
    for (const auto& c : cases) {
        auto l = NumberField::create(c.label, IntPolynomial(c.poly), c.disc, 2, 0,
                                     test::identity_basis(2));
        UnitSystem sys(l, {FieldElement(l, c.unit)}, 2);
        RelativeExtension ext = quad_over_q(q, l);
        RegulatorValue rel = relative_regulator(ext, {FieldElement(l, c.unit)});
        CHECK(abs(rel.value - regulator(sys).value) < Real("1e-10"));
    }
}

TEST_CASE("relative regulator is independent of the chosen places") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    FieldElement theta = elem(biq, {Rat(0), Rat(1)});
    FieldElement u3 = elem(biq, {Rat(-5, 4), Rat(-9, 4), Rat(1, 4), Rat(1, 4)});
    std::vector<FieldElement> rel_units = {theta, u3};
    auto choices = all_place_choices(ext);
    REQUIRE(choices.size() == 4);  // 2 fibers x 2 members
    Real ref = relative_regulator(ext, rel_units, choices[0]).value;
    CHECK(ref > 0);
    for (const auto& ch : choices)
        CHECK(abs(relative_regulator(ext, rel_units, ch).value - ref) < Real("1e-10"));
    // repeated unit -> singular
    CHECK_THROWS(relative_regulator(ext, {theta, theta}));
    // wrong count
    CHECK_THROWS(relative_regulator(ext, {theta}));
}

TEST_CASE("degenerate relative rank is rejected") {
    auto k = test::sqrt2_field();
    RatMatrix identity_embedding = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    RelativeExtension self(k, k, identity_embedding);
    CHECK(self.relative_rank() == 0);
    CHECK_THROWS_AS(relative_regulator(self, {}), std::invalid_argument);
}

TEST_CASE("combined product bound for the biquadratic over Q(sqrt2)") {
    auto k = test::sqrt2_field();
    auto biq = test::biquadratic_field();
    RelativeExtension ext = biq_over_sqrt2(k, biq);
    UnitSystem base_sys(k, {elem(k, {Rat(1), Rat(1)})}, 2);
    UnitSearchResult base = search_small_units(base_sys, 3);
    REQUIRE(base.certified);
    FieldElement theta = elem(biq, {Rat(0), Rat(1)});
    FieldElement u3 = elem(biq, {Rat(-5, 4), Rat(-9, 4), Rat(1, 4), Rat(1, 4)});
    UnitSystem top_sys(biq,
                       {elem(biq, {Rat(1), Rat(-9, 2), Rat(0), Rat(1, 2)}), theta, u3}, 2);
    MarginReport rep = check_combined_bound(ext, base, {theta, u3}, top_sys);
    CHECK(rep.holds);
    CHECK(rep.margin > 10);  // 3! * Reg(l) ~ 16 vs product ~ 2.66
    // r(l/k) = 0 is rejected
    RatMatrix identity_embedding = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    RelativeExtension self(k, k, identity_embedding);
    CHECK_THROWS(check_combined_bound(self, base, {}, base_sys));
}
