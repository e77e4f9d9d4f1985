#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nfreg;

TEST_CASE("primitive part and content") {
    IntPolynomial p({6, -9, 12});
    CHECK(p.content() == 3);
    IntPolynomial prim = p.primitive();
    CHECK(prim.coeffs == std::vector<Int>{2, -3, 4});
    IntPolynomial neg({-4, 0, -2});
    CHECK(neg.primitive().coeffs == std::vector<Int>{2, 0, 1});  // positive lead
}

TEST_CASE("rational polynomial gcd and exact division") {
    // (x^2 - 2)^2 has squarefree part x^2 - 2
    RatPolynomial sq(IntPolynomial({-2, 0, 1}));
    RatPolynomial p = sq * sq;
    RatPolynomial g = poly_gcd(p, p.derivative());
    RatPolynomial part = exact_div(p, g).monic();
    CHECK(part == sq.monic());
    CHECK(is_squarefree(IntPolynomial({-2, 0, 1})));
    CHECK(!is_squarefree(IntPolynomial({4, 0, -4, 0, 1})));  // (x^2-2)^2
}

TEST_CASE("resultants and discriminants of known polynomials") {
    CHECK(poly_discriminant(IntPolynomial({-1, -2, 1, 1})) == 49);
    CHECK(poly_discriminant(IntPolynomial({-1, -1, 0, 1})) == -23);
    CHECK(poly_discriminant(IntPolynomial({-2, 0, 0, 1})) == -108);
    CHECK(poly_discriminant(IntPolynomial({1, 0, -10, 0, 1})) == 147456);
    CHECK(poly_discriminant(IntPolynomial({1, -1, 2, -2, 2, -2, 1})) == -10051);
    CHECK(poly_discriminant(IntPolynomial({-2, 0, 1})) == 8);
    // Res(x^3 - 2, x^2 + x + 1) = norm of 1 + theta + theta^2 in Q(cbrt 2)
    CHECK(resultant(IntPolynomial({-2, 0, 0, 1}), IntPolynomial({1, 1, 1})) == 1);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1).coeffs == std::vector<Int>{-1, 1});
    CHECK(cyclotomic(2).coeffs == std::vector<Int>{1, 1});
    CHECK(cyclotomic(4).coeffs == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic(5).coeffs == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(cyclotomic(12).coeffs == std::vector<Int>{1, 0, -1, 0, 1});
    // degree phi(n)
    CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("integer exact division detects inexactness") {
    IntPolynomial a({-1, 0, 1});  // x^2 - 1
    IntPolynomial b({1, 1});      // x + 1
    CHECK(exact_div(a, b).coeffs == std::vector<Int>{-1, 1});
    CHECK_THROWS(exact_div(IntPolynomial({1, 0, 1}), b));
}

TEST_CASE("evaluation") {
    IntPolynomial p({-2, 0, 1});
    CHECK(p.eval(Rat(2)) == 2);
    CHECK(p.eval(Rat(3, 2)) == Rat(1, 4));
    Cx v = p.eval(Cx(Real(1), Real(1)));  // (1+i)^2 - 2 = -2 + 2i
    CHECK(abs(v.re + 2) < test::approx_tol());
    CHECK(abs(v.im - 2) < test::approx_tol());
}
