// Shared field fixtures for the unit tests.
#pragma once

#include "nfreg/nfreg.hpp"

namespace nfreg::test {

struct PrecisionInit {
    PrecisionInit() { set_working_precision(128); }
};
inline PrecisionInit precision_init;

inline RatMatrix identity_basis(int d) {
    RatMatrix b(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) b[i][i] = 1;
    return b;
}

inline NumberFieldPtr rationals() {
    return NumberField::create("q", IntPolynomial({0, 1}), 1, 1, 0, identity_basis(1));
}

inline NumberFieldPtr sqrt2_field() {
    return NumberField::create("x2-2", IntPolynomial({-2, 0, 1}), 8, 2, 0, identity_basis(2));
}

inline NumberFieldPtr gaussian_field() {
    return NumberField::create("x2+1", IntPolynomial({1, 0, 1}), -4, 0, 1, identity_basis(2));
}

inline NumberFieldPtr golden_field() {
    return NumberField::create("x2-x-1", IntPolynomial({-1, -1, 1}), 5, 2, 0, identity_basis(2));
}

// maximal real subfield of the 7th cyclotomic field, discriminant 49
inline NumberFieldPtr cyclic_cubic() {
    return NumberField::create("x3+x2-2x-1", IntPolynomial({-1, -2, 1, 1}), 49, 3, 0,
                               identity_basis(3));
}

inline NumberFieldPtr plastic_cubic() {  // x^3 - x - 1, discriminant -23
    return NumberField::create("x3-x-1", IntPolynomial({-1, -1, 0, 1}), -23, 1, 1,
                               identity_basis(3));
}

// Q(sqrt2, sqrt3) with its genuine (non-monogenic) integral basis
inline NumberFieldPtr biquadratic_field() {
    RatMatrix basis = {
        {Rat(1), Rat(0), Rat(0), Rat(0)},
        {Rat(0), Rat(-9, 2), Rat(0), Rat(1, 2)},            // sqrt2
        {Rat(0), Rat(11, 2), Rat(0), Rat(-1, 2)},           // sqrt3
        {Rat(-5, 4), Rat(-9, 4), Rat(1, 4), Rat(1, 4)},     // (sqrt2 + sqrt6)/2
    };
    return NumberField::create("x4-10x2+1", IntPolynomial({1, 0, -10, 0, 1}), 2304, 4, 0, basis);
}

inline FieldElement elem(const NumberFieldPtr& f, std::vector<Rat> coords) {
    coords.resize(f->degree(), Rat(0));
    return FieldElement(f, std::move(coords));
}

inline FieldElement sqrt2_in_biquadratic(const NumberFieldPtr& biq) {
    return elem(biq, {Rat(0), Rat(-9, 2), Rat(0), Rat(1, 2)});
}

inline FieldElement sqrt3_in_biquadratic(const NumberFieldPtr& biq) {
    return elem(biq, {Rat(0), Rat(11, 2), Rat(0), Rat(-1, 2)});
}

inline Real approx_tol() { return Real("1e-30"); }

}  // namespace nfreg::test
