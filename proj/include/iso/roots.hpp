#pragma once

#include <gmpxx.h>

#include <vector>

namespace iso {

struct ComplexVal {
    mpf_class re, im;
};

// All roots of a nonconstant polynomial (index = power, rational
// coefficients), found simultaneously at the requested float precision and
// certified by reconstructing the coefficients from the roots; the
// precision escalates on its own if certification fails.
std::vector<ComplexVal> polynomial_roots(const std::vector<mpq_class>& coeffs,
                                         long prec_bits = 512);

// Same machinery for monic complex coefficient lists (used when the base
// field has a complex embedding).  Throws if certification keeps failing.
std::vector<ComplexVal> polynomial_roots_cx(const std::vector<ComplexVal>& monic,
                                            long prec_bits);

// Best rational approximation with denominator at most max_den, via
// continued fractions.
mpq_class rationalize(const mpf_class& x, const mpz_class& max_den);

} // namespace iso
