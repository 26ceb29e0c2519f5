#pragma once

#include <gmpxx.h>

#include <vector>

namespace iso {

// Truncated integer Laurent series: coefficients for exponents lo..hi-1,
// with the invariant that every exponent below lo is exactly zero.  All
// arithmetic tracks the window on which the result is still exact.
struct QSeries {
    long long lo = 0;
    long long hi = 0;
    std::vector<mpz_class> c;  // size hi - lo

    mpz_class coeff(long long e) const;  // exact zero below lo, throws at or above hi
};

QSeries qs_zero(long long lo, long long hi);
QSeries qs_const(const mpz_class& v, long long hi);
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const mpz_class& v);
QSeries qs_shift(const QSeries& a, long long k);  // multiply by q^k
QSeries qs_truncate(const QSeries& a, long long hi);
QSeries qs_normalize(const QSeries& a);  // tighten lo to the true valuation
bool qs_is_zero(const QSeries& a);

// Inverse of a series whose leading coefficient is a unit of Z.
QSeries qs_inv(const QSeries& a);
QSeries qs_pow(const QSeries& a, long long e);

// Substitute q -> q^m (m >= 1).
QSeries qs_subst_pow(const QSeries& a, long long m);

// Euler product prod_{n>=1} (1 - q^n) by the pentagonal number recurrence,
// on the window [0, hi).
QSeries euler_product(long long hi);

// delta / q = prod (1 - q^n)^24, window [0, hi).
QSeries delta_over_q(long long hi);

// E4 = 1 + 240 sum sigma_3(n) q^n, window [0, hi).
QSeries eisenstein4(long long hi);

// j = E4^3 / delta, window [-1, hi).
QSeries j_series(long long hi);

// Level-ell hauptmodul q^-1 prod ((1-q^n)/(1-q^(ell n)))^(24/(ell-1)) for
// ell - 1 dividing 24, window [-1, hi).
QSeries hauptmodul(int ell, long long hi);

// Coefficients c[a][b] of the modular polynomial of prime level ell
// (supported: 2, 3, 5, 7, 11, 13), computed from the q-expansion of j by
// symmetric-function recovery of prod (X - j(zeta^i q^(1/ell))) without ever
// leaving integer series.  The result is checked internally for symmetry,
// degree, and the Kronecker congruence before being returned.
std::vector<std::vector<mpz_class>> modular_polynomial(int ell);

// Independent validation of a modular polynomial through the hauptmodul
// (ell - 1 | 24, so ell in {2, 3, 5, 7, 13}): interpolates the polynomial P
// with j * t^ell = P(t), checks the Fricke expansion
//   C^ell * j(q^ell) = sum_d a_d C^d t^(ell-d),   C = ell^(12/(ell-1)),
// and returns the rational pair (j1, j2) = (P(1), P(C)/C^ell), which the
// polynomial must annihilate.  Throws if any identity fails.
struct HauptAnchor {
    mpq_class j1, j2;
};
HauptAnchor hauptmodul_anchor(int ell, const std::vector<std::vector<mpz_class>>& phi);

} // namespace iso
