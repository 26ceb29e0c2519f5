#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace iso {

// Symmetric modular polynomial of prime level: c[a][b] is the coefficient of
// X^a Y^b, with degree ell + 1 in each variable.
struct ModPoly {
    int ell = 0;
    std::vector<std::vector<mpz_class>> c;  // (ell+2) x (ell+2)

    const mpz_class& at(int a, int b) const { return c[a][b]; }
};

// File format: a header line "ell <p>", then one line "<i> <j> <coeff>" per
// nonzero coefficient with i >= j (the mirror entry is implied), '#' starts
// a comment.  The loader fails on duplicate or misordered entries and
// validates degree, monicity, symmetry of the stored data, and the
// Kronecker congruence mod ell.
ModPoly modpoly_load(const std::string& path);
void modpoly_save(const ModPoly& p, const std::string& path);

// Build directly from generated coefficients (runs the same validation).
ModPoly modpoly_from_coeffs(int ell, std::vector<std::vector<mpz_class>> c);

mpq_class modpoly_eval(const ModPoly& p, const mpq_class& x, const mpq_class& y);

// Coefficients of Phi(j, Y) as a monic polynomial in Y, degree ell + 1,
// index = power of Y.
std::vector<mpq_class> modpoly_eval_at_x(const ModPoly& p, const mpq_class& j);

} // namespace iso
