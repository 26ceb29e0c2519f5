#pragma once

#include "iso/quadfield.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace iso {

// Short Weierstrass model y^2 = x^3 + A x + B over Q or a quadratic field.
struct EllCurve {
    QuadFieldElem A, B;
    long long D = 1;  // ambient field tag shared by A and B
};

EllCurve make_curve(const QuadFieldElem& A, const QuadFieldElem& B);
QuadFieldElem curve_disc_factor(const EllCurve& E);  // 4A^3 + 27B^2
QuadFieldElem j_invariant(const EllCurve& E);
// A curve with the requested j-invariant (any model with that j will do).
EllCurve curve_from_j(const QuadFieldElem& j);
EllCurve quadratic_twist(const EllCurve& E, const mpq_class& d);
// Reinterpret a rational curve inside Q(sqrt(D)).
EllCurve base_change(const EllCurve& E, long long D);

// Quadratic residue tables, one per prime, built on first use.
struct SquaresCache {
    std::map<long long, std::vector<uint8_t>> tables;
    const std::vector<uint8_t>& table(long long p);
    int chi(long long v, long long p);  // quadratic character, v in [0, p)
};

long long count_points_fp(long long A, long long B, long long p,
                          SquaresCache& squares);
// Point count over F_{p^2} realized as F_p[w]/(w^2 - d), d a non-residue.
long long count_points_fp2(long long a0, long long a1, long long b0,
                           long long b1, long long d, long long p);

struct LocalPrime {
    long long p;     // rational prime below
    int fdeg;        // residue degree
    long long q;     // norm
    int emb;         // embedding index, only meaningful for split primes
    long long a;     // Frobenius trace
    bool reducible;  // char poly of Frobenius has a root mod ell
};

struct LocalScanReport {
    int ell = 0;
    long long bound = 0;
    std::vector<LocalPrime> tested;
    std::vector<LocalPrime> failing;
    std::map<std::string, std::vector<long long>> skipped;
    double pass_ratio() const;
};

// Tests every prime of the base field with norm <= bound: computes the
// Frobenius trace at primes of good reduction and checks whether the mod-ell
// characteristic polynomial has a rational root.  Primes that cannot be
// tested are recorded with the reason.
LocalScanReport local_scan(const EllCurve& E, int ell, long long bound);

} // namespace iso
