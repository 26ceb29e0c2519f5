#pragma once

#include "iso/bqf.hpp"
#include "iso/cusp5.hpp"
#include "iso/ellcurve.hpp"
#include "iso/global_test.hpp"
#include "iso/modpoly.hpp"

#include <string>
#include <vector>

namespace iso {

// Base field of the survey.  For degree 2 the field is Q(sqrt(D)) with D
// squarefree and Delta the usual discriminant (D or 4D); degree 1 is Q.
// Higher degrees carry only (d, Delta), which is all the bound arithmetic
// consumes; D = 0 marks the absence of a quadratic realization.
struct NumberFieldDesc {
    int d = 1;
    long long Delta = 1;
    long long D = 1;
};

NumberFieldDesc field_rationals();
NumberFieldDesc field_quadratic(long long D);
NumberFieldDesc field_general(int d, long long Delta);

// Throws std::domain_error when the descriptor is inconsistent.
void validate_field(const NumberFieldDesc& K);

// Largest prime that can occupy an exceptional pair: max{|Delta|, 6d+1}.
long long exceptional_bound(const NumberFieldDesc& K);

// Primes ell = 3 mod 4 with 7 <= ell <= 6d+1: the levels left open for a
// degree-d field not containing sqrt((-1|ell) ell).
std::vector<int> theorem4_window(int d);

// Residue class of j modulo the prime above ell.
enum class JClass { generic, j1728, j0 };

// Degree of the extension over which a curve with the given j-class acquires
// semistable reduction at ell.  At ell = 2 and 3 the values 1728 and 0
// coincide modulo the prime, so both classes share the j = 0 rows.
int semistable_degree(JClass cls, int ell);

struct SurveyVerdict {
    int ell = 0;
    QuadFieldElem j;
    long long tested = 0;
    long long failing = 0;
    double pass_fraction = 0.0;
    bool global_over_K = false;
    bool global_over_ext = false;  // over K(sqrt(-ell))
    bool cm_guard_ok = false;
    std::string classification;  // exceptional-candidate | globally-isogenous
                                 // | locally-failing
    std::string error;           // nonempty when this item aborted

    bool operator==(const SurveyVerdict&) const = default;
};

// Runs the full local-global pipeline on each j over K: fixed-twist curve,
// local scan to the norm bound, global test over K and over K(sqrt(-ell)).
// A failure on one j is recorded in its verdict and never aborts the rest.
std::vector<SurveyVerdict> survey(const NumberFieldDesc& K, int ell,
                                  const std::vector<QuadFieldElem>& js,
                                  long long bound, const ModPoly& phi);

struct FiveCheckReport {
    Cusp5Report cusp;
    bool cusp_certificate = false;
    SurveyVerdict witness;  // the known level-5 curve over Q(sqrt 5)
    bool witness_is_candidate = false;
    bool split_scan_empty = false;  // no level-5 exceptional group survives
                                    // without square determinants
    bool sl2_lemma_clean = false;
    bool ok = false;
};

// Evidence bundle for the level-5 dichotomy: a Galois-stability certificate
// for the distinguished cusp class, one concrete exceptional candidate over
// Q(sqrt 5), and the group-theoretic emptiness over fields without sqrt 5.
FiveCheckReport five_infinitude_check(long long bound, const ModPoly& phi5);

} // namespace iso
