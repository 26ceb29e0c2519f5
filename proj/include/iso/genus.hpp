#pragma once

#include "iso/subgroup.hpp"

#include <string>
#include <vector>

namespace iso {

// Genus of the modular curve attached to the normalizer of a split Cartan
// subgroup at level ell (prime, >= 5), by the closed formula
//   (ell^2 - 8*ell + 11 - 4*(-3|ell)) / 24.
// Throws if the result is not an integer.
long long genus_split_closed(int ell);

// Closed-formula genus for the curves attached to the exceptional projective
// images A4, S4, A5.  The formulas only produce integers on the congruence
// classes of ell where the corresponding subgroup lives inside PSL_2(F_ell);
// elsewhere the fraction is returned unreduced with integral = false rather
// than raising, so callers can surface it as data.
struct ExcGenus {
    bool integral = false;
    long long numerator = 0;
    long long denominator = 1;
    long long genus = 0;  // meaningful only when integral
};
ExcGenus genus_exceptional_closed(int ell, const std::string& kind);  // A4 | S4 | A5

// Genus of the curve attached to a Borel subgroup (cyclic ell-isogenies) by
// the classical profile mu = ell+1, nu2 = 1 + (-1|ell), nu3 = 1 + (-3|ell),
// nu_inf = 2.  ell must be an odd prime.
long long genus_borel_closed(int ell);

// Genus computed from the action of PSL_2(F_ell) on right cosets of the
// image of the subgroup: mu cosets, nu2/nu3 fixed points of the order-2 and
// order-3 rotations, nu_inf cycles of the translation, and
//   g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2.
struct CosetGenus {
    long long mu = 0;
    long long nu2 = 0;
    long long nu3 = 0;
    long long nu_inf = 0;
    long long genus = 0;
};

// Named subgroups: "split" (split-Cartan normalizer), "borel", "A4", "S4",
// "A5" (triangle search, PSL first), and "psl" (the full group, giving the
// line).  ell must be an odd prime; A5 additionally needs ell = +-1 mod 10.
CosetGenus genus_from_cosets(int ell, const std::string& kind);

// Same computation for an explicit subgroup of GL_2(F_ell).  The genus only
// depends on the intersection of the projective image with PSL; a nontrivial
// group meeting PSL trivially is rejected.
CosetGenus genus_from_cosets(const SubgroupDesc& g);

// Closed split genus for every prime in [lo, hi], plus the exceptional rows
// on the congruence classes that admit them.
struct FrontierRow {
    int ell = 0;
    std::string kind;
    long long genus = 0;
};
std::vector<FrontierRow> finiteness_frontier(int lo, int hi);

} // namespace iso
