#pragma once

#include "iso/subgroup.hpp"

#include <string>
#include <vector>

namespace iso {

// Scan for exceptional subgroups G <= GL_2(F_ell): every element fixes a point
// of P^1 but no point is fixed by the whole group.  Exceptionality only
// depends on the image in PGL_2 (the discriminant square class of an element
// is scalar-invariant), so the search runs projectively and reports each class
// as its scalar-saturated preimage in GL_2, up to GL_2-conjugacy.
//
// Modes split the results by determinant content of the saturated group:
// "split" groups contain non-square determinants (projective image not inside
// PSL), "sl2" groups have square determinants only.
enum class ScanMode { split, sl2, all };

ScanMode scan_mode_from_string(const std::string& s);
std::string to_string(ScanMode m);

struct ScanEntry {
    SubgroupDesc group;  // scalar-saturated subgroup of GL_2(F_ell)
    ProjClassification cls;
    std::vector<int> orbit_sizes;  // orbit partition of P^1, ascending
    int smallest_orbit = 0;
};

struct ExceptionalScanReport {
    int ell = 0;
    ScanMode mode = ScanMode::all;
    std::vector<ScanEntry> groups;
    std::vector<std::string> violations;
};

// ell <= 13: exhaustive lattice search over the reducible pool (results are
// cached per ell).  Larger ell up to 101 use a targeted search through the
// split-Cartan normalizer and the A4/S4/A5 embeddings admitted by the
// congruence class of ell; beyond that the call errors out.
ExceptionalScanReport enumerate_exceptional(int ell, ScanMode mode);

// Check every split-mode (resp. sl2-mode) exceptional group at ell against
// the expected structure: congruence class of ell, dihedral shape and order
// divisibility, containment in a split-Cartan normalizer, the size-2 orbit,
// determinant squares on the rotation subgroup, and the order bound.
// Returns human-readable violation strings; empty means all checks passed.
// Requires ell <= 13 (exhaustive enumeration).
std::vector<std::string> verify_lemma_split(int ell);
std::vector<std::string> verify_lemma_sl2(int ell);

std::string scan_report_json(const ExceptionalScanReport& rep);

} // namespace iso
