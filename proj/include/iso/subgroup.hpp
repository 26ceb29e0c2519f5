#pragma once

#include "iso/gl2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iso {

// Explicit subgroup of GL_2(F_ell): generators plus the full sorted element
// list.  Groups handled this way are tiny (scalar-saturated exceptional
// groups top out at a few thousand elements), so the flat representation is
// the simplest thing that works.
struct SubgroupDesc {
    int ell = 0;
    std::vector<Mat2> generators;
    std::vector<Mat2> elements;  // sorted, canonical entries
    size_t order() const { return elements.size(); }
};

// Closure of a generating set under multiplication.  Throws if the closure
// exceeds cap (default: the full group order, i.e. no effective cap).
SubgroupDesc closure(const std::vector<Mat2>& gens, size_t cap = 0);

// Every element fixes a point of P^1, but no point is fixed by all of them.
bool is_exceptional_group(const SubgroupDesc& g);

// Classification of the image of a subgroup in PGL_2(F_ell).
struct ProjClassification {
    std::string kind;            // cyclic | dihedral | borel-reducible | A4 | S4 | A5 | psl-containing
    long long n = 0;             // order parameter for cyclic / dihedral
    long long proj_order = 0;    // size of the projective image
    bool in_psl = false;         // all determinants are squares
    std::vector<int> det_group;  // subgroup of F_ell^* generated by determinants
};

ProjClassification proj_classify(const SubgroupDesc& g);

// Projective image of g as a sorted list of canonical PGL representatives.
std::vector<Mat2> proj_image(const SubgroupDesc& g);

// Classify a subgroup of PGL_2 given by canonical representatives, together
// with the determinant data of a GL_2 group mapping onto it.
ProjClassification proj_classify_image(const std::vector<Mat2>& h, int ell,
                                       const std::vector<int>& dets);

// Orbit partition of a matrix group acting on P^1(F_ell); sizes ascending.
std::vector<std::vector<ProjPoint>> orbit_structure(const std::vector<Mat2>& elements, int ell);
std::vector<int> orbit_sizes(const std::vector<Mat2>& elements, int ell);

// Subgroup of F_ell^* generated by a list of units, as a sorted list.
std::vector<int> unit_subgroup(const std::vector<int>& units, int ell);

// Find a (2, 3, k)-triangle group inside PGL_2(F_ell): an involution s and an
// order-3 element t with s*t of projective order k, whose closure has exactly
// the expected size (12 for k = 3, 24 for k = 4, 60 for k = 5).  With
// psl_only, both generators are restricted to square determinant class.
// Returns the sorted canonical representatives of the closure; throws if no
// such subgroup exists.  Deterministic: generators are scanned in a fixed
// enumeration order.
std::vector<Mat2> triangle_group(int ell, int k, bool psl_only);

} // namespace iso
