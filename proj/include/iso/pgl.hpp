#pragma once

#include "iso/gl2.hpp"

#include <cstdint>
#include <vector>

namespace iso {

// Fully tabulated PGL_2(F_ell) for small ell: multiplication, inverses, the
// action on P^1, and the projective invariants the subgroup search needs.
// Size is ell^3 - ell, so tables stay small through ell = 13 (2184 elements).
struct PglContext {
    int ell = 0;
    int n = 0;                         // |PGL_2(F_ell)|
    int npts = 0;                      // |P^1| = ell + 1
    std::vector<Mat2> rep;             // canonical representatives, id order
    std::vector<int32_t> enc2id;       // proj_rep_encode -> id, -1 if absent
    std::vector<uint16_t> mul;         // n*n
    std::vector<uint16_t> inv;
    std::vector<uint16_t> act;         // n*npts, image of point j under rep[i]
    std::vector<uint16_t> fixmask;     // bitmask over P^1 of fixed points
    std::vector<uint8_t> reducible;    // char poly splits (scalar-invariant)
    std::vector<uint8_t> det_sq;       // det of any lift is a square, i.e. in PSL
    std::vector<uint16_t> porder;      // projective order
    std::vector<int32_t> class_of;     // conjugacy class id
    std::vector<uint16_t> class_reps;  // minimal element of each class

    int id_of(const Mat2& g) const { return enc2id[proj_rep_encode(proj_rep(g))]; }
    int pmul(int x, int y) const { return mul[(size_t)x * n + y]; }
    int action(int g, int pt) const { return act[(size_t)g * npts + pt]; }
    int conj(int c, int x) const { return pmul(pmul(c, x), inv[c]); }

    // Shared per-ell instance; construction is a few hundred ms at ell = 13.
    static const PglContext& get(int ell);
};

} // namespace iso
