#pragma once

#include "iso/ellcurve.hpp"
#include "iso/quadfield.hpp"

#include <vector>

namespace iso {

// The genus-one curve v^2 = u^3 - 1715 u + 33614 whose points parametrize
// j-invariants that pass the mod-7 local test at every prime.
EllCurve elkies7_curve();

// Coordinate on the parametrizing line: t = (7u - v + 343) / (2v).
// Throws when v = 0; the point (-49, 0) is covered by its removable limit
// t = -1/2, which callers apply explicitly.
QuadFieldElem elkies7_t(const QuadFieldElem& u, const QuadFieldElem& v);

// j-invariant attached to a parameter value.
QuadFieldElem elkies7_j_of_t(const QuadFieldElem& t);

struct ElkiesPoint {
    QuadFieldElem u, v;
};

struct PointSearchResult {
    std::vector<ElkiesPoint> points;      // affine points found, both v signs
    std::vector<QuadFieldElem> j_values;  // distinct j's the points realize
};

// Exhaustive small-height search for affine points over Q (D = 1) or
// Q(sqrt(D)): x = (n1 + n2 sqrt(D)) / d with |n1|, |n2| <= H, 1 <= d <= H,
// gcd(n1, n2, d) = 1.
PointSearchResult elkies7_point_search(long long D, long H);

} // namespace iso
