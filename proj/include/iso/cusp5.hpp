#pragma once

#include "iso/gl2.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace iso {

// A cusp packet of level 5, recorded by the exponents of its two Tate
// parameters: component vectors (w1, a1) and (w2, a2) over Z/5.  The packet
// is nondegenerate exactly when the pairing w1*a2 - w2*a1 is nonzero.
struct CuspDatum {
    int w1 = 0, a1 = 0, w2 = 0, a2 = 0;
    auto operator<=>(const CuspDatum&) const = default;
};

int cusp_pairing(const CuspDatum& x);

// The 10 automorphisms acting on each component vector as
// (w, a) -> (eps*w + alpha*a, eps*a), eps in {1, 4}, alpha in Z/5.
CuspDatum cusp_aut(const CuspDatum& x, int eps, int alpha);
std::vector<CuspDatum> cusp_aut_orbit(const CuspDatum& x);  // sorted

// Precomposition action of g in GL_2(F_5) on a packet.
CuspDatum cusp_matrix_action(const CuspDatum& x, const Mat2& g);

// Cyclotomic action: the character value c scales the w-exponents.
CuspDatum cusp_galois(const CuspDatum& x, int c);

struct Cusp5Report {
    CuspDatum distinguished;
    std::vector<CuspDatum> aut_orbit;       // orbit of the distinguished packet
    std::vector<CuspDatum> rational_class;  // closure under automorphisms and
                                            // the 16-element Klein preimage
    long long class_size = 0;
    std::map<int, bool> galois_stable;      // c in {1, 2, 3, 4}
    bool verdict = false;                   // stable exactly at c in {1, 4}
};

// Certificate that the distinguished cusp packet of the level-5 Klein
// quotient is defined over the real quadratic subfield of the 5th
// cyclotomic field: its class is stable under c = +-1 and nothing else.
Cusp5Report cusp5_certificate();

std::string cusp5_json(const Cusp5Report& rep);

} // namespace iso
