#pragma once

#include <gmpxx.h>

#include <vector>

namespace iso {

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BQF {
    long long a = 0, b = 0, c = 0;
    long long disc() const { return b * b - 4 * a * c; }
    bool operator==(const BQF&) const = default;
};

bool bqf_is_primitive(const BQF& f);

// Reduced positive-definite form: |b| <= a <= c, with b >= 0 whenever
// |b| = a or a = c.
bool bqf_is_reduced(const BQF& f);

// All primitive reduced forms of discriminant D < 0, D = 0 or 1 mod 4,
// ordered by (a, b).  The class number h(D) is the length of the list.
// Throws std::domain_error for a D outside that range.
std::vector<BQF> reduced_forms(long long D);

long long class_number(long long D);

// Fundamental discriminant: D = 1 mod 4 squarefree, or D = 4m with
// m = 2 or 3 mod 4 squarefree.
bool is_fundamental_disc(long long D);

struct OrderRatioReport {
    long long D = 0;       // fundamental discriminant of the maximal order
    int ell = 0;
    long long h_base = 0;  // h(D)
    long long h_sub = 0;   // h(ell^2 D)
    int unit_index = 1;    // [O^* : O'^*]: 3 for D = -3, 2 for D = -4, else 1
    mpq_class ratio_counted;   // h(ell^2 D) / h(D) by form counting
    mpq_class ratio_formula;   // (1/u)(ell - (D|ell))
    bool match = false;        // the two ratios agree
    bool lower_bound_ok = false;  // ratio >= ell - 1; forced when u = 1
};

// Compares the counted class-number ratio between the order of conductor ell
// and the maximal order against the closed form.  D must be fundamental and
// ell an odd prime not dividing D.
OrderRatioReport isogenous_order_ratio_check(long long D, int ell);

// Degree guard: a field of degree d admits no CM for ell > 2d+1, because the
// class-number ratio above is bounded by cm_ratio_bound(d).
bool cm_guard(int ell, int d);
long long cm_ratio_bound(int d); // = 2d

} // namespace iso
