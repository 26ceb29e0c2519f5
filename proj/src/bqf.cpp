#include "iso/bqf.hpp"

#include "iso/fp.hpp"

#include <numeric>
#include <stdexcept>

namespace iso {

bool bqf_is_primitive(const BQF& f) {
    return std::gcd(std::gcd(std::abs(f.a), std::abs(f.b)), std::abs(f.c)) ==
           1;
}

bool bqf_is_reduced(const BQF& f) {
    if (f.a <= 0 || f.disc() >= 0) return false;
    long long ab = std::abs(f.b);
    if (ab > f.a || f.a > f.c) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

std::vector<BQF> reduced_forms(long long D) {
    if (D >= 0) throw std::domain_error("reduced_forms: discriminant must be negative");
    long long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw std::domain_error("reduced_forms: discriminant must be 0 or 1 mod 4");

    std::vector<BQF> out;
    // |b| <= a and b^2 - 4ac = D force 3a^2 <= -D.
    for (long long a = 1; 3 * a * a <= -D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            BQF f{a, b, c};
            if (bqf_is_reduced(f) && bqf_is_primitive(f)) out.push_back(f);
        }
    }
    return out;
}

long long class_number(long long D) {
    return (long long)reduced_forms(D).size();
}

static bool squarefree(long long m) {
    m = std::abs(m);
    for (long long k = 2; k * k <= m; ++k)
        if (m % (k * k) == 0) return false;
    return true;
}

bool is_fundamental_disc(long long D) {
    if (D >= 0) return false;
    long long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    long long m = D / 4;
    long long rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

OrderRatioReport isogenous_order_ratio_check(long long D, int ell) {
    if (!is_fundamental_disc(D))
        throw std::domain_error(
            "isogenous_order_ratio_check: discriminant not fundamental");
    if (ell == 2 || !is_prime_small(ell))
        throw std::domain_error(
            "isogenous_order_ratio_check: ell must be an odd prime");
    if (D % ell == 0)
        throw std::domain_error(
            "isogenous_order_ratio_check: ell divides the discriminant");

    OrderRatioReport rep;
    rep.D = D;
    rep.ell = ell;
    rep.h_base = class_number(D);
    rep.h_sub = class_number((long long)ell * ell * D);
    rep.unit_index = D == -3 ? 3 : D == -4 ? 2 : 1;
    rep.ratio_counted = mpq_class((long)rep.h_sub, (long)rep.h_base);
    rep.ratio_counted.canonicalize();
    rep.ratio_formula =
        mpq_class((long)(ell - legendre(D, ell)), (long)rep.unit_index);
    rep.ratio_formula.canonicalize();
    rep.match = rep.ratio_counted == rep.ratio_formula;
    rep.lower_bound_ok = rep.ratio_counted >= ell - 1;
    return rep;
}

bool cm_guard(int ell, int d) { return ell > 2 * d + 1; }

long long cm_ratio_bound(int d) { return 2LL * d; }

} // namespace iso
