#include "iso/elkies.hpp"

#include <numeric>
#include <stdexcept>

namespace iso {

EllCurve elkies7_curve() {
    return make_curve(QuadFieldElem(-1715), QuadFieldElem(33614));
}

QuadFieldElem elkies7_t(const QuadFieldElem& u, const QuadFieldElem& v) {
    if (v.is_zero())
        throw std::domain_error("elkies7_t: v = 0 (use the removable limit)");
    return (QuadFieldElem(7) * u - v + QuadFieldElem(343)) /
           (QuadFieldElem(2) * v);
}

QuadFieldElem elkies7_j_of_t(const QuadFieldElem& t) {
    auto cube = [](const QuadFieldElem& x) { return x * x * x; };
    QuadFieldElem t2 = t * t;
    QuadFieldElem t3 = t2 * t;
    QuadFieldElem t4 = t2 * t2;
    QuadFieldElem f1 = t - QuadFieldElem(3);
    QuadFieldElem f2 = t - QuadFieldElem(2);
    QuadFieldElem f3 = t2 + t - QuadFieldElem(5);
    QuadFieldElem f4 = t2 + t + QuadFieldElem(2);
    QuadFieldElem f5 =
        t4 - QuadFieldElem(3) * t3 + QuadFieldElem(2) * t2 + QuadFieldElem(3) * t + QuadFieldElem(1);
    QuadFieldElem den = t3 - QuadFieldElem(2) * t2 - t + QuadFieldElem(1);
    if (den.is_zero())
        throw std::domain_error("elkies7_j_of_t: parameter at a pole");
    QuadFieldElem den7 = cube(den) * cube(den) * den;
    QuadFieldElem num = cube(f1) * f2 * cube(f3) * cube(f4) * cube(f5);
    return -(num / den7);
}

PointSearchResult elkies7_point_search(long long D, long H) {
    if (H < 1) throw std::domain_error("elkies7_point_search: H must be >= 1");
    PointSearchResult res;
    auto push_j = [&](const QuadFieldElem& j) {
        for (const auto& seen : res.j_values)
            if (seen == j) return;
        res.j_values.push_back(j);
    };
    auto consider = [&](const QuadFieldElem& x) {
        QuadFieldElem rhs =
            x * x * x - QuadFieldElem(1715) * x + QuadFieldElem(33614);
        auto v = qf_sqrt(rhs);
        if (!v) return;
        std::vector<QuadFieldElem> vs = {*v};
        if (!v->is_zero()) vs.push_back(-*v);
        for (const auto& vv : vs) {
            res.points.push_back({x, vv});
            if (vv.is_zero()) {
                if (x == QuadFieldElem(-49))
                    push_j(elkies7_j_of_t(QuadFieldElem(mpq_class(-1, 2))));
                // the other two-torsion x's are poles of the parameter
                continue;
            }
            push_j(elkies7_j_of_t(elkies7_t(x, vv)));
        }
    };

    for (long d = 1; d <= H; ++d) {
        for (long n1 = -H; n1 <= H; ++n1) {
            if (D == 1) {
                if (std::gcd(std::abs(n1), d) != 1) continue;
                consider(QuadFieldElem(mpq_class(n1, d)));
                continue;
            }
            for (long n2 = -H; n2 <= H; ++n2) {
                long g = std::gcd(std::gcd(std::abs(n1), std::abs(n2)), d);
                if (g != 1) continue;
                consider(QuadFieldElem(mpq_class(n1, d), mpq_class(n2, d), D));
            }
        }
    }
    return res;
}

} // namespace iso
