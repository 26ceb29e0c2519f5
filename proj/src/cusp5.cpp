#include "iso/cusp5.hpp"

#include "iso/scan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace iso {

namespace {
constexpr int L = 5;
int red(long long x) { return (int)((x % L + L) % L); }
} // namespace

int cusp_pairing(const CuspDatum& x) {
    return red((long long)x.w1 * x.a2 - (long long)x.w2 * x.a1);
}

CuspDatum cusp_aut(const CuspDatum& x, int eps, int alpha) {
    if (eps != 1 && eps != 4) throw std::domain_error("cusp_aut: eps must be +-1 mod 5");
    CuspDatum y;
    y.w1 = red((long long)eps * x.w1 + (long long)alpha * x.a1);
    y.a1 = red((long long)eps * x.a1);
    y.w2 = red((long long)eps * x.w2 + (long long)alpha * x.a2);
    y.a2 = red((long long)eps * x.a2);
    return y;
}

std::vector<CuspDatum> cusp_aut_orbit(const CuspDatum& x) {
    std::set<CuspDatum> orb;
    for (int eps : {1, 4})
        for (int alpha = 0; alpha < L; ++alpha) orb.insert(cusp_aut(x, eps, alpha));
    return std::vector<CuspDatum>(orb.begin(), orb.end());
}

CuspDatum cusp_matrix_action(const CuspDatum& x, const Mat2& g) {
    if (g.ell != L) throw std::domain_error("cusp_matrix_action: matrix must live over F_5");
    CuspDatum y;
    y.w1 = red((long long)g.a * x.w1 + (long long)g.c * x.w2);
    y.a1 = red((long long)g.a * x.a1 + (long long)g.c * x.a2);
    y.w2 = red((long long)g.b * x.w1 + (long long)g.d * x.w2);
    y.a2 = red((long long)g.b * x.a1 + (long long)g.d * x.a2);
    return y;
}

CuspDatum cusp_galois(const CuspDatum& x, int c) {
    if (red(c) == 0) throw std::domain_error("cusp_galois: c must be a unit mod 5");
    CuspDatum y = x;
    y.w1 = red((long long)c * x.w1);
    y.w2 = red((long long)c * x.w2);
    return y;
}

Cusp5Report cusp5_certificate() {
    Cusp5Report rep;
    rep.distinguished = CuspDatum{1, 0, 0, 1};
    rep.aut_orbit = cusp_aut_orbit(rep.distinguished);

    // The Klein-four preimage in GL_2(F_5), taken straight from the
    // exceptional scan so the certificate runs against the same group.
    auto scan = enumerate_exceptional(5, ScanMode::sl2);
    if (scan.groups.size() != 1 || scan.groups[0].group.order() != 16)
        throw std::logic_error("cusp5_certificate: unexpected scan output at 5");
    const std::vector<Mat2>& klein = scan.groups[0].group.elements;

    // Closure of the distinguished packet under the automorphisms and the
    // matrix action: the full packet class a single rational point of the
    // quotient curve accounts for.
    std::set<CuspDatum> cls;
    std::vector<CuspDatum> stack{rep.distinguished};
    while (!stack.empty()) {
        CuspDatum x = stack.back();
        stack.pop_back();
        if (cls.count(x)) continue;
        cls.insert(x);
        for (int eps : {1, 4})
            for (int alpha = 0; alpha < L; ++alpha) stack.push_back(cusp_aut(x, eps, alpha));
        for (const Mat2& g : klein) stack.push_back(cusp_matrix_action(x, g));
    }
    rep.rational_class.assign(cls.begin(), cls.end());
    rep.class_size = (long long)cls.size();

    for (int c = 1; c < L; ++c) {
        bool stable = true;
        for (const CuspDatum& x : cls)
            if (!cls.count(cusp_galois(x, c))) {
                stable = false;
                break;
            }
        rep.galois_stable[c] = stable;
    }

    rep.verdict = rep.galois_stable.at(1) && !rep.galois_stable.at(2) &&
                  !rep.galois_stable.at(3) && rep.galois_stable.at(4);
    return rep;
}

std::string cusp5_json(const Cusp5Report& rep) {
    auto datum = [](const CuspDatum& x) {
        return nlohmann::ordered_json::array(
            {nlohmann::ordered_json::array({x.w1, x.a1}), nlohmann::ordered_json::array({x.w2, x.a2})});
    };
    nlohmann::ordered_json j;
    j["distinguished"] = datum(rep.distinguished);
    j["aut_orbit"] = nlohmann::ordered_json::array();
    for (const CuspDatum& x : rep.aut_orbit) j["aut_orbit"].push_back(datum(x));
    j["class_size"] = rep.class_size;
    nlohmann::ordered_json st;
    for (const auto& [c, s] : rep.galois_stable) st[std::to_string(c)] = s;
    j["galois_stable"] = st;
    j["verdict"] = rep.verdict;
    return j.dump(2);
}

} // namespace iso
