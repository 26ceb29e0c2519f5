#include "iso/survey.hpp"

#include "iso/fp.hpp"
#include "iso/scan.hpp"

#include <cstdlib>
#include <stdexcept>

namespace iso {

NumberFieldDesc field_rationals() { return {1, 1, 1}; }

NumberFieldDesc field_quadratic(long long D) {
    NumberFieldDesc K;
    K.d = 2;
    K.D = D;
    long long r = ((D % 4) + 4) % 4;
    K.Delta = r == 1 ? D : 4 * D;
    validate_field(K);
    return K;
}

NumberFieldDesc field_general(int d, long long Delta) {
    NumberFieldDesc K;
    K.d = d;
    K.Delta = Delta;
    K.D = 0;
    validate_field(K);
    return K;
}

static bool squarefree_ll(long long m) {
    m = std::llabs(m);
    for (long long k = 2; k * k <= m; ++k)
        if (m % (k * k) == 0) return false;
    return true;
}

void validate_field(const NumberFieldDesc& K) {
    if (K.d < 1) throw std::domain_error("field: degree must be >= 1");
    if (K.Delta == 0) throw std::domain_error("field: discriminant is nonzero");
    if (K.d == 1) {
        if (K.Delta != 1 || K.D != 1)
            throw std::domain_error("field: the rationals have Delta = D = 1");
        return;
    }
    if (K.d == 2) {
        if (K.D == 0 || K.D == 1 || !squarefree_ll(K.D))
            throw std::domain_error(
                "field: quadratic realization must be squarefree, not 0 or 1");
        long long r = ((K.D % 4) + 4) % 4;
        long long want = r == 1 ? K.D : 4 * K.D;
        if (K.Delta != want)
            throw std::domain_error(
                "field: discriminant inconsistent with sqrt(D)");
        return;
    }
    if (K.D != 0)
        throw std::domain_error(
            "field: quadratic realization only applies to degree <= 2");
}

long long exceptional_bound(const NumberFieldDesc& K) {
    validate_field(K);
    return std::max(std::llabs(K.Delta), 6LL * K.d + 1);
}

std::vector<int> theorem4_window(int d) {
    if (d < 1) throw std::domain_error("theorem4_window: degree must be >= 1");
    std::vector<int> out;
    for (int ell = 7; ell <= 6 * d + 1; ++ell)
        if (is_prime_small(ell) && ell % 4 == 3) out.push_back(ell);
    return out;
}

int semistable_degree(JClass cls, int ell) {
    if (!is_prime_small(ell))
        throw std::domain_error("semistable_degree: ell must be prime");
    if (cls == JClass::generic) return 1;
    if (ell == 2) return 12;
    if (ell == 3) return 6;
    return cls == JClass::j1728 ? 2 : 3;
}

std::vector<SurveyVerdict> survey(const NumberFieldDesc& K, int ell,
                                  const std::vector<QuadFieldElem>& js,
                                  long long bound, const ModPoly& phi) {
    validate_field(K);
    if (ell < 2 || ell > exceptional_bound(K))
        throw std::domain_error(
            "survey: ell outside [2, exceptional_bound(K)]");
    if (phi.ell != ell)
        throw std::domain_error("survey: modular polynomial level mismatch");
    if (K.d > 2)
        throw std::domain_error(
            "survey: curve arithmetic supports degree <= 2 only");

    std::vector<SurveyVerdict> out;
    out.reserve(js.size());
    for (const auto& j : js) {
        SurveyVerdict v;
        v.ell = ell;
        v.j = j;
        try {
            QuadFieldElem jt = j;
            if (K.D != 1) {
                if (jt.D != 1 && jt.D != K.D)
                    throw std::domain_error("survey: j outside the field");
                jt.D = K.D;
            } else if (jt.D != 1 && jt.b != 0) {
                throw std::domain_error("survey: irrational j over Q");
            }
            v.j = jt;
            EllCurve E = curve_from_j(jt);
            auto loc = local_scan(E, ell, bound);
            v.tested = (long long)loc.tested.size();
            v.failing = (long long)loc.failing.size();
            v.pass_fraction = loc.pass_ratio();
            auto glob = global_isogeny_test(phi, jt, K.D);
            v.global_over_K = glob.isogenous_over_K;
            v.global_over_ext = glob.isogenous_over_ext;
            v.cm_guard_ok = cm_guard(ell, K.d);
            if (v.global_over_K)
                v.classification = "globally-isogenous";
            else if (v.pass_fraction == 1.0)
                v.classification = "exceptional-candidate";
            else
                v.classification = "locally-failing";
        } catch (const std::exception& e) {
            v.error = e.what();
            v.classification.clear();
        }
        out.push_back(std::move(v));
    }
    return out;
}

FiveCheckReport five_infinitude_check(long long bound, const ModPoly& phi5) {
    FiveCheckReport rep;
    rep.cusp = cusp5_certificate();
    rep.cusp_certificate = rep.cusp.verdict;

    // y^2 = x^3 - 56x + 4848 base-changed to Q(sqrt 5)
    mpq_class j608(-4741632, 2476099);
    j608.canonicalize();
    auto verdicts =
        survey(field_quadratic(5), 5, {QuadFieldElem(j608)}, bound, phi5);
    rep.witness = verdicts.at(0);
    rep.witness_is_candidate =
        rep.witness.classification == "exceptional-candidate";

    rep.split_scan_empty =
        enumerate_exceptional(5, ScanMode::split).groups.empty();
    rep.sl2_lemma_clean = verify_lemma_sl2(5).empty();

    rep.ok = rep.cusp_certificate && rep.witness_is_candidate &&
             rep.split_scan_empty && rep.sl2_lemma_clean;
    return rep;
}

} // namespace iso
