#include "iso/genus.hpp"

#include "iso/fp.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace iso {

long long genus_split_closed(int ell) {
    if (!is_prime_small(ell) || ell < 5)
        throw std::domain_error("genus_split_closed: ell must be a prime >= 5");
    long long L = ell;
    long long num = L * L - 8 * L + 11 - 4 * legendre(-3, ell);
    if (num % 24 != 0) throw std::domain_error("genus_split_closed: formula not integral");
    return num / 24;
}

ExcGenus genus_exceptional_closed(int ell, const std::string& kind) {
    if (!is_prime_small(ell) || ell < 5)
        throw std::domain_error("genus_exceptional_closed: ell must be a prime >= 5");
    long long L = ell;
    long long e2 = (ell % 4 == 1) ? 1 : -1;
    long long e3 = (ell % 3 == 1) ? 1 : -1;
    long long num, den;
    if (kind == "A4") {
        num = L * L * L - 6 * L * L - 51 * L + 294 + 18 * e2 + 32 * e3;
        den = 288;
    } else if (kind == "S4") {
        num = L * L * L - 6 * L * L - 87 * L + 582 + 54 * e2 + 32 * e3;
        den = 576;
    } else if (kind == "A5") {
        num = L * L * L - 6 * L * L - 171 * L + 1446 + 90 * e2 + 80 * e3;
        den = 1440;
    } else {
        throw std::domain_error("genus_exceptional_closed: kind must be A4, S4 or A5");
    }
    ExcGenus g;
    g.numerator = num;
    g.denominator = den;
    g.integral = num % den == 0;
    if (g.integral) g.genus = num / den;
    return g;
}

long long genus_borel_closed(int ell) {
    if (!is_prime_small(ell) || ell < 3)
        throw std::domain_error("genus_borel_closed: ell must be an odd prime");
    long long mu = ell + 1;
    long long nu2 = 1 + legendre(-1, ell);
    long long nu3 = 1 + legendre(-3, ell);
    long long twelve = mu - 3 * nu2 - 4 * nu3 - 6 * 2;
    if (twelve % 12 != 0)
        throw std::domain_error("genus_borel_closed: formula not integral");
    return 1 + twelve / 12;
}

namespace {

// PSL_2(F_ell) enumerated as canonical projective representatives with
// square determinant; id lookup through the dense projective encoding.
struct PslEnum {
    int ell = 0;
    std::vector<Mat2> rep;
    std::vector<int32_t> enc2id;

    explicit PslEnum(int ell_) : ell(ell_) {
        if (!is_prime_small(ell) || ell < 3)
            throw std::domain_error("PslEnum: ell must be an odd prime");
        enc2id.assign((size_t)ell * ell * ell + (size_t)ell * ell, -1);
        auto consider = [&](const Mat2& m) {
            if (!mat_invertible(m)) return;
            if (legendre(mat_det(m), ell) != 1) return;
            enc2id[proj_rep_encode(m)] = (int32_t)rep.size();
            rep.push_back(m);
        };
        for (int b = 0; b < ell; ++b)
            for (int c = 0; c < ell; ++c)
                for (int d = 0; d < ell; ++d) consider(mat2(1, b, c, d, ell));
        for (int c = 1; c < ell; ++c)
            for (int d = 0; d < ell; ++d) consider(mat2(0, 1, c, d, ell));
        size_t expect = (size_t)ell * (ell - 1) * (ell + 1) / 2;
        if (rep.size() != expect) throw std::logic_error("PslEnum: wrong order");
    }

    int32_t id_of(const Mat2& m) const {
        int32_t id = enc2id[proj_rep_encode(proj_rep(m))];
        if (id < 0) throw std::domain_error("PslEnum: element outside psl");
        return id;
    }
};

CosetGenus coset_genus_from_psl_subgroup(const PslEnum& psl, const std::vector<Mat2>& hbar) {
    int ell = psl.ell;
    size_t n = psl.rep.size();

    // Label right cosets Hg by sweeping representatives in id order.
    std::vector<int32_t> coset(n, -1);
    std::vector<int32_t> coset_rep;
    for (size_t x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        int32_t c = (int32_t)coset_rep.size();
        coset_rep.push_back((int32_t)x);
        for (const Mat2& h : hbar) coset[psl.id_of(mat_mul(h, psl.rep[x]))] = c;
        if (coset[x] != c) throw std::logic_error("coset labeling failed");
    }
    long long mu = (long long)coset_rep.size();

    Mat2 S = mat2(0, -1, 1, 0, ell);
    Mat2 ST = mat2(0, -1, 1, 1, ell);
    Mat2 T = mat2(1, 1, 0, 1, ell);

    auto perm_of = [&](const Mat2& m) {
        std::vector<int32_t> p(coset_rep.size());
        for (size_t c = 0; c < coset_rep.size(); ++c)
            p[c] = coset[psl.id_of(mat_mul(psl.rep[coset_rep[c]], m))];
        return p;
    };

    auto count_fixed = [](const std::vector<int32_t>& p) {
        long long f = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] == (int32_t)i) ++f;
        return f;
    };
    auto count_cycles = [](const std::vector<int32_t>& p) {
        std::vector<char> vis(p.size(), 0);
        long long cycles = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            if (vis[i]) continue;
            ++cycles;
            for (size_t j = i; !vis[j]; j = (size_t)p[j]) vis[j] = 1;
        }
        return cycles;
    };

    CosetGenus g;
    g.mu = mu;
    g.nu2 = count_fixed(perm_of(S));
    g.nu3 = count_fixed(perm_of(ST));
    g.nu_inf = count_cycles(perm_of(T));

    long long twelve = g.mu - 3 * g.nu2 - 4 * g.nu3 - 6 * g.nu_inf;
    if (twelve % 12 != 0) throw std::logic_error("coset genus: index identity violated");
    g.genus = 1 + twelve / 12;
    if (g.genus < 0) throw std::logic_error("coset genus: negative result");
    return g;
}

// Intersection with PSL of a projective subgroup given by canonical
// representatives: the classes whose determinant is a square.
std::vector<Mat2> psl_part(const std::vector<Mat2>& h, int ell) {
    std::vector<Mat2> out;
    for (const Mat2& m : h)
        if (legendre(mat_det(m), ell) == 1) out.push_back(m);
    return out;
}

std::vector<Mat2> proj_closure_of(const std::vector<Mat2>& gens) {
    return proj_image(closure(gens));
}

} // namespace

CosetGenus genus_from_cosets(int ell, const std::string& kind) {
    if (!is_prime_small(ell) || ell < 3)
        throw std::domain_error("genus_from_cosets: ell must be an odd prime");
    PslEnum psl(ell);

    std::vector<Mat2> hbar;
    if (kind == "psl") {
        hbar = psl.rep;
    } else if (kind == "split") {
        int g0 = primitive_root(ell);
        auto h = proj_closure_of({mat2(g0, 0, 0, 1, ell), mat2(0, 1, 1, 0, ell)});
        hbar = psl_part(h, ell);
    } else if (kind == "borel") {
        int g0 = primitive_root(ell);
        auto h = proj_closure_of({mat2(g0, 0, 0, 1, ell), mat2(1, 1, 0, 1, ell)});
        hbar = psl_part(h, ell);
    } else if (kind == "A4") {
        hbar = triangle_group(ell, 3, true);
    } else if (kind == "S4") {
        std::vector<Mat2> h;
        try {
            h = triangle_group(ell, 4, true);
        } catch (const std::domain_error&) {
            h = triangle_group(ell, 4, false);
        }
        hbar = psl_part(h, ell);
    } else if (kind == "A5") {
        hbar = triangle_group(ell, 5, true);
    } else {
        throw std::domain_error("genus_from_cosets: unknown kind " + kind);
    }
    return coset_genus_from_psl_subgroup(psl, hbar);
}

CosetGenus genus_from_cosets(const SubgroupDesc& g) {
    if (g.elements.empty()) throw std::domain_error("genus_from_cosets: empty group");
    int ell = g.ell;
    PslEnum psl(ell);
    auto h = proj_image(g);
    auto hbar = psl_part(h, ell);
    if (h.size() > 1 && hbar.size() <= 1)
        throw std::domain_error("genus_from_cosets: projective image meets psl trivially");
    return coset_genus_from_psl_subgroup(psl, hbar);
}

std::vector<FrontierRow> finiteness_frontier(int lo, int hi) {
    std::vector<FrontierRow> rows;
    for (int ell = std::max(lo, 5); ell <= hi; ++ell) {
        if (!is_prime_small(ell)) continue;
        rows.push_back({ell, "split", genus_split_closed(ell)});
        if (ell % 12 == 1) {
            auto e = genus_exceptional_closed(ell, "A4");
            if (!e.integral) throw std::logic_error("finiteness_frontier: A4 formula not integral");
            rows.push_back({ell, "A4", e.genus});
        }
        if (ell % 24 == 1) {
            auto e = genus_exceptional_closed(ell, "S4");
            if (!e.integral) throw std::logic_error("finiteness_frontier: S4 formula not integral");
            rows.push_back({ell, "S4", e.genus});
        }
        if (ell % 60 == 1) {
            auto e = genus_exceptional_closed(ell, "A5");
            if (!e.integral) throw std::logic_error("finiteness_frontier: A5 formula not integral");
            rows.push_back({ell, "A5", e.genus});
        }
    }
    return rows;
}

} // namespace iso
