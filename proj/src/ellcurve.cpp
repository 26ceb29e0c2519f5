#include "iso/ellcurve.hpp"

#include "iso/fp.hpp"
#include "iso/gl2.hpp"

#include <optional>
#include <stdexcept>

namespace iso {

namespace {

long long common_field_tag(const QuadFieldElem& A, const QuadFieldElem& B) {
    if (A.D != 1 && B.D != 1 && A.D != B.D)
        throw std::domain_error("EllCurve: coefficients in different fields");
    return A.D != 1 ? A.D : B.D;
}

} // namespace

EllCurve make_curve(const QuadFieldElem& A, const QuadFieldElem& B) {
    EllCurve E{A, B, common_field_tag(A, B)};
    if (curve_disc_factor(E).is_zero())
        throw std::domain_error("EllCurve: singular equation");
    return E;
}

QuadFieldElem curve_disc_factor(const EllCurve& E) {
    return QuadFieldElem(4) * E.A * E.A * E.A +
           QuadFieldElem(27) * E.B * E.B;
}

QuadFieldElem j_invariant(const EllCurve& E) {
    QuadFieldElem a3 = QuadFieldElem(4) * E.A * E.A * E.A;
    return QuadFieldElem(1728) * a3 / curve_disc_factor(E);
}

EllCurve curve_from_j(const QuadFieldElem& j) {
    if (j.is_zero()) return make_curve(QuadFieldElem(0), QuadFieldElem(1));
    if (j == QuadFieldElem(1728))
        return make_curve(QuadFieldElem(1), QuadFieldElem(0));
    QuadFieldElem u = QuadFieldElem(1728) - j;
    QuadFieldElem c = j * u;
    return make_curve(QuadFieldElem(3) * c, QuadFieldElem(2) * c * u);
}

EllCurve quadratic_twist(const EllCurve& E, const mpq_class& d) {
    if (d == 0) throw std::domain_error("quadratic_twist: d must be nonzero");
    QuadFieldElem dd{mpq_class(d * d)};
    QuadFieldElem ddd{mpq_class(d * d * d)};
    return make_curve(dd * E.A, ddd * E.B);
}

EllCurve base_change(const EllCurve& E, long long D) {
    if (D == 0) throw std::domain_error("base_change: invalid field");
    if (E.D != 1 && E.D != D)
        throw std::domain_error("base_change: curve lives in a different field");
    EllCurve out = E;
    out.D = D;
    if (D != 1) {
        out.A.D = D;
        out.B.D = D;
    }
    return out;
}

const std::vector<uint8_t>& SquaresCache::table(long long p) {
    auto it = tables.find(p);
    if (it != tables.end()) return it->second;
    std::vector<uint8_t> t((size_t)p, 0);
    for (long long y = 0; y < p; ++y) t[(size_t)(y * y % p)] = 1;
    return tables.emplace(p, std::move(t)).first->second;
}

int SquaresCache::chi(long long v, long long p) {
    if (v == 0) return 0;
    return table(p)[(size_t)v] ? 1 : -1;
}

long long count_points_fp(long long A, long long B, long long p,
                          SquaresCache& squares) {
    const auto& t = squares.table(p);
    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        long long v = ((x * x % p + A) % p * x + B) % p;
        if (v != 0) sum += t[(size_t)v] ? 1 : -1;
    }
    return p + 1 + sum;
}

long long count_points_fp2(long long a0, long long a1, long long b0,
                           long long b1, long long d, long long p) {
    auto norm_chi = [&](long long z0, long long z1) {
        long long n = ((z0 * z0 - d % p * z1 % p * z1) % p + p) % p;
        return n == 0 ? 0 : legendre(n, p);
    };
    long long sum = 0;
    for (long long x0 = 0; x0 < p; ++x0) {
        for (long long x1 = 0; x1 < p; ++x1) {
            // f = x^3 + A x + B in F_p[w]/(w^2 - d)
            long long s0 = (x0 * x0 + d * x1 % p * x1) % p;
            long long s1 = 2 * x0 * x1 % p;  // s = x^2
            long long f0 = (s0 * x0 + d * s1 % p * x1 + a0 * x0 + d * a1 % p * x1 + b0) % p;
            long long f1 = (s0 * x1 + s1 * x0 + a0 * x1 + a1 * x0 + b1) % p;
            sum += norm_chi(f0, f1);
        }
    }
    return p * p + 1 + sum;
}

double LocalScanReport::pass_ratio() const {
    if (tested.empty()) return 1.0;
    return double(tested.size() - failing.size()) / double(tested.size());
}

namespace {

std::optional<long long> mpq_mod(const mpq_class& x, long long p) {
    mpz_class den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p)) return std::nullopt;
    long long n = (long long)mpz_fdiv_ui(x.get_num().get_mpz_t(), (unsigned long)p);
    long long d = (long long)mpz_fdiv_ui(den.get_mpz_t(), (unsigned long)p);
    return n * mod_inv(d, p) % p;
}

struct ResPair {
    long long r0, r1;
};

std::optional<ResPair> reduce_elem(const QuadFieldElem& x, long long p) {
    auto r0 = mpq_mod(x.a, p);
    auto r1 = mpq_mod(x.b, p);
    if (!r0 || !r1) return std::nullopt;
    return ResPair{*r0, *r1};
}

} // namespace

LocalScanReport local_scan(const EllCurve& E, int ell, long long bound) {
    LocalScanReport rep;
    rep.ell = ell;
    rep.bound = bound;
    SquaresCache squares;
    const long long D = E.D;

    auto skip = [&](const std::string& why, long long p) {
        rep.skipped[why].push_back(p);
    };
    auto record = [&](long long p, int fdeg, long long q, int emb, long long a) {
        if (a * a > 4 * q)
            throw std::logic_error("local_scan: Hasse bound violated");
        LocalPrime lp{p, fdeg, q, emb, a, frobenius_reducible(a, q, ell)};
        rep.tested.push_back(lp);
        if (!lp.reducible) rep.failing.push_back(lp);
    };

    for (long long p = 2; p <= bound; ++p) {
        if (!is_prime_small(p)) continue;
        if (p == 2) {
            skip("residue characteristic 2", p);
            continue;
        }
        if (p == ell) {
            skip("equal to ell", p);
            continue;
        }
        auto rA = reduce_elem(E.A, p);
        auto rB = reduce_elem(E.B, p);
        if (!rA || !rB) {
            skip("non-integral coefficients", p);
            continue;
        }
        if (D == 1) {
            long long A = rA->r0, B = rB->r0;
            long long disc = ((4 * A % p * A % p * A + 27 * B % p * B) % p + p) % p;
            if (disc == 0) {
                skip("bad reduction", p);
                continue;
            }
            record(p, 1, p, 0, p + 1 - count_points_fp(A, B, p, squares));
            continue;
        }
        long long dmod = ((D % p) + p) % p;
        if (dmod == 0) {
            skip("ramified", p);
            continue;
        }
        if (legendre(dmod, p) == 1) {
            long long r = sqrt_mod(dmod, p);
            int emb = 0;
            for (long long root : {r, p - r}) {
                long long A = (rA->r0 + rA->r1 * root) % p;
                long long B = (rB->r0 + rB->r1 * root) % p;
                long long disc =
                    ((4 * A % p * A % p * A + 27 * B % p * B) % p + p) % p;
                if (disc == 0)
                    skip("bad reduction", p);
                else
                    record(p, 1, p, emb, p + 1 - count_points_fp(A, B, p, squares));
                ++emb;
            }
            continue;
        }
        // inert: the unique prime above p has norm p^2
        if (p * p > bound) continue;
        QuadFieldElem disc = curve_disc_factor(E);
        auto rd = reduce_elem(disc, p);
        if (!rd || (rd->r0 == 0 && rd->r1 == 0)) {
            skip("bad reduction", p);
            continue;
        }
        long long q = p * p;
        long long n = count_points_fp2(rA->r0, rA->r1, rB->r0, rB->r1, dmod, p);
        record(p, 2, q, 0, q + 1 - n);
    }
    return rep;
}

} // namespace iso
