#include "iso/qexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace iso {

mpz_class QSeries::coeff(long long e) const {
    if (e >= hi) throw std::domain_error("QSeries::coeff: exponent beyond tracked window");
    if (e < lo) return 0;
    return c[(size_t)(e - lo)];
}

QSeries qs_zero(long long lo, long long hi) {
    if (hi < lo) throw std::domain_error("qs_zero: empty window");
    QSeries s;
    s.lo = lo;
    s.hi = hi;
    s.c.assign((size_t)(hi - lo), mpz_class(0));
    return s;
}

QSeries qs_const(const mpz_class& v, long long hi) {
    QSeries s = qs_zero(0, hi);
    if (hi > 0) s.c[0] = v;
    return s;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    long long lo = std::min(a.lo, b.lo);
    long long hi = std::min(a.hi, b.hi);
    QSeries s = qs_zero(lo, hi);
    for (long long e = lo; e < hi; ++e) s.c[(size_t)(e - lo)] = a.coeff(e) + b.coeff(e);
    return s;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
    long long lo = std::min(a.lo, b.lo);
    long long hi = std::min(a.hi, b.hi);
    QSeries s = qs_zero(lo, hi);
    for (long long e = lo; e < hi; ++e) s.c[(size_t)(e - lo)] = a.coeff(e) - b.coeff(e);
    return s;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    // a exact below a.hi, b below b.hi: the product is exact below
    // min(a.lo + b.hi, b.lo + a.hi)
    long long lo = a.lo + b.lo;
    long long hi = std::min(a.lo + b.hi, b.lo + a.hi);
    QSeries s = qs_zero(lo, hi);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        long long ea = a.lo + (long long)i;
        for (size_t j = 0; j < b.c.size(); ++j) {
            long long e = ea + b.lo + (long long)j;
            if (e >= hi) break;
            if (b.c[j] == 0) continue;
            s.c[(size_t)(e - lo)] += a.c[i] * b.c[j];
        }
    }
    return s;
}

QSeries qs_scale(const QSeries& a, const mpz_class& v) {
    QSeries s = a;
    for (auto& x : s.c) x *= v;
    return s;
}

QSeries qs_shift(const QSeries& a, long long k) {
    QSeries s = a;
    s.lo += k;
    s.hi += k;
    return s;
}

QSeries qs_truncate(const QSeries& a, long long hi) {
    if (hi > a.hi) throw std::domain_error("qs_truncate: cannot extend the window");
    QSeries s;
    s.lo = std::min(a.lo, hi);
    s.hi = hi;
    s.c.assign(a.c.begin(), a.c.begin() + (size_t)(hi - s.lo));
    return s;
}

QSeries qs_normalize(const QSeries& a) {
    QSeries s = a;
    size_t drop = 0;
    while (drop < s.c.size() && s.c[drop] == 0) ++drop;
    s.c.erase(s.c.begin(), s.c.begin() + drop);
    s.lo += (long long)drop;
    if (s.c.empty()) s.lo = s.hi;
    return s;
}

bool qs_is_zero(const QSeries& a) {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

QSeries qs_inv(const QSeries& a) {
    QSeries u = qs_normalize(a);
    if (u.c.empty() || (u.c[0] != 1 && u.c[0] != -1))
        throw std::domain_error("qs_inv: leading coefficient must be a unit");
    // (sum a_i q^(v+i)) * (sum b_j q^(-v+j)) = 1
    long long n = u.hi - u.lo;
    QSeries b = qs_zero(-u.lo, -u.lo + n);
    b.c[0] = u.c[0];  // 1/u0 = u0 for u0 = +-1
    for (long long j = 1; j < n; ++j) {
        mpz_class acc = 0;
        for (long long i = 1; i <= j; ++i)
            if (i < (long long)u.c.size()) acc += u.c[(size_t)i] * b.c[(size_t)(j - i)];
        b.c[(size_t)j] = -u.c[0] * acc;
    }
    return b;
}

QSeries qs_pow(const QSeries& a, long long e) {
    if (e < 0) throw std::domain_error("qs_pow: negative exponent");
    if (e == 0) return qs_const(1, a.hi - a.lo > 0 ? a.hi - a.lo : 1);
    QSeries r = a;
    // left-to-right binary powering keeps the window bookkeeping in qs_mul
    long long msb = 63;
    while (!((e >> msb) & 1)) --msb;
    for (long long bit = msb - 1; bit >= 0; --bit) {
        r = qs_mul(r, r);
        if ((e >> bit) & 1) r = qs_mul(r, a);
    }
    return r;
}

QSeries qs_subst_pow(const QSeries& a, long long m) {
    if (m < 1) throw std::domain_error("qs_subst_pow: m must be positive");
    QSeries s = qs_zero(a.lo * m, (a.hi - 1) * m + 1);
    for (size_t i = 0; i < a.c.size(); ++i) s.c[i * (size_t)m] = a.c[i];
    return s;
}

QSeries euler_product(long long hi) {
    QSeries s = qs_zero(0, hi);
    // pentagonal number theorem: sum_k (-1)^k (q^(k(3k-1)/2) + q^(k(3k+1)/2))
    if (hi > 0) s.c[0] = 1;
    for (long long k = 1;; ++k) {
        long long e1 = k * (3 * k - 1) / 2;
        long long e2 = k * (3 * k + 1) / 2;
        if (e1 >= hi && e2 >= hi) break;
        mpz_class sign = (k % 2 == 0) ? 1 : -1;
        if (e1 < hi) s.c[(size_t)e1] += sign;
        if (e2 < hi) s.c[(size_t)e2] += sign;
    }
    return s;
}

QSeries delta_over_q(long long hi) {
    QSeries e = euler_product(hi);
    QSeries e3 = qs_mul(qs_mul(e, e), e);
    QSeries x = qs_mul(e3, e3);  // ^6
    x = qs_mul(x, x);            // ^12
    x = qs_mul(x, x);            // ^24
    return x;
}

QSeries eisenstein4(long long hi) {
    QSeries s = qs_zero(0, hi);
    if (hi > 0) s.c[0] = 1;
    for (long long n = 1; n < hi; ++n) {
        mpz_class sig = 0;
        for (long long d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sig += mpz_class((long)d) * (long)d * (long)d;
            long long e = n / d;
            if (e != d) sig += mpz_class((long)e) * (long)e * (long)e;
        }
        s.c[(size_t)n] = 240 * sig;
    }
    return s;
}

QSeries j_series(long long hi) {
    // j = E4^3 / delta; both factors are exact on [0, hi + 1) so the
    // quotient is exact on [-1, hi)
    long long w = hi + 1;
    QSeries e4 = eisenstein4(w);
    QSeries num = qs_mul(qs_mul(e4, e4), e4);
    QSeries dinv = qs_inv(delta_over_q(w));  // window [0, w)
    QSeries j = qs_shift(qs_mul(num, dinv), -1);
    return qs_truncate(j, hi);
}

QSeries hauptmodul(int ell, long long hi) {
    if (ell < 2 || 24 % (ell - 1) != 0)
        throw std::domain_error("hauptmodul: need ell - 1 dividing 24");
    long long e = 24 / (ell - 1);
    long long w = hi + 1;
    QSeries num = euler_product(w);
    QSeries den = qs_subst_pow(euler_product((w + ell - 1) / ell + 1), ell);
    den = qs_truncate(den, w);
    QSeries ratio = qs_mul(num, qs_inv(den));
    QSeries t = qs_shift(qs_pow(ratio, e), -1);
    return qs_truncate(t, hi);
}

namespace {

// Keep the s-exponents divisible by ell and reindex them as q-exponents:
// this is exactly the zeta-averaging (1/ell) sum_i f(zeta^i s) followed by
// s^ell = q, up to the factor ell the caller accounts for.
QSeries filter_divisible(const QSeries& a, int ell) {
    long long lo = a.lo / ell;
    while (lo * ell < a.lo) ++lo;
    long long hi = (a.hi - 1) / ell;
    while (hi * ell > a.hi - 1) --hi;
    ++hi;
    QSeries s = qs_zero(lo, hi);
    for (long long e = lo; e < hi; ++e) s.c[(size_t)(e - lo)] = a.coeff(e * ell);
    return s;
}

} // namespace

std::vector<std::vector<mpz_class>> modular_polynomial(int ell) {
    bool ok = ell == 2 || ell == 3 || ell == 5 || ell == 7 || ell == 11 || ell == 13;
    if (!ok) throw std::domain_error("modular_polynomial: level not supported");

    // s-window: j(s)^k needs enough terms that the filtered q-window reaches
    // a few positive exponents for the residual checks
    long long sprec = (long long)ell * (ell + 7) + 8;
    QSeries js = j_series(sprec);  // series in s, window [-1, sprec)

    // Power sums of the ell roots j(zeta^i s) as exact q-series.
    std::vector<QSeries> jpow_s(ell + 1);
    jpow_s[0] = qs_const(1, sprec);
    for (int k = 1; k <= ell; ++k) jpow_s[k] = k == 1 ? js : qs_mul(jpow_s[k - 1], js);
    std::vector<QSeries> p(ell + 1);
    for (int k = 1; k <= ell; ++k)
        p[k] = qs_scale(filter_divisible(jpow_s[k], ell), ell);

    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    std::vector<QSeries> f(ell + 1);
    f[0] = qs_const(1, sprec);
    for (int k = 1; k <= ell; ++k) {
        QSeries acc = qs_zero(-1, sprec);
        for (int i = 1; i <= k; ++i) {
            QSeries term = qs_mul(f[k - i], p[i]);
            if (i % 2 == 0) term = qs_scale(term, -1);
            acc = qs_add(acc, term);
        }
        for (auto& x : acc.c) {
            if (x % k != 0) throw std::logic_error("modular_polynomial: Newton division failed");
            x /= k;
        }
        f[k] = acc;
    }

    // Multiply back the root j(q^ell): the X^a coefficient of the modular
    // polynomial evaluated at Y = j(q) is P_{a-1} - j(q^ell) P_a with
    // P_a = (-1)^(ell-a) f_{ell-a}.
    long long qhi = 5;
    QSeries jql = qs_subst_pow(j_series((sprec - 1) / ell + 2), ell);
    jql = qs_truncate(jql, qhi + (long long)ell + 2);
    std::vector<QSeries> P(ell + 2, qs_zero(0, 1));
    for (int a = 0; a <= ell; ++a) {
        P[a] = f[ell - a];
        if ((ell - a) % 2 == 1) P[a] = qs_scale(P[a], -1);
    }

    std::vector<QSeries> A(ell + 2);
    for (int a = 0; a <= ell + 1; ++a) {
        QSeries t1 = (a == 0) ? qs_zero(-1, qhi) : P[a - 1];
        QSeries t2 = (a == ell + 1) ? qs_zero(-1, qhi) : qs_mul(jql, P[a]);
        A[a] = qs_truncate(qs_sub(t1, t2), qhi);
    }

    // Peel powers of j(q) off each A_a to read the integer coefficients.
    QSeries jq = j_series(qhi + ell + 2);
    std::vector<QSeries> jb(ell + 2);
    jb[0] = qs_const(1, qhi);
    for (int b = 1; b <= ell + 1; ++b) jb[b] = qs_truncate(qs_pow(jq, b), qhi);

    std::vector<std::vector<mpz_class>> c(ell + 2, std::vector<mpz_class>(ell + 2, mpz_class(0)));
    for (int a = 0; a <= ell + 1; ++a) {
        QSeries r = A[a];
        for (int b = ell + 1; b >= 0; --b) {
            mpz_class cab = r.coeff(-b);
            c[a][b] = cab;
            if (cab != 0) r = qs_sub(r, qs_scale(jb[b], cab));
        }
        if (!qs_is_zero(r)) throw std::logic_error("modular_polynomial: nonzero residual");
    }

    // internal validation: symmetry, monic of the right degree, Kronecker
    // congruence mod ell
    for (int a = 0; a <= ell + 1; ++a)
        for (int b = 0; b <= ell + 1; ++b)
            if (c[a][b] != c[b][a]) throw std::logic_error("modular_polynomial: not symmetric");
    if (c[ell + 1][0] != 1) throw std::logic_error("modular_polynomial: not monic");
    if (c[ell + 1][ell + 1] != 0) throw std::logic_error("modular_polynomial: degree overflow");
    for (int a = 0; a <= ell + 1; ++a)
        for (int b = 0; b <= ell + 1; ++b) {
            mpz_class expect = 0;
            if ((a == ell + 1 && b == 0) || (a == 0 && b == ell + 1)) expect = 1;
            if (a == ell && b == ell) expect = -1;
            if (a == 1 && b == 1) expect = -1;
            if ((c[a][b] - expect) % ell != 0)
                throw std::logic_error("modular_polynomial: Kronecker congruence failed");
        }
    return c;
}

HauptAnchor hauptmodul_anchor(int ell, const std::vector<std::vector<mpz_class>>& phi) {
    if (24 % (ell - 1) != 0)
        throw std::domain_error("hauptmodul_anchor: need ell - 1 dividing 24");
    if ((int)phi.size() != ell + 2)
        throw std::domain_error("hauptmodul_anchor: coefficient table has the wrong size");

    long long H = ell + 10;
    QSeries t = hauptmodul(ell, H);
    QSeries j = j_series(H);

    std::vector<QSeries> tp(ell + 2);
    tp[0] = qs_const(1, H);
    for (int d = 1; d <= ell + 1; ++d) tp[d] = qs_mul(tp[d - 1], t);

    // interpolate j * t^ell = sum_d a_d t^d; triangular because t^d starts
    // at q^-d with coefficient 1
    QSeries r = qs_mul(j, tp[ell]);
    std::vector<mpz_class> a(ell + 2);
    for (int d = ell + 1; d >= 0; --d) {
        a[d] = r.coeff(-d);
        if (a[d] != 0) r = qs_sub(r, qs_scale(tp[d], a[d]));
    }
    if (!qs_is_zero(r)) throw std::logic_error("hauptmodul_anchor: interpolation residual");

    // Fricke expansion: with C = ell^(12/(ell-1)),
    // C^ell j(q^ell) = sum_d a_d C^d t^(ell-d), the d = ell+1 term using 1/t
    mpz_class C;
    mpz_ui_pow_ui(C.get_mpz_t(), (unsigned long)ell, (unsigned long)(12 / (ell - 1)));
    mpz_class Cl;
    mpz_pow_ui(Cl.get_mpz_t(), C.get_mpz_t(), (unsigned long)ell);

    QSeries jql = qs_subst_pow(j_series(H / ell + 2), ell);
    QSeries lhs = qs_scale(qs_truncate(jql, std::min(jql.hi, H)), Cl);

    QSeries tinv = qs_inv(t);
    QSeries rhs = qs_zero(-(long long)ell, H - ell);
    mpz_class Cd = 1;
    for (int d = 0; d <= ell + 1; ++d) {
        QSeries term = (d <= ell) ? tp[ell - d] : tinv;
        rhs = qs_add(rhs, qs_scale(term, a[d] * Cd));
        Cd *= C;
    }
    if (!qs_is_zero(qs_sub(lhs, rhs)))
        throw std::logic_error("hauptmodul_anchor: Fricke expansion mismatch");

    HauptAnchor anchor;
    mpq_class j1 = 0, num = 0;
    Cd = 1;
    for (int d = 0; d <= ell + 1; ++d) {
        j1 += mpq_class(a[d]);
        num += mpq_class(a[d] * Cd);
        Cd *= C;
    }
    anchor.j1 = j1;
    anchor.j2 = num / mpq_class(Cl);
    anchor.j2.canonicalize();

    // the polynomial must vanish on the anchor pair
    mpq_class acc = 0;
    mpq_class xa = 1;
    for (int i = 0; i <= ell + 1; ++i) {
        mpq_class yb = 1;
        for (int jj = 0; jj <= ell + 1; ++jj) {
            if (phi[i][jj] != 0) acc += mpq_class(phi[i][jj]) * xa * yb;
            yb *= anchor.j2;
        }
        xa *= anchor.j1;
    }
    if (acc != 0) throw std::logic_error("hauptmodul_anchor: polynomial does not vanish on the anchor");
    return anchor;
}

} // namespace iso
