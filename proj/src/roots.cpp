#include "iso/roots.hpp"

#include <stdexcept>

namespace iso {

namespace {

ComplexVal cx(const mpf_class& re, const mpf_class& im) { return {re, im}; }

ComplexVal cadd(const ComplexVal& x, const ComplexVal& y) {
    return {x.re + y.re, x.im + y.im};
}

ComplexVal csub(const ComplexVal& x, const ComplexVal& y) {
    return {x.re - y.re, x.im - y.im};
}

ComplexVal cmul(const ComplexVal& x, const ComplexVal& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexVal cdiv(const ComplexVal& x, const ComplexVal& y) {
    mpf_class n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

mpf_class cabs(const ComplexVal& x) {
    mpf_class n = x.re * x.re + x.im * x.im;
    mpf_class r(0, n.get_prec());
    mpf_sqrt(r.get_mpf_t(), n.get_mpf_t());
    return r;
}

mpf_class pow2(long e, long prec) {
    mpf_class r(1, (unsigned long)prec);
    if (e >= 0)
        mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), (unsigned long)e);
    else
        mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), (unsigned long)(-e));
    return r;
}

ComplexVal horner(const std::vector<ComplexVal>& c, const ComplexVal& z,
                  long prec) {
    ComplexVal acc = cx(mpf_class(0, (unsigned long)prec),
                        mpf_class(0, (unsigned long)prec));
    for (size_t i = c.size(); i-- > 0;) acc = cadd(cmul(acc, z), c[i]);
    return acc;
}

bool durand_kerner(const std::vector<ComplexVal>& monic, long prec,
                   std::vector<ComplexVal>& out) {
    const size_t n = monic.size() - 1;
    // Root magnitude estimate: max_k |c_{n-k}|^(1/k), computed on the
    // binary exponents so huge coefficients stay manageable.
    long rexp = 0;
    for (size_t k = 1; k <= n; ++k) {
        mpf_class m = abs(monic[n - k].re) + abs(monic[n - k].im);
        if (m == 0) continue;
        long e = 0;
        (void)mpf_get_d_2exp(&e, m.get_mpf_t());
        long scaled = (e + (long)k - 1) / (long)k;
        if (scaled > rexp) rexp = scaled;
    }
    mpf_class radius = pow2(rexp + 1, prec);

    // non-real seed direction so symmetric configurations break apart
    ComplexVal dir = cx(mpf_class("0.4", (unsigned long)prec),
                        mpf_class("0.9", (unsigned long)prec));
    std::vector<ComplexVal> z(n);
    ComplexVal acc = cx(mpf_class(1, (unsigned long)prec),
                        mpf_class(0, (unsigned long)prec));
    for (size_t i = 0; i < n; ++i) {
        acc = cmul(acc, dir);
        z[i] = cx(acc.re * radius, acc.im * radius);
    }

    mpf_class eps = pow2(-(2 * prec) / 3, prec);
    const int max_sweeps = 400;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        mpf_class worst(0, (unsigned long)prec);
        for (size_t i = 0; i < n; ++i) {
            ComplexVal den = cx(mpf_class(1, (unsigned long)prec),
                                mpf_class(0, (unsigned long)prec));
            for (size_t j = 0; j < n; ++j)
                if (j != i) den = cmul(den, csub(z[i], z[j]));
            ComplexVal step = cdiv(horner(monic, z[i], prec), den);
            z[i] = csub(z[i], step);
            mpf_class rel = cabs(step) / (1 + cabs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) {
            out = z;
            return true;
        }
    }
    out = z;
    return false;
}

bool certified(const std::vector<ComplexVal>& monic,
               const std::vector<ComplexVal>& roots, long prec) {
    // multiply out prod (Y - z_k) and compare coefficient by coefficient
    const size_t n = roots.size();
    std::vector<ComplexVal> c(1, cx(mpf_class(1, (unsigned long)prec),
                                    mpf_class(0, (unsigned long)prec)));
    for (size_t k = 0; k < n; ++k) {
        std::vector<ComplexVal> nx(c.size() + 1,
                                   cx(mpf_class(0, (unsigned long)prec),
                                      mpf_class(0, (unsigned long)prec)));
        for (size_t i = 0; i < c.size(); ++i) {
            nx[i + 1] = cadd(nx[i + 1], c[i]);
            nx[i] = csub(nx[i], cmul(c[i], roots[k]));
        }
        c = std::move(nx);
    }
    mpf_class tol = pow2(-prec / 3, prec);
    for (size_t i = 0; i <= n; ++i) {
        mpf_class scale = 1 + abs(monic[i].re) + abs(monic[i].im);
        if (cabs(csub(c[i], monic[i])) > tol * scale) return false;
    }
    return true;
}

} // namespace

std::vector<ComplexVal> polynomial_roots_cx(const std::vector<ComplexVal>& monic,
                                            long prec_bits) {
    if (monic.size() < 2)
        throw std::domain_error("polynomial_roots: degree must be positive");
    for (long prec = prec_bits; prec <= 8192; prec *= 2) {
        std::vector<ComplexVal> lifted;
        lifted.reserve(monic.size());
        for (const auto& v : monic)
            lifted.push_back(cx(mpf_class(v.re, (unsigned long)prec),
                                mpf_class(v.im, (unsigned long)prec)));
        std::vector<ComplexVal> roots;
        if (durand_kerner(lifted, prec, roots) &&
            certified(lifted, roots, prec))
            return roots;
    }
    throw std::runtime_error("polynomial_roots: certification failed");
}

std::vector<ComplexVal> polynomial_roots(const std::vector<mpq_class>& coeffs,
                                         long prec_bits) {
    std::vector<mpq_class> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2)
        throw std::domain_error("polynomial_roots: degree must be positive");
    for (long prec = prec_bits; prec <= 8192; prec *= 2) {
        std::vector<ComplexVal> monic;
        monic.reserve(c.size());
        for (const auto& v : c) {
            mpq_class m = v / c.back();
            monic.push_back(cx(mpf_class(m, (unsigned long)prec),
                               mpf_class(0, (unsigned long)prec)));
        }
        std::vector<ComplexVal> roots;
        if (durand_kerner(monic, prec, roots) && certified(monic, roots, prec))
            return roots;
    }
    throw std::runtime_error("polynomial_roots: certification failed");
}

mpq_class rationalize(const mpf_class& x, const mpz_class& max_den) {
    mpf_class rem = x;
    mpz_class p0 = 0, q0 = 1;  // previous convergent
    mpz_class p1 = 1, q1 = 0;  // current working pair (order: h_{-1}, h_{-2})
    mpq_class best;
    bool have = false;
    for (int step = 0; step < 400; ++step) {
        mpf_class fl = floor(rem);
        mpz_class a(0);
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (step > 0 && q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        best = mpq_class(p1, q1);
        best.canonicalize();
        have = true;
        mpf_class frac = rem - fl;
        if (frac == 0) break;
        if (frac < pow2(-(long)(x.get_prec() * 3 / 4), (long)x.get_prec()))
            break;
        rem = 1 / frac;
    }
    if (!have) return mpq_class(0);
    return best;
}

} // namespace iso
