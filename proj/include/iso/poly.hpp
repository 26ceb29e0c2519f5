#pragma once

#include <stdexcept>
#include <vector>

namespace iso {

// Dense univariate polynomial over a field F.  F needs value semantics,
// equality, field arithmetic, and construction from small ints.  The
// coefficient vector never ends in a zero (the zero polynomial is empty).
template <typename F>
struct Poly {
    std::vector<F> c;  // c[i] multiplies Y^i

    Poly() = default;
    explicit Poly(std::vector<F> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == F(0)) c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const F& lead() const {
        if (c.empty()) throw std::domain_error("Poly: zero has no leading term");
        return c.back();
    }
    F coeff(int i) const {
        return i >= 0 && i < (int)c.size() ? c[(size_t)i] : F(0);
    }

    friend bool operator==(const Poly& x, const Poly& y) { return x.c == y.c; }
};

template <typename F>
Poly<F> poly_add(const Poly<F>& x, const Poly<F>& y) {
    std::vector<F> r(std::max(x.c.size(), y.c.size()), F(0));
    for (size_t i = 0; i < x.c.size(); ++i) r[i] = r[i] + x.c[i];
    for (size_t i = 0; i < y.c.size(); ++i) r[i] = r[i] + y.c[i];
    return Poly<F>(std::move(r));
}

template <typename F>
Poly<F> poly_sub(const Poly<F>& x, const Poly<F>& y) {
    std::vector<F> r(std::max(x.c.size(), y.c.size()), F(0));
    for (size_t i = 0; i < x.c.size(); ++i) r[i] = r[i] + x.c[i];
    for (size_t i = 0; i < y.c.size(); ++i) r[i] = r[i] - y.c[i];
    return Poly<F>(std::move(r));
}

template <typename F>
Poly<F> poly_mul(const Poly<F>& x, const Poly<F>& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<F> r(x.c.size() + y.c.size() - 1, F(0));
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t j = 0; j < y.c.size(); ++j)
            r[i + j] = r[i + j] + x.c[i] * y.c[j];
    return Poly<F>(std::move(r));
}

template <typename F>
Poly<F> poly_scale(const Poly<F>& x, const F& s) {
    std::vector<F> r = x.c;
    for (auto& v : r) v = v * s;
    return Poly<F>(std::move(r));
}

template <typename F>
struct PolyDivRem {
    Poly<F> quot, rem;
};

template <typename F>
PolyDivRem<F> poly_divrem(const Poly<F>& num, const Poly<F>& den) {
    if (den.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly<F> r = num;
    std::vector<F> q;
    if (num.degree() >= den.degree())
        q.assign((size_t)(num.degree() - den.degree() + 1), F(0));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        F f = r.lead() / den.lead();
        int shift = r.degree() - den.degree();
        q[(size_t)shift] = f;
        std::vector<F> sub((size_t)shift, F(0));
        for (const auto& v : den.c) sub.push_back(v * f);
        r = poly_sub(r, Poly<F>(std::move(sub)));
    }
    return {Poly<F>(std::move(q)), r};
}

template <typename F>
Poly<F> poly_monic(const Poly<F>& x) {
    if (x.is_zero()) return x;
    F s = F(1) / x.lead();
    return poly_scale(x, s);
}

template <typename F>
Poly<F> poly_gcd(Poly<F> x, Poly<F> y) {
    while (!y.is_zero()) {
        Poly<F> r = poly_divrem(x, y).rem;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

template <typename F>
Poly<F> poly_derivative(const Poly<F>& x) {
    if (x.c.size() <= 1) return {};
    std::vector<F> r(x.c.size() - 1, F(0));
    for (size_t i = 1; i < x.c.size(); ++i) r[i - 1] = x.c[i] * F((int)i);
    return Poly<F>(std::move(r));
}

template <typename F>
F poly_eval(const Poly<F>& x, const F& at) {
    F acc(0);
    for (size_t i = x.c.size(); i-- > 0;) acc = acc * at + x.c[i];
    return acc;
}

// f / gcd(f, f'): same roots, each exactly once.
template <typename F>
Poly<F> poly_squarefree_part(const Poly<F>& f) {
    if (f.degree() <= 1) return poly_monic(f);
    Poly<F> g = poly_gcd(f, poly_derivative(f));
    return poly_monic(poly_divrem(f, g).quot);
}

} // namespace iso
