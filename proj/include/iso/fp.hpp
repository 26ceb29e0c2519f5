#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace iso {

// Arithmetic mod a small prime. Moduli here are tiny (scans stop well below
// 2^16), so everything fits in long long without overflow tricks.

inline bool is_prime_small(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long mod_reduce(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

inline long long mod_pow(long long b, long long e, long long m) {
    b = mod_reduce(b, m);
    long long r = 1 % m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

inline long long mod_inv(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = mod_reduce(a, m);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inv: not invertible mod " + std::to_string(m));
    return mod_reduce(t, m);
}

namespace detail {
inline const std::vector<uint8_t>& square_table(long long ell) {
    thread_local std::map<long long, std::vector<uint8_t>> cache;
    auto it = cache.find(ell);
    if (it == cache.end()) {
        std::vector<uint8_t> t(ell, 0);
        for (long long i = 0; i <= (ell - 1) / 2; ++i) t[(i * i) % ell] = 1;
        it = cache.emplace(ell, std::move(t)).first;
    }
    return it->second;
}
} // namespace detail

// Legendre symbol (a/ell) for an odd prime ell. Small moduli use the Euler
// criterion directly; larger ones build a residue table once and reuse it.
// Both paths agree on all inputs.
inline int legendre(long long a, long long ell) {
    if (ell == 2 || !is_prime_small(ell))
        throw std::domain_error("legendre: modulus must be an odd prime");
    a = mod_reduce(a, ell);
    if (a == 0) return 0;
    if (ell < 64) {
        long long e = mod_pow(a, (ell - 1) / 2, ell);
        return e == 1 ? 1 : -1;
    }
    return detail::square_table(ell)[a] ? 1 : -1;
}

// Tonelli-Shanks. Requires an odd prime modulus and a quadratic residue.
inline long long sqrt_mod(long long a, long long ell) {
    a = mod_reduce(a, ell);
    if (a == 0) return 0;
    if (legendre(a, ell) != 1)
        throw std::domain_error("sqrt_mod: non-residue");
    if (ell % 4 == 3) return mod_pow(a, (ell + 1) / 4, ell);
    long long q = ell - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long z = 2;
    while (legendre(z, ell) != -1) ++z;
    long long m = s, c = mod_pow(z, q, ell);
    long long t = mod_pow(a, q, ell), r = mod_pow(a, (q + 1) / 2, ell);
    while (t != 1) {
        long long i = 0, tt = t;
        while (tt != 1) { tt = (tt * tt) % ell; ++i; }
        long long b = mod_pow(c, 1LL << (m - i - 1), ell);
        m = i;
        c = (b * b) % ell;
        t = (t * c) % ell;
        r = (r * b) % ell;
    }
    return r;
}

// Smallest generator of the multiplicative group F_ell^*.
inline long long primitive_root(long long ell) {
    if (ell == 2) return 1;
    std::vector<long long> pf;
    long long n = ell - 1;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) { pf.push_back(d); while (n % d == 0) n /= d; }
    if (n > 1) pf.push_back(n);
    for (long long g = 2; g < ell; ++g) {
        bool ok = true;
        for (long long p : pf)
            if (mod_pow(g, (ell - 1) / p, ell) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

struct PrimeField {
    long long ell;
    explicit PrimeField(long long p) : ell(p) {
        if (!is_prime_small(p)) throw std::domain_error("PrimeField: modulus not prime");
    }
    long long reduce(long long x) const { return mod_reduce(x, ell); }
    long long add(long long a, long long b) const { return mod_reduce(a + b, ell); }
    long long sub(long long a, long long b) const { return mod_reduce(a - b, ell); }
    long long mul(long long a, long long b) const { return mod_reduce(reduce(a) * reduce(b), ell); }
    long long inv(long long a) const { return mod_inv(a, ell); }
    long long pow(long long a, long long e) const { return mod_pow(a, e, ell); }
    int chi(long long a) const { return legendre(a, ell); }
    bool is_square(long long a) const { return ell == 2 || legendre(a, ell) >= 0; }
    long long sqrt(long long a) const { return sqrt_mod(a, ell); }
};

} // namespace iso
