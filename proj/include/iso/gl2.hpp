#pragma once

#include "iso/fp.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace iso {

// 2x2 matrices over F_ell with entries stored canonically in [0, ell).
struct Mat2 {
    int a = 0, b = 0, c = 0, d = 0;
    int ell = 0;
    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2& l, const Mat2& r) {
        return std::tie(l.ell, l.a, l.b, l.c, l.d) <=> std::tie(r.ell, r.a, r.b, r.c, r.d);
    }
};

inline Mat2 mat2(long long a, long long b, long long c, long long d, int ell) {
    return Mat2{(int)mod_reduce(a, ell), (int)mod_reduce(b, ell),
                (int)mod_reduce(c, ell), (int)mod_reduce(d, ell), ell};
}

inline Mat2 mat_identity(int ell) { return Mat2{1 % ell, 0, 0, 1 % ell, ell}; }

inline int mat_det(const Mat2& m) {
    return (int)mod_reduce((long long)m.a * m.d - (long long)m.b * m.c, m.ell);
}

inline int mat_trace(const Mat2& m) { return (int)mod_reduce(m.a + m.d, m.ell); }

inline bool mat_invertible(const Mat2& m) { return mat_det(m) != 0; }

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    if (x.ell != y.ell) throw std::domain_error("mat_mul: modulus mismatch");
    long long p = x.ell;
    return Mat2{(int)(((long long)x.a * y.a + (long long)x.b * y.c) % p),
                (int)(((long long)x.a * y.b + (long long)x.b * y.d) % p),
                (int)(((long long)x.c * y.a + (long long)x.d * y.c) % p),
                (int)(((long long)x.c * y.b + (long long)x.d * y.d) % p),
                (int)p};
}

inline Mat2 mat_inv(const Mat2& m) {
    long long det = mat_det(m);
    if (det == 0) throw std::domain_error("mat_inv: singular matrix");
    long long di = mod_inv(det, m.ell);
    return mat2(di * m.d, -di * m.b, -di * m.c, di * m.a, m.ell);
}

inline Mat2 mat_pow(Mat2 m, long long k) {
    if (k < 0) { m = mat_inv(m); k = -k; }
    Mat2 r = mat_identity(m.ell);
    while (k > 0) {
        if (k & 1) r = mat_mul(r, m);
        m = mat_mul(m, m);
        k >>= 1;
    }
    return r;
}

inline bool is_scalar(const Mat2& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

// Points of P^1(F_ell), kept canonical: the first nonzero coordinate is 1.
// Index order: (1:t) -> t for t in [0, ell), and (0:1) -> ell.
struct ProjPoint {
    int x = 0, y = 0;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

inline ProjPoint proj_canon(long long x, long long y, int ell) {
    x = mod_reduce(x, ell);
    y = mod_reduce(y, ell);
    if (x == 0 && y == 0) throw std::domain_error("proj_canon: zero vector");
    if (x != 0) {
        long long xi = mod_inv(x, ell);
        return ProjPoint{1, (int)((xi * y) % ell)};
    }
    return ProjPoint{0, 1};
}

inline int proj_index(const ProjPoint& p, int ell) { return p.x == 1 ? p.y : ell; }

inline ProjPoint proj_from_index(int idx, int ell) {
    return idx == ell ? ProjPoint{0, 1} : ProjPoint{1, idx};
}

inline std::vector<ProjPoint> proj_line(int ell) {
    std::vector<ProjPoint> pts;
    pts.reserve(ell + 1);
    for (int i = 0; i <= ell; ++i) pts.push_back(proj_from_index(i, ell));
    return pts;
}

inline ProjPoint proj_apply(const Mat2& g, const ProjPoint& p) {
    long long x = (long long)g.a * p.x + (long long)g.b * p.y;
    long long y = (long long)g.c * p.x + (long long)g.d * p.y;
    return proj_canon(x, y, g.ell);
}

inline std::vector<ProjPoint> fixed_points(const Mat2& g) {
    std::vector<ProjPoint> fix;
    for (int i = 0; i <= g.ell; ++i) {
        ProjPoint p = proj_from_index(i, g.ell);
        if (proj_apply(g, p) == p) fix.push_back(p);
    }
    return fix;
}

// Reducibility of x^2 - a x + q over F_ell, for q invertible mod ell.
// For odd ell this is the discriminant being a square (or zero); mod 2 the
// discriminant test degenerates and the two candidate roots are checked
// directly, which collapses to the parity of a.
inline bool frobenius_reducible(long long a, long long q, long long ell) {
    if (mod_reduce(q, ell) == 0)
        throw std::domain_error("frobenius_reducible: q not invertible mod ell");
    if (ell == 2) return mod_reduce(a, 2) == 0;
    long long disc = mod_reduce(a * a - 4 * q, ell);
    return legendre(disc, ell) >= 0;
}

// True iff the characteristic polynomial of g splits over F_ell, equivalently
// iff g has a fixed point on P^1(F_ell).
inline bool char_poly_reducible(const Mat2& g) {
    if (!mat_invertible(g)) throw std::domain_error("char_poly_reducible: singular matrix");
    return frobenius_reducible(mat_trace(g), mat_det(g), g.ell);
}

// Order of the image of g in PGL_2(F_ell).
inline int proj_order(const Mat2& g) {
    if (!mat_invertible(g)) throw std::domain_error("proj_order: singular matrix");
    Mat2 m = g;
    long long bound = (long long)g.ell * g.ell * g.ell;
    for (int k = 1; k <= bound; ++k) {
        if (is_scalar(m)) return k;
        m = mat_mul(m, g);
    }
    throw std::logic_error("proj_order: no scalar power found");
}

// Canonical representative of the image of g in PGL_2: scale so the first
// nonzero entry (in a,b,c,d order) equals 1.
inline Mat2 proj_rep(const Mat2& g) {
    long long lead = g.a ? g.a : g.b ? g.b : g.c ? g.c : g.d;
    if (lead == 0) throw std::domain_error("proj_rep: zero matrix");
    long long s = mod_inv(lead, g.ell);
    return mat2(s * g.a, s * g.b, s * g.c, s * g.d, g.ell);
}

// Perfect index of a canonical PGL representative inside [0, ell^3 + ell^2).
// Invertibility forces a=1, or a=0 and b=1.
inline int proj_rep_encode(const Mat2& r) {
    long long ell = r.ell;
    if (r.a == 1) return (int)((r.b * ell + r.c) * ell + r.d);
    return (int)(ell * ell * ell + r.c * ell + r.d);
}

} // namespace iso
