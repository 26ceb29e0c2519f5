#include "iso/pgl.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace iso {

namespace {

PglContext build(int ell) {
    if (!is_prime_small(ell)) throw std::domain_error("PglContext: modulus not prime");
    if (ell > 13) throw std::domain_error("PglContext: tables limited to ell <= 13");

    PglContext ctx;
    ctx.ell = ell;
    ctx.npts = ell + 1;

    int space = ell * ell * ell + ell * ell;
    ctx.enc2id.assign(space, -1);

    // Canonical reps in encode order: a=1 with free b,c,d, then a=0, b=1.
    for (int b = 0; b < ell; ++b)
        for (int c = 0; c < ell; ++c)
            for (int d = 0; d < ell; ++d) {
                Mat2 m{1, b, c, d, ell};
                if (!mat_invertible(m)) continue;
                ctx.enc2id[proj_rep_encode(m)] = (int)ctx.rep.size();
                ctx.rep.push_back(m);
            }
    for (int c = 1; c < ell; ++c)
        for (int d = 0; d < ell; ++d) {
            Mat2 m{0, 1, c, d, ell};
            ctx.enc2id[proj_rep_encode(m)] = (int)ctx.rep.size();
            ctx.rep.push_back(m);
        }

    ctx.n = (int)ctx.rep.size();
    if (ctx.n != ell * ell * ell - ell) throw std::logic_error("PglContext: wrong group order");

    ctx.mul.resize((size_t)ctx.n * ctx.n);
    ctx.inv.resize(ctx.n);
    ctx.act.resize((size_t)ctx.n * ctx.npts);
    ctx.fixmask.resize(ctx.n);
    ctx.reducible.resize(ctx.n);
    ctx.det_sq.resize(ctx.n);
    ctx.porder.resize(ctx.n);

    for (int i = 0; i < ctx.n; ++i) {
        const Mat2& g = ctx.rep[i];
        for (int j = 0; j < ctx.n; ++j)
            ctx.mul[(size_t)i * ctx.n + j] = (uint16_t)ctx.id_of(mat_mul(g, ctx.rep[j]));
        ctx.inv[i] = (uint16_t)ctx.id_of(mat_inv(g));
        uint16_t mask = 0;
        for (int pt = 0; pt <= ell; ++pt) {
            int im = proj_index(proj_apply(g, proj_from_index(pt, ell)), ell);
            ctx.act[(size_t)i * ctx.npts + pt] = (uint16_t)im;
            if (im == pt) mask |= (uint16_t)(1u << pt);
        }
        ctx.fixmask[i] = mask;
        ctx.reducible[i] = char_poly_reducible(g) ? 1 : 0;
        // Scaling a lift by t multiplies det by t^2, so the square class of
        // the determinant is well-defined projectively.  Mod 2 every unit is
        // a square.
        ctx.det_sq[i] = (ell == 2 || legendre(mat_det(g), ell) == 1) ? 1 : 0;
        ctx.porder[i] = (uint16_t)proj_order(g);
    }

    ctx.class_of.assign(ctx.n, -1);
    for (int i = 0; i < ctx.n; ++i) {
        if (ctx.class_of[i] >= 0) continue;
        int cls = (int)ctx.class_reps.size();
        ctx.class_reps.push_back((uint16_t)i);
        for (int c = 0; c < ctx.n; ++c) ctx.class_of[ctx.conj(c, i)] = cls;
    }

    return ctx;
}

} // namespace

const PglContext& PglContext::get(int ell) {
    static std::mutex mu;
    static std::map<int, PglContext> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it == cache.end()) it = cache.emplace(ell, build(ell)).first;
    return it->second;
}

} // namespace iso
