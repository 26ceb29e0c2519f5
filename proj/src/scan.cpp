#include "iso/scan.hpp"

#include "iso/pgl.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace iso {

ScanMode scan_mode_from_string(const std::string& s) {
    if (s == "split") return ScanMode::split;
    if (s == "sl2") return ScanMode::sl2;
    if (s == "all") return ScanMode::all;
    throw std::domain_error("unknown scan mode: " + s);
}

std::string to_string(ScanMode m) {
    switch (m) {
        case ScanMode::split: return "split";
        case ScanMode::sl2: return "sl2";
        default: return "all";
    }
}

namespace {

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(int n) : w(((size_t)n + 63) / 64, 0) {}
    bool test(int i) const { return (w[(size_t)i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[(size_t)i >> 6] |= 1ull << (i & 63); }
};

// Projective subgroup as sorted context ids plus a membership bitset.
struct PGroup {
    std::vector<uint16_t> ids;
    Bits bits;
};

PGroup trivial_group(const PglContext& ctx) {
    PGroup g{{}, Bits(ctx.n)};
    uint16_t e = ctx.id_of(mat_identity(ctx.ell));
    g.ids.push_back(e);
    g.bits.set(e);
    return g;
}

// Extend g by x and close under multiplication, aborting as soon as an
// element with irreducible characteristic polynomial shows up.  Keeping the
// whole closure inside the reducible pool is the defining constraint, so the
// early abort prunes almost every candidate immediately.
std::optional<PGroup> extend_reducible(const PglContext& ctx, const PGroup& g, uint16_t x) {
    PGroup h{g.ids, g.bits};
    std::vector<uint16_t> stack{x};
    while (!stack.empty()) {
        uint16_t y = stack.back();
        stack.pop_back();
        if (h.bits.test(y)) continue;
        if (!ctx.reducible[y]) return std::nullopt;
        h.bits.set(y);
        h.ids.push_back(y);
        for (size_t i = 0; i < h.ids.size(); ++i) {
            stack.push_back(ctx.pmul(y, h.ids[i]));
            stack.push_back(ctx.pmul(h.ids[i], y));
        }
    }
    std::sort(h.ids.begin(), h.ids.end());
    return h;
}

// Cheap conjugation-invariant profile used to bucket candidate groups before
// the exact conjugacy test: order, element-order histogram, determinant
// square count, orbit size multiset.
std::vector<int> group_invariant(const PglContext& ctx, const std::vector<uint16_t>& ids) {
    std::vector<int> inv;
    inv.push_back((int)ids.size());
    int detsq = 0;
    std::map<int, int> prof;
    for (uint16_t x : ids) {
        detsq += ctx.det_sq[x];
        prof[ctx.porder[x]]++;
    }
    inv.push_back(detsq);
    for (auto& [o, c] : prof) {
        inv.push_back(o);
        inv.push_back(c);
    }
    std::vector<char> vis((size_t)ctx.npts, 0);
    std::vector<int> osz;
    for (int p = 0; p < ctx.npts; ++p) {
        if (vis[p]) continue;
        std::set<int> orb;
        for (uint16_t x : ids) orb.insert(ctx.action(x, p));
        for (int q : orb) vis[q] = 1;
        osz.push_back((int)orb.size());
    }
    std::sort(osz.begin(), osz.end());
    inv.insert(inv.end(), osz.begin(), osz.end());
    return inv;
}

bool conjugate_groups(const PglContext& ctx, const std::vector<uint16_t>& a, const Bits& b) {
    for (int c = 0; c < ctx.n; ++c) {
        bool ok = true;
        for (uint16_t x : a) {
            if (!b.test(ctx.conj(c, x))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

struct StoredEntry {
    ScanEntry entry;
    bool in_psl = false;
};

// Materialize a projective subgroup as its scalar-saturated GL_2 preimage.
ScanEntry materialize(const PglContext& ctx, const PGroup& h) {
    int ell = ctx.ell;
    ScanEntry e;

    // Greedy generator selection: repeatedly adjoin the smallest id outside
    // the running closure.
    std::vector<uint16_t> gens;
    PGroup cur = trivial_group(ctx);
    while (cur.ids.size() < h.ids.size()) {
        uint16_t pick = 0;
        bool found = false;
        for (uint16_t x : h.ids) {
            if (!cur.bits.test(x)) {
                pick = x;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("materialize: closure stalled");
        gens.push_back(pick);
        auto nxt = extend_reducible(ctx, cur, pick);
        if (!nxt) throw std::logic_error("materialize: generator left the pool");
        cur = *nxt;
    }

    std::vector<Mat2> elems;
    elems.reserve((size_t)(ell - 1) * h.ids.size());
    for (uint16_t x : h.ids) {
        const Mat2& r = ctx.rep[x];
        for (int lam = 1; lam < ell; ++lam)
            elems.push_back(mat2((long long)lam * r.a, (long long)lam * r.b,
                                 (long long)lam * r.c, (long long)lam * r.d, ell));
    }
    std::sort(elems.begin(), elems.end());

    std::vector<Mat2> gmats;
    for (uint16_t x : gens) gmats.push_back(ctx.rep[x]);
    if (ell > 2) {
        int g0 = primitive_root(ell);
        gmats.push_back(mat2(g0, 0, 0, g0, ell));
    }

    e.group = SubgroupDesc{ell, gmats, elems};
    e.cls = proj_classify(e.group);
    e.orbit_sizes = orbit_sizes(e.group.elements, ell);
    e.smallest_orbit = e.orbit_sizes.empty() ? 0 : e.orbit_sizes.front();
    return e;
}

// Exhaustive search at ell <= 13: seed with cyclic groups generated by one
// representative of each reducible conjugacy class, then extend every stored
// class by every reducible element.  Conjugating an extension conjugates the
// result, so extending canonical representatives by all of the pool reaches
// every class of reducible-only subgroups.
std::vector<StoredEntry> exhaustive_scan(int ell) {
    const PglContext& ctx = PglContext::get(ell);
    uint16_t eid = ctx.id_of(mat_identity(ell));

    std::vector<uint16_t> pool;
    for (int x = 0; x < ctx.n; ++x)
        if (ctx.reducible[x] && x != eid) pool.push_back((uint16_t)x);

    std::vector<PGroup> store;
    std::map<std::vector<int>, std::vector<size_t>> buckets;
    std::deque<size_t> queue;

    auto add_group = [&](PGroup&& k) {
        auto inv = group_invariant(ctx, k.ids);
        auto& bucket = buckets[inv];
        for (size_t idx : bucket)
            if (conjugate_groups(ctx, k.ids, store[idx].bits)) return;
        bucket.push_back(store.size());
        queue.push_back(store.size());
        store.push_back(std::move(k));
    };

    PGroup triv = trivial_group(ctx);
    for (uint16_t r : ctx.class_reps) {
        if (r == eid || !ctx.reducible[r]) continue;
        auto cyc = extend_reducible(ctx, triv, r);
        if (!cyc) throw std::logic_error("exhaustive_scan: reducible element with irreducible power");
        add_group(std::move(*cyc));
    }

    while (!queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        PGroup g{store[i].ids, store[i].bits};
        for (uint16_t x : pool) {
            if (g.bits.test(x)) continue;
            auto k = extend_reducible(ctx, g, x);
            if (k) add_group(std::move(*k));
        }
    }

    std::vector<StoredEntry> out;
    for (const PGroup& g : store) {
        uint32_t common = 0xffffffffu;
        for (uint16_t x : g.ids) common &= ctx.fixmask[x];
        if (common != 0) continue;  // a shared fixed point: not exceptional
        StoredEntry se;
        se.entry = materialize(ctx, g);
        se.in_psl = se.entry.cls.in_psl;
        out.push_back(std::move(se));
    }
    std::sort(out.begin(), out.end(), [](const StoredEntry& a, const StoredEntry& b) {
        if (a.entry.group.order() != b.entry.group.order())
            return a.entry.group.order() < b.entry.group.order();
        if (a.entry.cls.kind != b.entry.cls.kind) return a.entry.cls.kind < b.entry.cls.kind;
        if (a.entry.cls.n != b.entry.cls.n) return a.entry.cls.n < b.entry.cls.n;
        return a.entry.group.elements < b.entry.group.elements;
    });
    return out;
}

const std::vector<StoredEntry>& exhaustive_cached(int ell) {
    static std::mutex mu;
    static std::map<int, std::vector<StoredEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it == cache.end()) it = cache.emplace(ell, exhaustive_scan(ell)).first;
    return it->second;
}

// Greedy generating set for a projective subgroup given by sorted canonical
// representatives: repeatedly adjoin the first element outside the closure.
std::vector<Mat2> greedy_generators(const std::vector<Mat2>& elems, int ell) {
    std::vector<Mat2> gens;
    std::set<Mat2> cur{mat_identity(ell)};
    std::vector<Mat2> lst{mat_identity(ell)};
    while (cur.size() < elems.size()) {
        Mat2 pick = mat_identity(ell);
        bool found = false;
        for (const Mat2& m : elems) {
            if (!cur.count(m)) {
                pick = m;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("greedy_generators: stalled");
        gens.push_back(pick);
        std::vector<Mat2> stack{pick};
        while (!stack.empty()) {
            Mat2 x = stack.back();
            stack.pop_back();
            if (cur.count(x)) continue;
            cur.insert(x);
            lst.push_back(x);
            for (const Mat2& y : lst) {
                stack.push_back(proj_rep(mat_mul(x, y)));
                stack.push_back(proj_rep(mat_mul(y, x)));
            }
        }
    }
    return gens;
}

// Targeted search for 13 < ell <= 101.  Exceptional groups are dihedral
// inside the split-Cartan normalizer or one of A4/S4/A5; candidates are
// constructed directly and kept only if every element is genuinely reducible
// without a common fixed point.
std::vector<StoredEntry> targeted_scan(int ell) {
    std::vector<StoredEntry> out;
    int g0 = primitive_root(ell);
    Mat2 scal = mat2(g0, 0, 0, g0, ell);

    auto push_candidate = [&](const std::vector<Mat2>& gens) {
        SubgroupDesc g = closure(gens);
        if (!is_exceptional_group(g)) return;
        ScanEntry e;
        e.group = g;
        e.cls = proj_classify(g);
        e.orbit_sizes = orbit_sizes(g.elements, ell);
        e.smallest_orbit = e.orbit_sizes.empty() ? 0 : e.orbit_sizes.front();
        StoredEntry se;
        se.in_psl = e.cls.in_psl;
        se.entry = std::move(e);
        out.push_back(std::move(se));
    };

    // Dihedral candidates in the split-Cartan normalizer.  Up to conjugacy
    // the rotation is diag(lambda, 1) and the reflection can be taken with
    // square antidiagonal entry, so b = 1 covers every class.
    for (int d = 2; d <= (ell - 1) / 2; ++d) {
        if ((ell - 1) % (2 * d) != 0) continue;
        int lam = (int)mod_pow(g0, (ell - 1) / d, ell);
        push_candidate({mat2(lam, 0, 0, 1, ell), mat2(0, 1, 1, 0, ell), scal});
    }

    // A4 / S4 / A5 candidates where the congruence class of ell admits them
    // with every element reducible.
    auto push_triangle = [&](int k) {
        std::vector<Mat2> elems = triangle_group(ell, k, true);
        std::vector<Mat2> sat;
        for (const Mat2& r : elems)
            for (int lam = 1; lam < ell; ++lam)
                sat.push_back(mat2((long long)lam * r.a, (long long)lam * r.b,
                                   (long long)lam * r.c, (long long)lam * r.d, ell));
        std::sort(sat.begin(), sat.end());
        std::vector<Mat2> gens = greedy_generators(elems, ell);
        gens.push_back(scal);
        SubgroupDesc g{ell, gens, sat};
        if (!is_exceptional_group(g)) return;
        ScanEntry e;
        e.group = g;
        e.cls = proj_classify(g);
        e.orbit_sizes = orbit_sizes(g.elements, ell);
        e.smallest_orbit = e.orbit_sizes.empty() ? 0 : e.orbit_sizes.front();
        StoredEntry se;
        se.in_psl = e.cls.in_psl;
        se.entry = std::move(e);
        out.push_back(std::move(se));
    };
    if (ell % 12 == 1) push_triangle(3);
    if (ell % 24 == 1) push_triangle(4);
    if (ell % 60 == 1) push_triangle(5);

    std::sort(out.begin(), out.end(), [](const StoredEntry& a, const StoredEntry& b) {
        if (a.entry.group.order() != b.entry.group.order())
            return a.entry.group.order() < b.entry.group.order();
        if (a.entry.cls.kind != b.entry.cls.kind) return a.entry.cls.kind < b.entry.cls.kind;
        if (a.entry.cls.n != b.entry.cls.n) return a.entry.cls.n < b.entry.cls.n;
        return a.entry.group.elements < b.entry.group.elements;
    });
    return out;
}

} // namespace

ExceptionalScanReport enumerate_exceptional(int ell, ScanMode mode) {
    if (!is_prime_small(ell)) throw std::domain_error("enumerate_exceptional: ell must be prime");
    if (ell > 101) throw std::domain_error("enumerate_exceptional: ell too large");

    ExceptionalScanReport rep;
    rep.ell = ell;
    rep.mode = mode;

    std::vector<StoredEntry> all;
    if (ell <= 13)
        all = exhaustive_cached(ell);
    else
        all = targeted_scan(ell);

    for (const StoredEntry& se : all) {
        if (mode == ScanMode::split && se.in_psl) continue;
        if (mode == ScanMode::sl2 && !se.in_psl) continue;
        rep.groups.push_back(se.entry);
    }
    return rep;
}

namespace {

// Fixed points of the whole projective group; used for the normalizer test.
std::vector<uint16_t> ids_of_entry(const PglContext& ctx, const ScanEntry& e) {
    std::set<uint16_t> s;
    for (const Mat2& m : e.group.elements) s.insert(ctx.id_of(m));
    return std::vector<uint16_t>(s.begin(), s.end());
}

// Saturated split-Cartan normalizer, projectively: diagonal classes plus
// antidiagonal classes.
std::pair<Bits, size_t> normalizer_bits(const PglContext& ctx) {
    Bits b(ctx.n);
    size_t count = 0;
    int ell = ctx.ell;
    for (int x = 1; x < ell; ++x) {
        uint16_t d = ctx.id_of(mat2(x, 0, 0, 1, ell));
        if (!b.test(d)) { b.set(d); ++count; }
        uint16_t a = ctx.id_of(mat2(0, x, 1, 0, ell));
        if (!b.test(a)) { b.set(a); ++count; }
    }
    return {std::move(b), count};
}

bool conjugate_into(const PglContext& ctx, const std::vector<uint16_t>& ids, const Bits& target) {
    for (int c = 0; c < ctx.n; ++c) {
        bool ok = true;
        for (uint16_t x : ids) {
            if (!target.test(ctx.conj(c, x))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::string entry_tag(const ScanEntry& e, size_t i) {
    std::ostringstream os;
    os << "group#" << i << " (kind=" << e.cls.kind << ", n=" << e.cls.n
       << ", order=" << e.group.order() << ")";
    return os.str();
}

} // namespace

std::vector<std::string> verify_lemma_split(int ell) {
    if (ell > 13) throw std::domain_error("verify_lemma_split: exhaustive check needs ell <= 13");
    std::vector<std::string> v;
    auto rep = enumerate_exceptional(ell, ScanMode::split);
    if (rep.groups.empty()) return v;
    if (ell % 4 != 3)
        v.push_back("split-mode exceptional group at ell = " + std::to_string(ell) +
                    " with ell not congruent to 3 mod 4");

    const PglContext& ctx = PglContext::get(ell);
    auto [nbits, nsize] = normalizer_bits(ctx);

    for (size_t i = 0; i < rep.groups.size(); ++i) {
        const ScanEntry& e = rep.groups[i];
        std::string tag = entry_tag(e, i);
        if (e.cls.kind != "dihedral") {
            v.push_back(tag + ": expected dihedral image");
            continue;
        }
        long long n = e.cls.n;
        if (n <= 1 || n % 2 == 0)
            v.push_back(tag + ": dihedral parameter should be odd and > 1");
        if (((ell - 1) / 2) % n != 0)
            v.push_back(tag + ": dihedral parameter does not divide (ell-1)/2");

        auto ids = ids_of_entry(ctx, e);
        if (ids.size() >= nsize)
            v.push_back(tag + ": image is not proper in the split-Cartan normalizer");
        if (!conjugate_into(ctx, ids, nbits))
            v.push_back(tag + ": image is not conjugate into the split-Cartan normalizer");

        if (e.smallest_orbit != 2)
            v.push_back(tag + ": smallest orbit on P^1 is not of size 2");

        // Rotation subgroup: projective elements of order dividing n.  Their
        // GL_2 preimages should meet only square determinant classes.
        for (uint16_t x : ids) {
            int po = ctx.porder[x];
            if (n % po == 0 && !ctx.det_sq[x])
                v.push_back(tag + ": rotation class of order " + std::to_string(po) +
                            " has non-square determinant");
        }

        long long expected = (long long)(ell - 1) * 2 * n;
        if ((long long)e.group.order() != expected)
            v.push_back(tag + ": saturated order is not (ell-1)*2n");
        if (((long long)(ell - 1) * (ell - 1)) % expected != 0)
            v.push_back(tag + ": saturated order does not divide (ell-1)^2");
    }
    return v;
}

std::vector<std::string> verify_lemma_sl2(int ell) {
    if (ell > 13) throw std::domain_error("verify_lemma_sl2: exhaustive check needs ell <= 13");
    std::vector<std::string> v;
    auto rep = enumerate_exceptional(ell, ScanMode::sl2);
    if (rep.groups.empty()) return v;
    if (ell % 4 != 1)
        v.push_back("sl2-mode exceptional group at ell = " + std::to_string(ell) +
                    " with ell not congruent to 1 mod 4");

    const PglContext& ctx = PglContext::get(ell);
    auto [nbits, nsize] = normalizer_bits(ctx);

    for (size_t i = 0; i < rep.groups.size(); ++i) {
        const ScanEntry& e = rep.groups[i];
        std::string tag = entry_tag(e, i);
        const std::string& kind = e.cls.kind;
        if (kind == "dihedral") {
            long long n = e.cls.n;
            if (n <= 1 || (ell - 1) % n != 0)
                v.push_back(tag + ": dihedral parameter should exceed 1 and divide ell-1");
            auto ids = ids_of_entry(ctx, e);
            if (ids.size() >= nsize)
                v.push_back(tag + ": image is not proper in the split-Cartan normalizer");
            if (!conjugate_into(ctx, ids, nbits))
                v.push_back(tag + ": image is not conjugate into the split-Cartan normalizer");
            if (e.smallest_orbit != 2)
                v.push_back(tag + ": smallest orbit on P^1 is not of size 2");
        } else if (kind == "A4") {
            if (ell % 12 != 1)
                v.push_back(tag + ": A4 image requires ell congruent to 1 mod 12");
        } else if (kind == "S4") {
            if (ell % 24 != 1)
                v.push_back(tag + ": S4 image requires ell congruent to 1 mod 24");
        } else if (kind == "A5") {
            if (ell % 60 != 1)
                v.push_back(tag + ": A5 image requires ell congruent to 1 mod 60");
        } else {
            v.push_back(tag + ": unexpected image kind");
        }
    }
    return v;
}

std::string scan_report_json(const ExceptionalScanReport& rep) {
    nlohmann::ordered_json j;
    j["ell"] = rep.ell;
    j["mode"] = to_string(rep.mode);
    j["groups"] = nlohmann::ordered_json::array();
    for (const ScanEntry& e : rep.groups) {
        nlohmann::ordered_json g;
        g["order"] = e.group.order();
        g["kind"] = e.cls.kind;
        g["n"] = e.cls.n;
        g["det_squares"] = e.cls.in_psl;
        g["orbit_sizes"] = e.orbit_sizes;
        auto gens = nlohmann::ordered_json::array();
        for (const Mat2& m : e.group.generators)
            gens.push_back(std::vector<int>{m.a, m.b, m.c, m.d});
        g["generators"] = gens;
        j["groups"].push_back(std::move(g));
    }
    j["violations"] = rep.violations;
    return j.dump(2);
}

} // namespace iso
