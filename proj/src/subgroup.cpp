#include "iso/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace iso {

namespace {

uint64_t enc(const Mat2& m) {
    uint64_t e = m.ell;
    return ((((uint64_t)m.a * e + m.b) * e + m.c) * e) + m.d;
}

size_t gl2_order(int ell) {
    size_t q = ell;
    return (q * q - 1) * (q * q - q);
}

} // namespace

SubgroupDesc closure(const std::vector<Mat2>& gens, size_t cap) {
    if (gens.empty()) throw std::domain_error("closure: empty generating set");
    int ell = gens[0].ell;
    for (const Mat2& g : gens) {
        if (g.ell != ell) throw std::domain_error("closure: modulus mismatch");
        if (!mat_invertible(g)) throw std::domain_error("closure: singular generator");
    }
    if (cap == 0) cap = gl2_order(ell);

    std::set<uint64_t> seen;
    std::vector<Mat2> elems;
    std::deque<Mat2> work;
    auto push = [&](const Mat2& m) {
        if (seen.insert(enc(m)).second) {
            elems.push_back(m);
            work.push_back(m);
            if (elems.size() > cap) throw std::runtime_error("closure: cap exceeded");
        }
    };
    push(mat_identity(ell));
    for (const Mat2& g : gens) push(g);
    while (!work.empty()) {
        Mat2 x = work.front();
        work.pop_front();
        // products against a snapshot; anything new re-enters the queue
        for (size_t i = 0; i < elems.size(); ++i) {
            push(mat_mul(x, elems[i]));
            push(mat_mul(elems[i], x));
        }
    }
    std::sort(elems.begin(), elems.end());
    SubgroupDesc sd;
    sd.ell = ell;
    sd.generators = gens;
    sd.elements = std::move(elems);
    return sd;
}

bool is_exceptional_group(const SubgroupDesc& g) {
    if (g.elements.empty()) throw std::domain_error("is_exceptional_group: empty group");
    uint32_t common = (1u << (g.ell + 1)) - 1;
    for (const Mat2& m : g.elements) {
        if (!char_poly_reducible(m)) return false;  // some element acts freely
        uint32_t mask = 0;
        for (const ProjPoint& p : fixed_points(m)) mask |= 1u << proj_index(p, g.ell);
        common &= mask;
    }
    return common == 0;
}

std::vector<Mat2> proj_image(const SubgroupDesc& g) {
    std::set<Mat2> image;
    for (const Mat2& m : g.elements) image.insert(proj_rep(m));
    return std::vector<Mat2>(image.begin(), image.end());
}

std::vector<int> unit_subgroup(const std::vector<int>& units, int ell) {
    std::set<int> seen{1 % ell};
    std::deque<int> work(seen.begin(), seen.end());
    for (int u : units) {
        int v = (int)mod_reduce(u, ell);
        if (v == 0) throw std::domain_error("unit_subgroup: zero unit");
        if (seen.insert(v).second) work.push_back(v);
    }
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (int y : std::vector<int>(seen.begin(), seen.end())) {
            int p = (int)mod_reduce((long long)x * y, ell);
            if (seen.insert(p).second) work.push_back(p);
        }
    }
    return std::vector<int>(seen.begin(), seen.end());
}

std::vector<std::vector<ProjPoint>> orbit_structure(const std::vector<Mat2>& elements, int ell) {
    if (elements.empty()) throw std::domain_error("orbit_structure: empty group");
    std::vector<char> visited(ell + 1, 0);
    std::vector<std::vector<ProjPoint>> orbits;
    for (int i = 0; i <= ell; ++i) {
        if (visited[i]) continue;
        std::set<int> orb;
        ProjPoint p = proj_from_index(i, ell);
        for (const Mat2& m : elements) orb.insert(proj_index(proj_apply(m, p), ell));
        std::vector<ProjPoint> pts;
        for (int idx : orb) {
            visited[idx] = 1;
            pts.push_back(proj_from_index(idx, ell));
        }
        orbits.push_back(std::move(pts));
    }
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return orbits;
}

std::vector<int> orbit_sizes(const std::vector<Mat2>& elements, int ell) {
    std::vector<int> sizes;
    for (const auto& o : orbit_structure(elements, ell)) sizes.push_back((int)o.size());
    return sizes;
}

namespace {

bool det_class_square(const Mat2& m) {
    return m.ell == 2 || legendre(mat_det(m), m.ell) == 1;
}

// order multiset of a projective group given by canonical reps
std::map<int, int> order_profile(const std::vector<Mat2>& h) {
    std::map<int, int> prof;
    for (const Mat2& m : h) ++prof[proj_order(m)];
    return prof;
}

} // namespace

ProjClassification proj_classify_image(const std::vector<Mat2>& h, int ell,
                                       const std::vector<int>& dets) {
    if (h.empty()) throw std::domain_error("proj_classify_image: empty group");
    ProjClassification cls;
    cls.proj_order = (long long)h.size();
    cls.det_group = unit_subgroup(dets, ell);
    cls.in_psl = true;
    for (int d : cls.det_group)
        if (!(ell == 2 || legendre(d, ell) == 1)) { cls.in_psl = false; break; }

    size_t m = h.size();
    size_t psl_order = ell == 2 ? 6 : (size_t)ell * (ell - 1) * (ell + 1) / 2;

    if (m >= psl_order) {
        size_t in_psl_count = 0;
        for (const Mat2& x : h)
            if (det_class_square(x)) ++in_psl_count;
        if (in_psl_count == psl_order) {
            cls.kind = "psl-containing";
            return cls;
        }
    }

    for (const Mat2& x : h)
        if ((size_t)proj_order(x) == m) {
            cls.kind = "cyclic";
            cls.n = (long long)m;
            return cls;
        }

    {
        uint32_t common = (1u << (ell + 1)) - 1;
        for (const Mat2& x : h) {
            uint32_t mask = 0;
            for (const ProjPoint& p : fixed_points(x)) mask |= 1u << proj_index(p, ell);
            common &= mask;
            if (!common) break;
        }
        if (common) {
            cls.kind = "borel-reducible";
            return cls;
        }
    }

    if (m % 2 == 0 && m >= 4) {
        size_t n = m / 2;
        for (const Mat2& x : h) {
            if ((size_t)proj_order(x) != n) continue;
            std::set<Mat2> cyc;
            Mat2 p = mat_identity(ell);
            for (size_t k = 0; k < n; ++k) {
                cyc.insert(proj_rep(p));
                p = mat_mul(p, x);
            }
            Mat2 xinv_rep = proj_rep(mat_inv(x));
            for (const Mat2& y : h) {
                if (cyc.count(y)) continue;
                if (proj_order(y) != 2) continue;
                Mat2 t = proj_rep(mat_mul(mat_mul(y, x), mat_inv(y)));
                if (t == xinv_rep) {
                    cls.kind = "dihedral";
                    cls.n = (long long)n;
                    return cls;
                }
            }
        }
    }

    auto prof = order_profile(h);
    auto orders_within = [&](std::set<int> allowed) {
        for (auto& [o, c] : prof)
            if (!allowed.count(o)) return false;
        return true;
    };
    if (m == 12 && orders_within({1, 2, 3})) { cls.kind = "A4"; return cls; }
    if (m == 24 && orders_within({1, 2, 3, 4}) && prof.count(4)) { cls.kind = "S4"; return cls; }
    if (m == 60 && orders_within({1, 2, 3, 5}) && prof.count(5)) { cls.kind = "A5"; return cls; }

    throw std::domain_error("proj_classify: image is not of a recognized type");
}

ProjClassification proj_classify(const SubgroupDesc& g) {
    std::vector<int> dets;
    for (const Mat2& m : g.elements) dets.push_back(mat_det(m));
    return proj_classify_image(proj_image(g), g.ell, dets);
}

namespace {

// Projective closure of a pair of canonical representatives; empty result if
// the closure exceeds cap.
std::vector<Mat2> proj_closure_pair(const Mat2& s, const Mat2& t, size_t cap) {
    std::set<Mat2> seen{mat_identity(s.ell)};
    std::vector<Mat2> stack{proj_rep(s), proj_rep(t)};
    std::vector<Mat2> elems{mat_identity(s.ell)};
    while (!stack.empty()) {
        Mat2 x = stack.back();
        stack.pop_back();
        if (seen.count(x)) continue;
        seen.insert(x);
        elems.push_back(x);
        if (seen.size() > cap) return {};
        for (const Mat2& y : elems) {
            stack.push_back(proj_rep(mat_mul(x, y)));
            stack.push_back(proj_rep(mat_mul(y, x)));
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool det_square(const Mat2& m) {
    if (m.ell == 2) return true;
    return legendre(mat_det(m), m.ell) == 1;
}

// Projective order exactly k, tested by direct powers (k in {2,3,4,5}).
bool proj_order_is(const Mat2& m, int k) {
    if (is_scalar(m)) return false;
    if (!is_scalar(mat_pow(m, k))) return false;
    if (k == 4 && is_scalar(mat_pow(m, 2))) return false;
    return true;  // remaining k are prime
}

// All canonical PGL_2 representatives of a given projective order, in
// canonical encode order.
std::vector<Mat2> proj_elements_of_order(int ell, int k, bool psl_only) {
    std::vector<Mat2> out;
    auto consider = [&](const Mat2& m) {
        if (!mat_invertible(m)) return;
        if (psl_only && !det_square(m)) return;
        if (proj_order_is(m, k)) out.push_back(m);
    };
    for (int b = 0; b < ell; ++b)
        for (int c = 0; c < ell; ++c)
            for (int d = 0; d < ell; ++d) consider(mat2(1, b, c, d, ell));
    for (int c = 1; c < ell; ++c)
        for (int d = 0; d < ell; ++d) consider(mat2(0, 1, c, d, ell));
    return out;
}

} // namespace

std::vector<Mat2> triangle_group(int ell, int k, bool psl_only) {
    if (k < 3 || k > 5) throw std::domain_error("triangle_group: k must be 3, 4 or 5");
    size_t target = k == 3 ? 12 : k == 4 ? 24 : 60;
    std::vector<Mat2> invol = proj_elements_of_order(ell, 2, psl_only);
    std::vector<Mat2> third = proj_elements_of_order(ell, 3, psl_only);

    auto attempt = [&](const Mat2& s) -> std::vector<Mat2> {
        for (const Mat2& t : third) {
            if (!proj_order_is(mat_mul(s, t), k)) continue;
            auto elems = proj_closure_pair(s, t, 2 * target);
            if (elems.size() == target) return elems;
        }
        return {};
    };

    // Involutions of a fixed determinant class form a single conjugacy class,
    // and conjugating a triangle moves its involution anywhere in the class,
    // so trying one representative per class suffices.  The full double loop
    // stays as a safety net.
    std::vector<Mat2> firsts;
    bool have_sq = false, have_ns = false;
    for (const Mat2& s : invol) {
        bool sq = det_square(s);
        if (sq && !have_sq) { firsts.push_back(s); have_sq = true; }
        if (!sq && !have_ns) { firsts.push_back(s); have_ns = true; }
        if (have_sq && have_ns) break;
    }
    for (const Mat2& s : firsts) {
        auto elems = attempt(s);
        if (!elems.empty()) return elems;
    }
    for (const Mat2& s : invol) {
        auto elems = attempt(s);
        if (!elems.empty()) return elems;
    }
    throw std::domain_error("triangle_group: no (2,3," + std::to_string(k) +
                            ") subgroup in PGL_2(F_" + std::to_string(ell) + ")");
}

} // namespace iso
