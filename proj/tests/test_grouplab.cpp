#include "doctest.h"

#include "iso/pgl.hpp"
#include "iso/subgroup.hpp"

#include <set>

using namespace iso;

TEST_SUITE_BEGIN("grouplab");

TEST_CASE("closure of a split torus generator") {
    SubgroupDesc g = closure({mat2(2, 0, 0, 1, 13)});
    CHECK(g.order() == 12);
    CHECK_THROWS(closure({mat2(2, 0, 0, 1, 13)}, 3));  // cap exceeded
    CHECK_THROWS(closure({mat2(1, 0, 1, 0, 5)}));      // singular generator
}

TEST_CASE("scalar-saturated V4 preimage mod 5 is exceptional") {
    SubgroupDesc g = closure({mat2(1, 0, 0, -1, 5), mat2(0, 1, 1, 0, 5), mat2(2, 0, 0, 2, 5)});
    CHECK(g.order() == 16);
    CHECK(is_exceptional_group(g));
    auto cls = proj_classify(g);
    CHECK(cls.kind == "dihedral");
    CHECK(cls.n == 2);
    CHECK(cls.proj_order == 4);
    CHECK(cls.in_psl);
    CHECK(orbit_sizes(proj_image(g), 5) == std::vector<int>{2, 2, 2});
}

TEST_CASE("borel subgroup has a common fixed point") {
    SubgroupDesc g = closure({mat2(3, 0, 0, 1, 7), mat2(1, 1, 0, 1, 7)});
    CHECK(g.order() == 42);
    CHECK(!is_exceptional_group(g));
    CHECK(proj_classify(g).kind == "borel-reducible");
}

TEST_CASE("cyclic split torus classifies as cyclic, not borel") {
    SubgroupDesc g = closure({mat2(3, 0, 0, 1, 7)});
    auto cls = proj_classify(g);
    CHECK(cls.kind == "cyclic");
    CHECK(cls.n == 6);
    CHECK(!is_exceptional_group(g));  // fixes (1:0) and (0:1)
}

TEST_CASE("split Cartan normalizer mod 7 is dihedral of order 12") {
    SubgroupDesc g = closure({mat2(3, 0, 0, 1, 7), mat2(0, 1, 1, 0, 7)});
    auto cls = proj_classify(g);
    CHECK(cls.kind == "dihedral");
    CHECK(cls.n == 6);
    CHECK(cls.proj_order == 12);
    CHECK(!cls.in_psl);
}

TEST_CASE("order-6 dihedral mod 7 with nonsquare reflection determinants") {
    // the GL_2 closure picks up the scalar 2 via w * diag(2,1) * w * diag(2,1)^-1
    SubgroupDesc g = closure({mat2(2, 0, 0, 1, 7), mat2(0, 1, 1, 0, 7)});
    CHECK(g.order() == 18);
    CHECK(is_exceptional_group(g));
    auto cls = proj_classify(g);
    CHECK(cls.kind == "dihedral");
    CHECK(cls.n == 3);
    CHECK(!cls.in_psl);
    CHECK(cls.det_group == std::vector<int>{1, 2, 3, 4, 5, 6});
    auto sizes = orbit_sizes(proj_image(g), 7);
    CHECK(sizes == std::vector<int>{2, 3, 3});
}

TEST_CASE("psl-containing image is recognized") {
    // [[1,1],[0,1]] and [[1,0],[1,1]] generate SL_2
    SubgroupDesc g = closure({mat2(1, 1, 0, 1, 5), mat2(1, 0, 1, 1, 5)});
    CHECK(g.order() == 120);
    CHECK(proj_classify(g).kind == "psl-containing");
}

TEST_CASE("orbit count of a diagonalizable element is 2 + (ell-1)/order") {
    for (int ell : {5, 7, 11, 13}) {
        long long g0 = primitive_root(ell);
        for (long long k = 1; k < ell - 1; ++k) {
            Mat2 h = mat2(mod_pow(g0, k, ell), 0, 0, 1, ell);
            if (is_scalar(h)) continue;
            int ord = proj_order(h);
            auto orbits = orbit_structure(closure({h}).elements, ell);
            CHECK((long long)orbits.size() == 2 + (ell - 1) / ord);
        }
    }
}

TEST_CASE("unit_subgroup closes under multiplication") {
    CHECK(unit_subgroup({2}, 7) == std::vector<int>{1, 2, 4});
    CHECK(unit_subgroup({3}, 7) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(unit_subgroup({}, 7) == std::vector<int>{1});
    CHECK(unit_subgroup({4}, 13) == std::vector<int>{1, 3, 4, 9, 10, 12});
}

TEST_CASE("pgl context tables are consistent with matrix arithmetic") {
    for (int ell : {2, 3, 5, 7}) {
        const PglContext& ctx = PglContext::get(ell);
        CHECK(ctx.n == ell * ell * ell - ell);
        for (int i = 0; i < ctx.n; ++i) {
            CHECK(ctx.id_of(ctx.rep[i]) == i);
            CHECK(ctx.pmul(i, ctx.inv[i]) == ctx.id_of(mat_identity(ell)));
            CHECK(ctx.porder[i] == proj_order(ctx.rep[i]));
            CHECK((ctx.reducible[i] == 1) == char_poly_reducible(ctx.rep[i]));
        }
        // spot check associativity through the tables
        for (int i = 0; i < ctx.n; i += 3)
            for (int j = 1; j < ctx.n; j += 5) {
                int k = (i * 7 + j) % ctx.n;
                CHECK(ctx.pmul(ctx.pmul(i, j), k) == ctx.pmul(i, ctx.pmul(j, k)));
            }
    }
}

TEST_CASE("pgl conjugacy classes partition the group") {
    const PglContext& ctx = PglContext::get(7);
    std::set<int> seen;
    size_t total = 0;
    for (size_t c = 0; c < ctx.class_reps.size(); ++c) {
        int r = ctx.class_reps[c];
        CHECK(ctx.class_of[r] == (int)c);
        for (int x = 0; x < ctx.n; ++x)
            if (ctx.class_of[x] == (int)c) {
                ++total;
                // class invariants
                CHECK(ctx.porder[x] == ctx.porder[r]);
                CHECK(ctx.reducible[x] == ctx.reducible[r]);
                CHECK(ctx.det_sq[x] == ctx.det_sq[r]);
            }
    }
    CHECK(total == (size_t)ctx.n);
}

TEST_SUITE_END();
