#include "doctest.h"

#include "iso/fp.hpp"
#include "iso/gl2.hpp"

#include <random>
#include <set>

using namespace iso;

TEST_SUITE_BEGIN("gl2core");

TEST_CASE("legendre agrees with an exhaustive square sweep") {
    for (long long ell : {3, 5, 7, 11, 13, 17, 67, 101}) {
        std::set<long long> squares;
        for (long long i = 1; i < ell; ++i) squares.insert((i * i) % ell);
        CHECK(legendre(0, ell) == 0);
        for (long long a = 1; a < ell; ++a)
            CHECK(legendre(a, ell) == (squares.count(a) ? 1 : -1));
    }
}

TEST_CASE("legendre table path matches the Euler criterion") {
    // 67 >= 64 exercises the table branch; compare against a direct Euler pass
    for (long long a = 1; a < 67; ++a) {
        int euler = mod_pow(a, 33, 67) == 1 ? 1 : -1;
        CHECK(legendre(a, 67) == euler);
    }
}

TEST_CASE("legendre is multiplicative") {
    for (long long ell : {7, 13, 101})
        for (long long a = 1; a < ell; ++a)
            for (long long b = 1; b < ell; ++b)
                CHECK(legendre(a * b, ell) == legendre(a, ell) * legendre(b, ell));
}

TEST_CASE("sqrt_mod returns square roots of residues") {
    for (long long ell : {3, 5, 7, 11, 13, 17, 29, 97, 101}) {
        for (long long a = 0; a < ell; ++a) {
            if (a != 0 && legendre(a, ell) != 1) {
                CHECK_THROWS(sqrt_mod(a, ell));
                continue;
            }
            long long r = sqrt_mod(a, ell);
            CHECK((r * r) % ell == a);
        }
    }
}

TEST_CASE("primitive_root generates the unit group") {
    for (long long ell : {3, 5, 7, 11, 13, 61, 73}) {
        long long g = primitive_root(ell);
        std::set<long long> seen;
        long long x = 1;
        for (long long k = 0; k < ell - 1; ++k) { seen.insert(x); x = (x * g) % ell; }
        CHECK((long long)seen.size() == ell - 1);
    }
}

TEST_CASE("det and trace basics; det is multiplicative") {
    std::mt19937 rng(42);
    int ell = 13;
    auto rnd = [&]() {
        while (true) {
            Mat2 m = mat2(rng() % ell, rng() % ell, rng() % ell, rng() % ell, ell);
            if (mat_invertible(m)) return m;
        }
    };
    for (int i = 0; i < 1000; ++i) {
        Mat2 x = rnd(), y = rnd();
        CHECK(mat_det(mat_mul(x, y)) == (int)mod_reduce((long long)mat_det(x) * mat_det(y), ell));
        CHECK(mat_mul(x, mat_inv(x)) == mat_identity(ell));
    }
    CHECK(mat_trace(mat2(3, 1, 0, 9, 13)) == 12);
}

TEST_CASE("projective points: canonical form and index round trip") {
    for (int ell : {2, 3, 5, 7, 11, 13}) {
        auto pts = proj_line(ell);
        CHECK((int)pts.size() == ell + 1);
        std::set<int> idx;
        for (const auto& p : pts) {
            CHECK(proj_from_index(proj_index(p, ell), ell) == p);
            idx.insert(proj_index(p, ell));
        }
        CHECK((int)idx.size() == ell + 1);
        // scaling does not change the point
        for (int t = 1; t < ell; ++t)
            CHECK(proj_canon(2 * t % ell, t, ell) == proj_canon(2, 1, ell));
    }
}

TEST_CASE("identity fixes the whole line") {
    for (int ell : {2, 3, 5, 7, 11, 13})
        CHECK((int)fixed_points(mat_identity(ell)).size() == ell + 1);
}

TEST_CASE("order-4 rotation mod 5: scalar square and fixed points") {
    Mat2 g = mat2(0, -1, 1, 0, 5);
    Mat2 g2 = mat_mul(g, g);
    CHECK(is_scalar(g2));
    CHECK(g2 == mat2(4, 0, 0, 4, 5));
    CHECK(proj_order(g) == 2);
    // x^2 = 4 y^2 mod 5, i.e. the points (1:3) and (1:2)
    auto fix = fixed_points(g);
    std::set<int> idx;
    for (const auto& p : fix) idx.insert(proj_index(p, 5));
    CHECK(idx == std::set<int>{2, 3});
    CHECK(char_poly_reducible(g));
}

TEST_CASE("char_poly_reducible matches fixed point existence everywhere") {
    for (int ell : {2, 3, 5, 7, 11}) {
        for (int a = 0; a < ell; ++a)
            for (int b = 0; b < ell; ++b)
                for (int c = 0; c < ell; ++c)
                    for (int d = 0; d < ell; ++d) {
                        Mat2 m{a, b, c, d, ell};
                        if (!mat_invertible(m)) continue;
                        CHECK(char_poly_reducible(m) == !fixed_points(m).empty());
                    }
    }
}

TEST_CASE("frobenius_reducible equals reducibility of the companion matrix") {
    for (int ell : {2, 3, 5, 7, 13}) {
        for (int a = 0; a < ell; ++a)
            for (int q = 1; q < ell; ++q) {
                Mat2 companion = mat2(0, -q, 1, a, ell);  // char poly x^2 - a x + q
                CHECK(frobenius_reducible(a, q, ell) == char_poly_reducible(companion));
            }
    }
    CHECK_THROWS(frobenius_reducible(1, 0, 5));
}

TEST_CASE("mod 2 reducibility is the parity of the trace") {
    CHECK(frobenius_reducible(0, 1, 2));
    CHECK(!frobenius_reducible(1, 1, 2));
    CHECK(!char_poly_reducible(mat2(1, 1, 1, 0, 2)));  // x^2 + x + 1
    CHECK(char_poly_reducible(mat2(0, 1, 1, 0, 2)));
    CHECK(fixed_points(mat2(1, 1, 1, 0, 2)).empty());
}

TEST_CASE("projective order of a split generator") {
    long long g0 = primitive_root(13);
    CHECK(g0 == 2);
    CHECK(proj_order(mat2(g0, 0, 0, 1, 13)) == 12);
    CHECK(proj_order(mat2(4, 0, 0, 1, 13)) == 6);
    CHECK(proj_order(mat2(1, 1, 0, 1, 13)) == 13);
    CHECK(proj_order(mat_identity(13)) == 1);
}

TEST_CASE("proj_rep canonicalizes scalar multiples and encodes injectively") {
    int ell = 7;
    std::set<int> codes;
    int count = 0;
    for (int a = 0; a < ell; ++a)
        for (int b = 0; b < ell; ++b)
            for (int c = 0; c < ell; ++c)
                for (int d = 0; d < ell; ++d) {
                    Mat2 m{a, b, c, d, ell};
                    if (!mat_invertible(m)) continue;
                    ++count;
                    Mat2 r = proj_rep(m);
                    for (int s = 2; s < ell; ++s)
                        CHECK(proj_rep(mat2((long long)s * m.a, (long long)s * m.b,
                                            (long long)s * m.c, (long long)s * m.d, ell)) == r);
                    codes.insert(proj_rep_encode(r));
                }
    CHECK(count == (49 - 1) * (49 - 7));
    CHECK((int)codes.size() == 7 * 7 * 7 - 7);
}

TEST_SUITE_END();
