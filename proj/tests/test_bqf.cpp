#include "doctest.h"

#include "iso/bqf.hpp"
#include "iso/fp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace iso;

namespace {

// Census with no shortcuts: scan every (a, b, c) box and keep the triples
// that are reduced, primitive and of discriminant D.  Exits the c loop by
// size, never by solving for c.
long long brute_form_count(long long D) {
    long long n = 0;
    for (long long a = 1; a <= -D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            for (long long c = a; 4 * a * c <= b * b - D; ++c) {
                if (b * b - 4 * a * c != D) continue;
                if (b < 0 && (-b == a || a == c)) continue;
                if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
                ++n;
            }
        }
    }
    return n;
}

} // namespace

TEST_SUITE("class numbers") {

TEST_CASE("pinned reduced form lists") {
    CHECK(reduced_forms(-4) == std::vector<BQF>{{1, 0, 1}});
    CHECK(reduced_forms(-3) == std::vector<BQF>{{1, 1, 1}});
    CHECK(reduced_forms(-8) == std::vector<BQF>{{1, 0, 2}});

    // 7 x^2 + 7 y^2 has the right discriminant but is imprimitive
    auto f196 = reduced_forms(-196);
    CHECK(f196 == std::vector<BQF>{{1, 0, 49}, {2, 2, 25}, {5, -2, 10}, {5, 2, 10}});
    CHECK(std::find(f196.begin(), f196.end(), BQF{7, 0, 7}) == f196.end());
    BQF imp{7, 0, 7};
    CHECK(imp.disc() == -196);
    CHECK(bqf_is_reduced(imp));
    CHECK_FALSE(bqf_is_primitive(imp));

    CHECK(reduced_forms(-147) == std::vector<BQF>{{1, 1, 37}, {3, 3, 13}});
    CHECK(reduced_forms(-200) ==
          std::vector<BQF>{{1, 0, 50}, {2, 0, 25}, {3, -2, 17}, {3, 2, 17},
                           {6, -4, 9}, {6, 4, 9}});
}

TEST_CASE("every returned form is reduced, primitive, on-discriminant") {
    for (long long D : {-3, -4, -7, -8, -11, -15, -20, -23, -47, -147, -196,
                        -200, -431, -500}) {
        auto forms = reduced_forms(D);
        REQUIRE(!forms.empty());
        CHECK(forms.front().a == 1); // principal form always present
        for (const auto& f : forms) {
            CHECK(f.disc() == D);
            CHECK(bqf_is_reduced(f));
            CHECK(bqf_is_primitive(f));
        }
        // listing is strictly ordered, hence duplicate-free
        for (size_t i = 1; i < forms.size(); ++i) {
            bool inc = forms[i - 1].a < forms[i].a ||
                       (forms[i - 1].a == forms[i].a &&
                        forms[i - 1].b < forms[i].b);
            CHECK(inc);
        }
    }
}

TEST_CASE("counts match a shortcut-free census") {
    for (long long D = -3; D >= -120; --D) {
        long long r = ((D % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        CAPTURE(D);
        CHECK(class_number(D) == brute_form_count(D));
    }
    // a few classical values, now certified by the census above
    CHECK(class_number(-7) == 1);
    CHECK(class_number(-11) == 1);
    CHECK(class_number(-15) == 2);
    CHECK(class_number(-19) == 1);
    CHECK(class_number(-20) == 2);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-47) == 5);
}

TEST_CASE("invalid discriminants are rejected") {
    CHECK_THROWS_AS(reduced_forms(0), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(5), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(-1), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(-2), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(-5), std::domain_error);
    CHECK_THROWS_AS(reduced_forms(-6), std::domain_error);
    CHECK_NOTHROW(reduced_forms(-7));
}

TEST_CASE("fundamental discriminant classification") {
    for (long long D : {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24})
        CHECK(is_fundamental_disc(D));
    for (long long D : {-12, -16, -27, -28, -32, -36, -45, -75, -196, -200})
        CHECK_FALSE(is_fundamental_disc(D));
    CHECK_FALSE(is_fundamental_disc(0));
    CHECK_FALSE(is_fundamental_disc(5));
}

TEST_CASE("class number ratio matches the closed form on the grid") {
    for (long long D : {-3, -4, -7, -8, -11, -15, -19, -20}) {
        for (int ell : {3, 5, 7}) {
            if (D % ell == 0) continue;
            CAPTURE(D);
            CAPTURE(ell);
            auto rep = isogenous_order_ratio_check(D, ell);
            CHECK(rep.match);
            CHECK(rep.h_base == class_number(D));
            CHECK(rep.h_sub == class_number(ell * (long long)ell * D));
            if (rep.unit_index == 1) {
                CHECK(rep.lower_bound_ok);
                CHECK(rep.ratio_counted >= ell - 1);
            }
        }
    }
}

TEST_CASE("pinned ratio instances") {
    CHECK(legendre(-4, 7) == -1);
    auto r1 = isogenous_order_ratio_check(-4, 7);
    CHECK(r1.h_base == 1);
    CHECK(r1.h_sub == 4);
    CHECK(r1.unit_index == 2);
    CHECK(r1.ratio_counted == 4);
    CHECK(r1.ratio_formula == (7 - (-1)) / 2);
    CHECK(r1.match);

    auto r2 = isogenous_order_ratio_check(-8, 5);
    CHECK(r2.h_sub == 6);
    CHECK(r2.ratio_counted == 6);
    CHECK(r2.ratio_formula == 6); // 5 - (-1)
    CHECK(r2.lower_bound_ok);     // 6 >= ell - 1 = 4

    CHECK(legendre(-3, 7) == 1); // -3 = 2^2 mod 7
    auto r3 = isogenous_order_ratio_check(-3, 7);
    CHECK(r3.unit_index == 3);
    CHECK(r3.h_sub == 2);
    CHECK(r3.ratio_counted == 2);
    CHECK(r3.ratio_formula == 2); // (7 - 1) / 3
    CHECK(r3.match);
}

TEST_CASE("ratio check rejects bad input") {
    CHECK_THROWS_AS(isogenous_order_ratio_check(-12, 5), std::domain_error);
    CHECK_THROWS_AS(isogenous_order_ratio_check(-196, 3), std::domain_error);
    CHECK_THROWS_AS(isogenous_order_ratio_check(-15, 3), std::domain_error);
    CHECK_THROWS_AS(isogenous_order_ratio_check(-7, 2), std::domain_error);
    CHECK_THROWS_AS(isogenous_order_ratio_check(-7, 9), std::domain_error);
}

TEST_CASE("degree guard") {
    CHECK(cm_guard(7, 1));
    CHECK_FALSE(cm_guard(5, 2)); // boundary: 5 = 2*2 + 1
    CHECK(cm_guard(13, 2));
    CHECK_FALSE(cm_guard(3, 1));
    CHECK(cm_ratio_bound(1) == 2);
    CHECK(cm_ratio_bound(2) == 4);

    // the guard is exactly "minimal ratio exceeds the CM ceiling"
    for (int ell : {3, 5, 7, 11, 13})
        for (int d : {1, 2, 3, 4})
            CHECK(cm_guard(ell, d) == (ell - 1 > cm_ratio_bound(d)));
}

} // TEST_SUITE
