#include "iso/genus.hpp"

#include "iso/fp.hpp"

#include <doctest.h>

#include <set>

using namespace iso;

TEST_SUITE("modular curve genus") {

TEST_CASE("split-Cartan normalizer genus, small levels") {
    CHECK(genus_split_closed(5) == 0);
    CHECK(genus_split_closed(7) == 0);
    CHECK(genus_split_closed(11) == 2);
    CHECK(genus_split_closed(13) == 3);
    CHECK_THROWS_AS(genus_split_closed(4), std::domain_error);
    CHECK_THROWS_AS(genus_split_closed(3), std::domain_error);
}

TEST_CASE("borel: closed profile agrees with the coset action") {
    for (int ell = 3; ell <= 31; ++ell) {
        if (!is_prime_small(ell)) continue;
        CAPTURE(ell);
        CHECK(genus_borel_closed(ell) == genus_from_cosets(ell, "borel").genus);
    }
    CHECK(genus_borel_closed(11) == 1);
    CHECK(genus_borel_closed(13) == 0);
    CHECK_THROWS_AS(genus_borel_closed(4), std::domain_error);
}

TEST_CASE("coset counts for classical curves of prime level") {
    // (mu, nu2, nu3, nu_inf, genus), long-established values
    struct Row {
        int ell;
        long long mu, nu2, nu3, nu_inf, genus;
    };
    const Row rows[] = {
        {3, 4, 0, 1, 2, 0},
        {5, 6, 2, 0, 2, 0},
        {7, 8, 0, 2, 2, 0},
        {11, 12, 0, 0, 2, 1},
        {13, 14, 2, 2, 2, 0},
    };
    for (const Row& r : rows) {
        CAPTURE(r.ell);
        auto g = genus_from_cosets(r.ell, "borel");
        CHECK(g.mu == r.mu);
        CHECK(g.nu2 == r.nu2);
        CHECK(g.nu3 == r.nu3);
        CHECK(g.nu_inf == r.nu_inf);
        CHECK(g.genus == r.genus);
    }
}

TEST_CASE("the full group gives the line") {
    for (int ell : {5, 7, 11, 13}) {
        CAPTURE(ell);
        auto g = genus_from_cosets(ell, "psl");
        CHECK(g.mu == 1);
        CHECK(g.nu2 == 1);
        CHECK(g.nu3 == 1);
        CHECK(g.nu_inf == 1);
        CHECK(g.genus == 0);
    }
}

TEST_CASE("split: cosets agree with the closed formula, 5 <= ell <= 31") {
    for (int ell : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        CAPTURE(ell);
        auto c = genus_from_cosets(ell, "split");
        CHECK(c.genus == genus_split_closed(ell));
        // the split curve has mu = ell*(ell+1)/2 cosets
        CHECK(c.mu == (long long)ell * (ell + 1) / 2);
    }
}

TEST_CASE("A4 curve at 13: full coset profile") {
    auto g = genus_from_cosets(13, "A4");
    CHECK(g.mu == 91);
    CHECK(g.nu2 == 3);
    CHECK(g.nu3 == 4);
    CHECK(g.nu_inf == 7);
    CHECK(g.genus == 3);
}

TEST_CASE("exceptional kinds: cosets agree with the closed formulas") {
    for (int ell : {5, 7, 11, 13, 17}) {
        CAPTURE(ell);
        auto e = genus_exceptional_closed(ell, "A4");
        REQUIRE(e.integral);
        CHECK(genus_from_cosets(ell, "A4").genus == e.genus);
    }
    for (int ell : {7, 17, 23}) {
        CAPTURE(ell);
        auto e = genus_exceptional_closed(ell, "S4");
        REQUIRE(e.integral);
        CHECK(genus_from_cosets(ell, "S4").genus == e.genus);
    }
    for (int ell : {11, 19}) {
        CAPTURE(ell);
        auto e = genus_exceptional_closed(ell, "A5");
        REQUIRE(e.integral);
        CHECK(genus_from_cosets(ell, "A5").genus == e.genus);
    }
}

TEST_CASE("the large exceptional anchors") {
    auto a5 = genus_exceptional_closed(61, "A5");
    REQUIRE(a5.integral);
    CHECK(a5.numerator == 195840);
    CHECK(a5.genus == 136);
    CHECK(genus_from_cosets(61, "A5").genus == 136);

    auto s4 = genus_exceptional_closed(73, "S4");
    REQUIRE(s4.integral);
    CHECK(s4.numerator == 351360);
    CHECK(s4.genus == 610);
    CHECK(genus_from_cosets(73, "S4").genus == 610);

    auto a4 = genus_exceptional_closed(13, "A4");
    REQUIRE(a4.integral);
    CHECK(a4.numerator == 864);
    CHECK(a4.genus == 3);
}

TEST_CASE("closed formula surfaces non-integral values as data") {
    // S4 only lands inside psl for ell = +-1 mod 8; at 11 the fraction
    // does not clear its denominator.
    auto e = genus_exceptional_closed(11, "S4");
    CHECK_FALSE(e.integral);
    CHECK(e.numerator == 144);
    CHECK(e.denominator == 576);
}

TEST_CASE("custom subgroup path matches the named kinds") {
    int g0 = primitive_root(7);
    auto borel = closure({mat2(g0, 0, 0, 1, 7), mat2(1, 1, 0, 1, 7)});
    auto a = genus_from_cosets(borel);
    auto b = genus_from_cosets(7, "borel");
    CHECK(a.mu == b.mu);
    CHECK(a.nu2 == b.nu2);
    CHECK(a.nu3 == b.nu3);
    CHECK(a.nu_inf == b.nu_inf);
    CHECK(a.genus == b.genus);
}

TEST_CASE("groups meeting psl trivially are rejected") {
    // diag(-1, 1) at 7 has non-square determinant, so the projective group
    // of order 2 it generates meets psl in the identity alone.
    auto g = closure({mat2(-1, 0, 0, 1, 7)});
    CHECK_THROWS_AS(genus_from_cosets(g), std::domain_error);
}

TEST_CASE("coset computation is deterministic") {
    auto a = genus_from_cosets(13, "split");
    auto b = genus_from_cosets(13, "split");
    CHECK(a.mu == b.mu);
    CHECK(a.nu2 == b.nu2);
    CHECK(a.nu3 == b.nu3);
    CHECK(a.nu_inf == b.nu_inf);
}

TEST_CASE("frontier: split genus at least 2 from 11 through 200") {
    auto rows = finiteness_frontier(11, 200);
    int split_rows = 0;
    std::set<int> primes_seen;
    for (const auto& r : rows) {
        if (r.kind == "split") {
            ++split_rows;
            primes_seen.insert(r.ell);
            CAPTURE(r.ell);
            CHECK(r.genus >= 2);
        } else {
            CHECK((r.kind == "A4" || r.kind == "S4" || r.kind == "A5"));
            if (r.kind == "A4") CHECK(r.ell % 12 == 1);
            if (r.kind == "S4") CHECK(r.ell % 24 == 1);
            if (r.kind == "A5") CHECK(r.ell % 60 == 1);
        }
    }
    // primes in [11, 200]
    CHECK(split_rows == 42);
    CHECK(primes_seen.count(11) == 1);
    CHECK(primes_seen.count(199) == 1);
    // spot values
    for (const auto& r : rows) {
        if (r.ell == 13 && r.kind == "A4") CHECK(r.genus == 3);
        if (r.ell == 73 && r.kind == "S4") CHECK(r.genus == 610);
    }
}

} // TEST_SUITE
