#include "doctest.h"

#include "iso/modpoly.hpp"
#include "iso/qexp.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace iso;

namespace {

// Plain-vector truncated power series over long long, used as an
// independent oracle for the windowed implementation.
std::vector<long long> naive_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b, size_t n) {
    std::vector<long long> r(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<long long> naive_euler(size_t n) {
    std::vector<long long> r(n, 0);
    r[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        std::vector<long long> f(n, 0);
        f[0] = 1;
        f[k] = -1;
        r = naive_mul(r, f, n);
    }
    return r;
}

std::vector<long long> naive_pow(std::vector<long long> a, int e, size_t n) {
    std::vector<long long> r(n, 0);
    r[0] = 1;
    for (int i = 0; i < e; ++i) r = naive_mul(r, a, n);
    return r;
}

std::vector<long long> naive_div(const std::vector<long long>& num,
                                 const std::vector<long long>& den, size_t n) {
    REQUIRE(den[0] == 1);
    std::vector<long long> q(n, 0);
    for (size_t i = 0; i < n; ++i) {
        long long s = num[i];
        for (size_t j = 0; j < i; ++j) s -= q[j] * den[i - j];
        q[i] = s;
    }
    return q;
}

std::string data_path(const std::string& name) {
    return std::string(DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("modpoly_test_" + std::to_string(++counter) + ".txt"))
                   .string();
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE("q-expansions and modular polynomials") {

TEST_CASE("pentagonal euler product matches the naive finite product") {
    auto oracle = naive_euler(40);
    QSeries e = euler_product(40);
    CHECK(e.lo == 0);
    for (long long k = 0; k < 40; ++k)
        CHECK(e.coeff(k) == mpz_class((long)oracle[(size_t)k]));
}

TEST_CASE("series arithmetic tracks exact windows") {
    QSeries a = euler_product(5);   // [0, 5)
    QSeries b = euler_product(7);   // [0, 7)
    QSeries p = qs_mul(a, b);
    CHECK(p.lo == 0);
    CHECK(p.hi == 5);
    CHECK_THROWS_AS((void)p.coeff(5), std::domain_error);
    CHECK(p.coeff(-3) == 0);

    QSeries inv = qs_inv(a);
    QSeries one = qs_mul(a, inv);
    CHECK(one.coeff(0) == 1);
    for (long long k = 1; k < one.hi; ++k) CHECK(one.coeff(k) == 0);

    CHECK_THROWS_AS(qs_truncate(a, 9), std::domain_error);

    QSeries g = qs_subst_pow(a, 3);
    CHECK(g.lo == 0);
    CHECK(g.hi == 13);
    for (long long k = 0; k < g.hi; ++k) {
        if (k % 3 == 0)
            CHECK(g.coeff(k) == a.coeff(k / 3));
        else
            CHECK(g.coeff(k) == 0);
    }
}

TEST_CASE("j-series anchor coefficients") {
    QSeries j = j_series(4);
    CHECK(j.lo == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == 864299970);
}

TEST_CASE("level 2 hauptmodul against a naive series oracle") {
    const size_t n = 8;
    auto num = naive_pow(naive_euler(n), 24, n);
    auto den_base = naive_euler(n / 2);
    std::vector<long long> den_sub(n, 0);
    for (size_t i = 0; i < n / 2; ++i) den_sub[2 * i] = den_base[i];
    auto den = naive_pow(den_sub, 24, n);
    auto ratio = naive_div(num, den, n);
    CHECK(ratio[0] == 1);
    CHECK(ratio[1] == -24);
    CHECK(ratio[2] == 276);

    QSeries t = hauptmodul(2, (long long)n - 1);
    CHECK(t.lo == -1);
    for (long long e = t.lo; e < t.hi; ++e)
        CHECK(t.coeff(e) == mpz_class((long)ratio[(size_t)(e + 1)]));

    CHECK_THROWS_AS(hauptmodul(11, 4), std::domain_error);
}

TEST_CASE("level 2 modular polynomial equals the classical table") {
    auto c = modular_polynomial(2);
    std::map<std::pair<int, int>, mpz_class> want = {
        {{3, 0}, mpz_class(1)},
        {{2, 2}, mpz_class(-1)},
        {{2, 1}, mpz_class(1488)},
        {{2, 0}, mpz_class(-162000)},
        {{1, 1}, mpz_class(40773375L)},
        {{1, 0}, mpz_class(8748000000L)},
        {{0, 0}, mpz_class(-157464000000000L)},
    };
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            auto it = want.find({std::max(a, b), std::min(a, b)});
            mpz_class expect = it == want.end() ? mpz_class(0) : it->second;
            CHECK(c[a][b] == expect);
        }
    }
}

TEST_CASE("hauptmodul anchors satisfy the generated polynomials") {
    for (int ell : {2, 3, 5, 7, 13}) {
        CAPTURE(ell);
        auto c = modular_polynomial(ell);
        auto anchor = hauptmodul_anchor(ell, c);
        auto poly = modpoly_from_coeffs(ell, c);
        CHECK(modpoly_eval(poly, anchor.j1, anchor.j2) == 0);
        CHECK(modpoly_eval(poly, anchor.j2, anchor.j1) == 0);
        CHECK(anchor.j1.get_den() == 1);
        CHECK(anchor.j2.get_den() == 1);
    }

    mpz_class c3376;
    mpz_ui_pow_ui(c3376.get_mpz_t(), 3376, 3);
    auto a5 = hauptmodul_anchor(5, modular_polynomial(5));
    CHECK(a5.j1 == mpq_class(c3376));
    CHECK(a5.j2 == 4096);

    auto a2 = hauptmodul_anchor(2, modular_polynomial(2));
    mpz_class c257, c17;
    mpz_ui_pow_ui(c257.get_mpz_t(), 257, 3);
    mpz_ui_pow_ui(c17.get_mpz_t(), 17, 3);
    CHECK(a2.j1 == mpq_class(c257));
    CHECK(a2.j2 == mpq_class(c17));
}

TEST_CASE("committed data files match regeneration") {
    for (int ell : {2, 3, 5, 7, 11, 13}) {
        CAPTURE(ell);
        auto fresh = modular_polynomial(ell);
        auto disk = modpoly_load(data_path("phi" + std::to_string(ell) + ".txt"));
        CHECK(disk.ell == ell);
        CHECK(disk.c == fresh);
    }
}

TEST_CASE("save format is deterministic and round-trips") {
    auto poly = modpoly_load(data_path("phi5.txt"));
    TempFile tmp("");
    modpoly_save(poly, tmp.path);
    CHECK(read_file(tmp.path) == read_file(data_path("phi5.txt")));
    auto again = modpoly_load(tmp.path);
    CHECK(again.c == poly.c);
}

TEST_CASE("singular j-invariants at ramified and split levels") {
    auto phi2 = modpoly_load(data_path("phi2.txt"));
    CHECK(modpoly_eval(phi2, 0, 54000) == 0);
    CHECK(modpoly_eval(phi2, 8000, 8000) == 0);
    auto phi7 = modpoly_load(data_path("phi7.txt"));
    CHECK(modpoly_eval(phi7, -3375, -3375) == 0);
    auto phi11 = modpoly_load(data_path("phi11.txt"));
    CHECK(modpoly_eval(phi11, -32768, -32768) == 0);

    auto ycoeffs = modpoly_eval_at_x(phi2, 0);
    CHECK(ycoeffs.size() == 4);
    CHECK(ycoeffs[3] == 1);
    CHECK(ycoeffs[2] == -162000);
    CHECK(ycoeffs[1] == 8748000000L);
    CHECK(ycoeffs[0] == -157464000000000L);
    mpq_class acc = 0;
    for (int b = 3; b >= 0; --b) acc = acc * 54000 + ycoeffs[b];
    CHECK(acc == 0);
}

TEST_CASE("loader rejects malformed files") {
    CHECK_THROWS_AS(modpoly_load(TempFile("ell 4\n5 0 1\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("banana\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("3 0 1\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("").path), std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("ell 2\n0 1 5\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("ell 2\n4 0 1\n").path),
                    std::runtime_error);
    std::string phi2 = read_file(data_path("phi2.txt"));
    CHECK_THROWS_AS(modpoly_load(TempFile(phi2 + "0 0 -157464000000000\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("ell 2\n3 0 1\n1 1 abc\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load(TempFile("ell 2\n3 0 1\n2 2 -1 9\n").path),
                    std::runtime_error);
    CHECK_THROWS_AS(modpoly_load("/nonexistent/phi.txt"), std::runtime_error);

    // Comments and blank lines are accepted.
    auto ok = modpoly_load(TempFile("# header comment\n\n" + phi2 + "\n# tail\n").path);
    CHECK(ok.ell == 2);
}

TEST_CASE("coefficient validation catches tampering") {
    auto good = modpoly_load(data_path("phi2.txt"));
    auto broken = good.c;
    broken[2][0] += 1;
    broken[0][2] += 1;  // keeps symmetry, breaks the Kronecker congruence
    CHECK_THROWS_AS(modpoly_from_coeffs(2, broken), std::runtime_error);

    auto nonmonic = good.c;
    nonmonic[3][0] = 2;
    nonmonic[0][3] = 2;
    CHECK_THROWS_AS(modpoly_from_coeffs(2, nonmonic), std::runtime_error);

    auto asym = good.c;
    asym[2][1] += 1;
    CHECK_THROWS_AS(modpoly_from_coeffs(2, asym), std::runtime_error);

    CHECK_NOTHROW(modpoly_from_coeffs(2, good.c));
}

} // TEST_SUITE
