#include "iso/modpoly.hpp"

#include "iso/fp.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace iso {

namespace {

void validate(const ModPoly& p, const std::string& where) {
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(where + ": " + msg);
    };
    const int ell = p.ell;
    if (ell < 2 || !is_prime_small(ell)) fail("level is not prime");
    const int n = ell + 2;
    if ((int)p.c.size() != n) fail("coefficient table has wrong size");
    for (const auto& row : p.c)
        if ((int)row.size() != n) fail("coefficient table has wrong size");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if (p.c[a][b] != p.c[b][a]) fail("coefficients are not symmetric");

    if (p.c[ell + 1][0] != 1) fail("polynomial is not monic of degree ell+1");
    if (p.c[ell + 1][ell + 1] != 0) fail("degree exceeds ell+1 on the diagonal");

    // Kronecker congruence: Phi == (X^ell - Y) (X - Y^ell) mod ell.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            long want = 0;
            if ((a == ell + 1 && b == 0) || (a == 0 && b == ell + 1)) want = 1;
            if ((a == ell && b == ell) || (a == 1 && b == 1)) want = -1;
            mpz_class r = (p.c[a][b] - want) % ell;
            if (r != 0) fail("Kronecker congruence fails at X^" +
                             std::to_string(a) + " Y^" + std::to_string(b));
        }
    }
}

} // namespace

ModPoly modpoly_from_coeffs(int ell, std::vector<std::vector<mpz_class>> c) {
    ModPoly p;
    p.ell = ell;
    p.c = std::move(c);
    validate(p, "modular polynomial (level " + std::to_string(ell) + ")");
    return p;
}

ModPoly modpoly_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path + ": " + msg);
    };

    ModPoly p;
    bool have_header = false;
    std::vector<std::vector<bool>> seen;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw;
            if (!(ls >> kw)) continue;  // blank line before header
            int ell = 0;
            std::string extra;
            if (kw != "ell" || !(ls >> ell) || (ls >> extra))
                fail("malformed header line");
            if (ell < 2 || !is_prime_small(ell)) fail("level is not prime");
            p.ell = ell;
            p.c.assign(ell + 2, std::vector<mpz_class>(ell + 2, 0));
            seen.assign(ell + 2, std::vector<bool>(ell + 2, false));
            have_header = true;
            continue;
        }
        int i = 0, j = 0;
        std::string coeff, extra;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j >> coeff) || (ls >> extra)) fail("malformed entry line");
        if (i < 0 || j < 0 || i > p.ell + 1 || j > p.ell + 1)
            fail("exponent out of range");
        if (j > i) fail("entries must have i >= j");
        if (seen[i][j]) fail("duplicate entry");
        seen[i][j] = true;
        mpz_class v;
        try {
            v = mpz_class(coeff);
        } catch (const std::invalid_argument&) {
            fail("bad coefficient literal");
        }
        p.c[i][j] = v;
        p.c[j][i] = v;
    }
    if (!have_header) fail("missing header line");
    validate(p, path);
    return p;
}

void modpoly_save(const ModPoly& p, const std::string& path) {
    validate(p, "modular polynomial (level " + std::to_string(p.ell) + ")");
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "ell " << p.ell << "\n";
    for (int i = p.ell + 1; i >= 0; --i)
        for (int j = i; j >= 0; --j)
            if (p.c[i][j] != 0)
                out << i << " " << j << " " << p.c[i][j].get_str() << "\n";
    if (!out) throw std::runtime_error(path + ": write failed");
}

mpq_class modpoly_eval(const ModPoly& p, const mpq_class& x, const mpq_class& y) {
    // Horner in x; inner coefficients are polynomials in y.
    mpq_class acc = 0;
    for (int a = p.ell + 1; a >= 0; --a) {
        mpq_class row = 0;
        for (int b = p.ell + 1; b >= 0; --b) {
            row *= y;
            row += mpq_class(p.c[a][b]);
        }
        acc *= x;
        acc += row;
    }
    acc.canonicalize();
    return acc;
}

std::vector<mpq_class> modpoly_eval_at_x(const ModPoly& p, const mpq_class& j) {
    std::vector<mpq_class> out(p.ell + 2, mpq_class(0));
    for (int b = 0; b <= p.ell + 1; ++b) {
        mpq_class acc = 0;
        for (int a = p.ell + 1; a >= 0; --a) {
            acc *= j;
            acc += mpq_class(p.c[a][b]);
        }
        acc.canonicalize();
        out[b] = acc;
    }
    return out;
}

} // namespace iso
