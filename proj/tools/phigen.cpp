// Generates the classical modular polynomial data files from exact
// q-expansions and cross-checks each one before writing it out.

#include "iso/modpoly.hpp"
#include "iso/qexp.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"modular polynomial generator"};
    std::string out_dir = "data";
    int only = 0;
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--ell", only, "generate a single level (default: all)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::vector<int> levels = {2, 3, 5, 7, 11, 13};
    if (only != 0) {
        bool known = false;
        for (int ell : levels) known = known || ell == only;
        if (!known) {
            std::fprintf(stderr, "unsupported level %d\n", only);
            return 2;
        }
        levels = {only};
    }

    try {
        for (int ell : levels) {
            std::printf("phi_%d: expanding ...\n", ell);
            std::fflush(stdout);
            auto coeffs = iso::modular_polynomial(ell);
            auto poly = iso::modpoly_from_coeffs(ell, coeffs);
            if (24 % (ell - 1) == 0) {
                auto anchor = iso::hauptmodul_anchor(ell, coeffs);
                std::printf("phi_%d: anchor j1 = %s, j2 = %s\n", ell,
                            anchor.j1.get_str().c_str(),
                            anchor.j2.get_str().c_str());
            }
            std::string path = out_dir + "/phi" + std::to_string(ell) + ".txt";
            iso::modpoly_save(poly, path);
            auto reload = iso::modpoly_load(path);
            if (reload.c != poly.c)
                throw std::runtime_error(path + ": reload mismatch");
            std::printf("phi_%d: wrote %s\n", ell, path.c_str());
            std::fflush(stdout);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
