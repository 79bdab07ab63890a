// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include "knotforge/alexander.hpp"
#include "knotforge/census.hpp"
#include "knotforge/construct.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/twobridge.hpp"
#include "knotforge/util.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace knotforge;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cmd(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

} // namespace

int main() {
    const TileCatalog cat = tile_catalog();
    std::vector<Criterion> results;

    auto run = [&](int id, const std::string& label, const std::function<std::string()>& body) {
        Criterion c{id, label};
        auto start = std::chrono::steady_clock::now();
        try {
            c.detail = body();
            c.pass = true;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail = ex.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(c);
        std::string note = c.pass ? "" : "  -- " + c.detail;
        std::printf("[criterion %2d] %-52s %s (%.2f s)%s\n", c.id, c.label.c_str(),
                    c.pass ? "PASS" : "FAIL", c.seconds, note.c_str());
        std::fflush(stdout);
    };

    auto expect = [](bool ok, const std::string& what) {
        if (!ok) throw IntegrityError(what);
    };

    // Shared sweep data for criteria 1-4 and 7.
    std::vector<BuildResult> built;  // index n-1, n = 1..8
    for (int n = 1; n <= 8; ++n) built.push_back(build_link(n, cat));

    run(1, "knot-ness: components(L_n) = 1 for n = 1..8", [&] {
        for (int n = 1; n <= 8; ++n)
            expect(built[n - 1].diagram.components().count == 1,
                   "L_" + std::to_string(n) + " is not a knot");
        return "single component for every n";
    });

    run(2, "Euler characteristic 1-2n and genus n for n = 1..8", [&] {
        for (int n = 1; n <= 8; ++n) {
            expect(built[n - 1].seifert.chi == 1 - 2 * n,
                   "chi(L_" + std::to_string(n) + ") = " + std::to_string(built[n - 1].seifert.chi));
            expect(genus(built[n - 1].diagram) == n, "genus(L_" + std::to_string(n) + ") != n");
        }
        return "chi = -1,-3,...,-15; genus = 1..8";
    });

    run(3, "alternating and special for n = 1..8", [&] {
        for (int n = 1; n <= 8; ++n) {
            expect(is_alternating(built[n - 1].diagram), "L_" + std::to_string(n) + " not alternating");
            expect(is_special(built[n - 1].diagram), "L_" + std::to_string(n) + " not special");
        }
        return "every diagram special alternating";
    });

    run(4, "reduced and diagram-prime for n = 1..8", [&] {
        for (int n = 1; n <= 8; ++n) {
            expect(is_reduced(built[n - 1].diagram), "L_" + std::to_string(n) + " not reduced");
            expect(diagram_prime(built[n - 1].diagram), "L_" + std::to_string(n) + " not prime");
        }
        return "no nugatory crossings, no 2-edge cuts";
    });

    run(5, "gray graph: 2n-1 components of 2 vertices / 2 edges, n = 1..12", [&] {
        for (int n = 1; n <= 12; ++n) {
            auto comps = census::components(build_graph(n, cat));
            expect(static_cast<int>(comps.size()) == 2 * n - 1,
                   "G_" + std::to_string(n) + " has " + std::to_string(comps.size()) + " components");
            for (const auto& comp : comps)
                expect(comp.vertices.size() == 2 && comp.edges.size() == 2,
                       "G_" + std::to_string(n) + " has a component of the wrong shape");
        }
        return "all components are double edges";
    });

    run(6, "census: count_surfaces(n) = 2^(2n-1), n = 1..12; enumeration n <= 6", [&] {
        for (int n = 1; n <= 12; ++n) {
            std::uint64_t want = std::uint64_t(1) << (2 * n - 1);
            expect(census::count_surfaces(n, cat) == want, "count mismatch at n = " + std::to_string(n));
        }
        for (int n = 1; n <= 6; ++n) {
            GrayGraph g = build_graph(n, cat);
            std::set<std::vector<int>> seen;
            census::enumerate_selections(g, [&](const EdgeSelection& sel) {
                if (!seen.insert(sel.edge_per_component).second)
                    throw IntegrityError("duplicate selection at n = " + std::to_string(n));
                return true;
            });
            expect(seen.size() == (std::uint64_t(1) << (2 * n - 1)),
                   "enumeration size mismatch at n = " + std::to_string(n));
        }
        return "counts match the closed form; enumeration duplicate-free";
    });

    run(7, "Alexander: span 2n, Delta(1) = +-1, palindromic, det two ways, n = 1..6", [&] {
        for (int n = 1; n <= 6; ++n) {
            LaurentPoly delta = alexander_poly(built[n - 1].diagram);
            expect(delta.span() == 2 * n, "span(Delta(L_" + std::to_string(n) + ")) != 2n");
            Integer at1 = delta.eval(1);
            expect(at1 == 1 || at1 == -1, "Delta(1) != +-1 at n = " + std::to_string(n));
            expect(delta.is_palindromic(), "Delta not palindromic at n = " + std::to_string(n));
            determinant(built[n - 1].diagram);  // throws if Goeritz and |Delta(-1)| disagree
        }
        return "both determinant routes agree for every n";
    });

    run(8, "fixtures: trefoil, figure-eight, unknot kink", [&] {
        Diagram tre = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
        expect(genus(tre) == 1, "trefoil genus");
        expect(alexander_poly(tre).str() == "1 - t + t^2", "trefoil Delta");
        expect(determinant(tre) == 3, "trefoil det");
        expect(diagram_prime(tre), "trefoil prime");
        expect(is_alternating(tre), "trefoil alternating");
        expect(is_special(tre), "trefoil special");

        Diagram f8 = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
        expect(genus(f8) == 1, "figure-eight genus");
        expect(alexander_poly(f8).str() == "1 - 3*t + t^2", "figure-eight Delta");
        expect(determinant(f8) == 5, "figure-eight det");
        expect(is_alternating(f8), "figure-eight alternating");
        expect(!is_special(f8), "figure-eight must not be special");

        Diagram kink = parse_pd("PD[X[1,1,2,2]]");
        expect(genus(kink) == 0, "unknot genus");
        expect(alexander_poly(kink).str() == "1", "unknot Delta");
        return "all hand-computed values reproduced";
    });

    bool upstream_ok = true;
    for (const auto& c : results) upstream_ok = upstream_ok && c.pass;

    run(9, "oracle: cross_check(1) and cross_check(2) agree with the census", [&] {
        CrossCheckReport r1 = cross_check(1, cat);
        CrossCheckReport r2 = cross_check(2, cat);
        std::string counts = "counts " + std::to_string(r1.expansion_count) + " and " +
                             std::to_string(r2.expansion_count);
        expect(r1.expansion_count == 2 && r1.agree, "cross_check(1) disagrees (" + counts + ")");
        expect(r2.expansion_count == 8 && r2.agree, "cross_check(2) disagrees (" + counts + ")");
        return counts + " match 2^1 and 2^3";
    });
    if (!results.back().pass && !upstream_ok)
        results.back().detail += " (upstream criteria already failing; convention vs transcription unresolved)";

    run(10, "determinism: two verify sweeps are byte-identical", [&] {
        std::string out1 = "/tmp/knotforge_accept_" + std::to_string(::getpid()) + "_1.json";
        std::string out2 = "/tmp/knotforge_accept_" + std::to_string(::getpid()) + "_2.json";
        std::string base = std::string(KNOTFORGE_CLI_PATH) + " verify --n-max 8 --out ";
        int rc1 = run_cmd(base + out1);
        int rc2 = run_cmd(base + out2);
        expect(rc1 == 0, "first verify run exited " + std::to_string(rc1));
        expect(rc2 == 0, "second verify run exited " + std::to_string(rc2));
        std::string a = read_file(out1), b = read_file(out2);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        expect(!a.empty() && a == b, "reports differ");
        return "byte-identical reports";
    });

    int failed = 0;
    for (const auto& c : results)
        if (!c.pass) ++failed;
    std::printf("ACCEPTANCE: %d/%zu PASS\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
