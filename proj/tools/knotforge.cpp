// knotforge: build the tile-constructed knot family L_n, verify its
// diagram-level invariants, count minimal genus Seifert surface classes via
// the gray graph, and corroborate the count with a two-bridge
// continued-fraction search.

#include "knotforge/alexander.hpp"
#include "knotforge/census.hpp"
#include "knotforge/construct.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/twobridge.hpp"
#include "knotforge/util.hpp"
#include "knotforge/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

using knotforge::Diagram;
using ordered_json = nlohmann::ordered_json;

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw knotforge::InvalidInput("cannot open output file " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::optional<std::string> opt_path(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

ordered_json invariants_json(const Diagram& d) {
    using namespace knotforge;
    ordered_json j;
    j["schema_version"] = 1;
    auto report = d.validate();
    j["valid"] = report.ok();
    if (!report.ok()) {
        j["issues"] = ordered_json::array();
        for (const auto& issue : report.issues)
            j["issues"].push_back(issue.code + (issue.detail.empty() ? "" : ": " + issue.detail));
        return j;
    }
    j["crossings"] = d.crossing_count();
    j["edges"] = d.edge_count();
    ComponentInfo comp = d.components();
    j["components"] = comp.count;
    j["faces"] = d.faces().count();
    SeifertData sd = seifert_circles(d);
    j["seifert_circles"] = sd.s;
    j["chi"] = sd.chi;
    bool alt = is_alternating(d);
    j["alternating"] = alt;
    j["special"] = is_special(d);
    bool reduced = is_reduced(d);
    j["reduced"] = reduced;
    if (alt && reduced)
        j["prime"] = diagram_prime(d);
    else
        j["prime"] = nullptr;  // diagrammatic primality criterion needs reduced alternating
    if (comp.count == 1) {
        j["genus"] = genus(d);
        LaurentPoly delta = alexander_poly(d);
        ordered_json poly;
        for (const auto& [exp, coeff] : delta.coeff_map()) poly[std::to_string(exp)] = coeff;
        j["alexander"] = poly;
        j["alexander_span"] = delta.span();
        j["determinant"] = determinant(d).get_str();
    } else {
        j["genus"] = nullptr;
        j["alexander"] = nullptr;
        j["determinant"] = nullptr;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tile-constructed knot family: build, invariants, census, oracle"};
    app.require_subcommand(1);

    std::string tile_file;
    app.add_option("--tile-file", tile_file,
                   "tile data file (default: embedded; KNOTFORGE_TILE_FILE also honored)");

    // build
    auto* cmd_build = app.add_subcommand("build", "emit the diagram of L_n");
    int build_n = 1;
    std::string build_format = "json";
    std::string build_out;
    cmd_build->add_option("--n", build_n, "index of the link to build")->required();
    cmd_build->add_option("--format", build_format, "pd | gauss | dt | json");
    cmd_build->add_option("--out", build_out, "write to a file instead of stdout");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification sweep");
    knotforge::VerifyOptions vopt;
    std::string verify_out;
    cmd_verify->add_option("--n-max", vopt.n_max, "verify L_1 .. L_n_max (default 8)");
    cmd_verify->add_option("--oracle-n-max", vopt.oracle_n_max,
                           "run the two-bridge oracle for n up to this (default 2)");
    cmd_verify->add_option("--jobs", vopt.jobs, "worker threads (default 1)");
    cmd_verify->add_option("--out", verify_out, "write the JSON report to a file");

    // census
    auto* cmd_census = app.add_subcommand("census", "count minimal genus surface classes");
    int census_n = 1;
    std::string census_out;
    cmd_census->add_option("--n", census_n, "index of the link")->required();
    cmd_census->add_option("--out", census_out, "write to a file instead of stdout");

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "two-bridge expansion cross-check");
    int oracle_n = 0;
    long long oracle_p = 0, oracle_q = 0;
    int oracle_len = 0, oracle_bound = 0;
    std::string oracle_out;
    cmd_oracle->add_option("--n", oracle_n, "cross-check L_n against the census");
    cmd_oracle->add_option("--p", oracle_p, "explicit fraction numerator (with --q)");
    cmd_oracle->add_option("--q", oracle_q, "explicit fraction denominator");
    cmd_oracle->add_option("--length", oracle_len, "expansion length for explicit fractions");
    cmd_oracle->add_option("--bound", oracle_bound, "coefficient bound (default 2n+4)");
    cmd_oracle->add_option("--out", oracle_out, "write to a file instead of stdout");

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "invariants of a user-supplied diagram");
    std::string inv_file;
    std::string inv_format = "json";
    std::string inv_out;
    cmd_inv->add_option("file", inv_file, "diagram file (JSON schema or PD text)")->required();
    cmd_inv->add_option("--format", inv_format, "json | pd");
    cmd_inv->add_option("--out", inv_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_build->parsed()) {
            if (build_n < 1) throw knotforge::InvalidInput("build: --n must be >= 1");
            auto format = knotforge::parse_format(build_format);
            if (!format) throw knotforge::InvalidInput("build: unknown format " + build_format);
            auto cat = knotforge::tile_catalog(opt_path(tile_file));
            auto built = knotforge::build_link(build_n, cat);
            write_out(knotforge::export_diagram(built.diagram, *format), build_out);
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (vopt.n_max < 1) throw knotforge::InvalidInput("verify: --n-max must be >= 1");
            auto cat = knotforge::tile_catalog(opt_path(tile_file));
            auto rep = knotforge::run_verify(vopt, cat);
            write_out(knotforge::verify_report_json(rep, vopt), verify_out);
            if (!rep.all_pass) {
                std::cerr << "verify: FAIL at " << rep.first_failure << "\n";
                return kExitVerifyFail;
            }
            return 0;
        }

        if (cmd_census->parsed()) {
            if (census_n < 1) throw knotforge::InvalidInput("census: --n must be >= 1");
            auto cat = knotforge::tile_catalog(opt_path(tile_file));
            auto g = knotforge::build_graph(census_n, cat);
            auto comps = knotforge::census::components(g);
            std::uint64_t count = knotforge::census::count_surfaces(census_n, cat);
            ordered_json j;
            j["schema_version"] = 1;
            j["n"] = census_n;
            j["components"] = comps.size();
            j["count"] = count;
            j["closed_form_ok"] = true;  // count_surfaces throws on mismatch
            write_out(j.dump(), census_out);
            return 0;
        }

        if (cmd_oracle->parsed()) {
            ordered_json j;
            j["schema_version"] = 1;
            if (oracle_n > 0) {
                auto cat = knotforge::tile_catalog(opt_path(tile_file));
                std::optional<int> bound;
                if (oracle_bound > 0) bound = oracle_bound;
                auto rep = knotforge::cross_check(oracle_n, cat, bound);
                j["n"] = rep.n;
                j["fraction"]["p"] = rep.p;
                j["fraction"]["q"] = rep.classes.empty() ? 0 : rep.classes.front().q;
                j["length"] = rep.length;
                j["bound"] = rep.bound;
                ordered_json classes = ordered_json::array();
                for (const auto& c : rep.classes) {
                    ordered_json cj;
                    cj["q"] = c.q;
                    cj["expansions"] = c.expansions;
                    cj["surface_count"] = c.surface_count;
                    classes.push_back(cj);
                }
                j["classes"] = classes;
                j["count"] = rep.expansion_count;
                j["census_count"] = rep.census_count;
                j["agree"] = rep.agree;
                write_out(j.dump(), oracle_out);
                return 0;
            }
            if (oracle_p > 0 && oracle_q != 0 && oracle_len > 0) {
                if (oracle_bound <= 0)
                    throw knotforge::InvalidInput("oracle: explicit fractions need --bound");
                knotforge::Fraction f{oracle_p, oracle_q};
                auto found = knotforge::enumerate_expansions(f, oracle_len, oracle_bound);
                j["fraction"]["p"] = f.p;
                j["fraction"]["q"] = f.q;
                j["expansions"] = found;
                j["count"] = found.size();
                write_out(j.dump(), oracle_out);
                return 0;
            }
            throw knotforge::InvalidInput("oracle: need --n, or --p/--q/--length/--bound");
        }

        if (cmd_inv->parsed()) {
            auto format = knotforge::parse_format(inv_format);
            if (!format) throw knotforge::InvalidInput("invariants: unknown format " + inv_format);
            std::ifstream in(inv_file, std::ios::binary);
            if (!in) throw knotforge::InvalidInput("invariants: cannot open " + inv_file);
            std::ostringstream ss;
            ss << in.rdbuf();
            Diagram d = knotforge::parse_diagram(ss.str(), *format);
            write_out(invariants_json(d).dump(), inv_out);
            return 0;
        }
    } catch (const knotforge::IntegrityError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitIntegrity;
    } catch (const knotforge::InvalidInput& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitIntegrity;
    }
    return 0;
}
