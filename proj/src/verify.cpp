#include "knotforge/verify.hpp"

#include "knotforge/alexander.hpp"
#include "knotforge/census.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/twobridge.hpp"
#include "knotforge/util.hpp"

#include "json.hpp"

#include <atomic>
#include <thread>

namespace knotforge {

namespace {

VerifyRow verify_one(int n, const VerifyOptions& opt, const TileCatalog& cat) {
    VerifyRow row;
    row.n = n;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok && row.failure.empty()) row.failure = what;
        return ok;
    };

    BuildResult built = build_link(n, cat);
    const Diagram& d = built.diagram;
    row.crossings = d.crossing_count();

    row.knot = d.components().count == 1;
    check(row.knot, "knot");

    row.chi = built.seifert.chi;
    check(row.chi == 1 - 2 * n, "chi");

    if (row.knot) {
        row.genus_value = genus(d);
        check(row.genus_value == n, "genus");
    }

    row.alternating = is_alternating(d);
    check(row.alternating, "alternating");
    row.special = is_special(d);
    check(row.special, "special");
    row.reduced = is_reduced(d);
    check(row.reduced, "reduced");
    if (row.alternating && row.reduced) {
        row.prime = diagram_prime(d);
        check(row.prime, "prime");
    }

    GrayGraph g = build_graph(n, cat);
    auto comps = census::components(g);
    row.graph_components = static_cast<int>(comps.size());
    check(row.graph_components == 2 * n - 1, "graph components");
    row.graph_shape_ok = true;
    for (const auto& c : comps)
        if (c.vertices.size() != 2 || c.edges.size() != 2) row.graph_shape_ok = false;
    check(row.graph_shape_ok, "graph shape");

    row.census_count = census::count_surfaces(n, cat);
    row.census_ok = row.census_count == (std::uint64_t(1) << (2 * n - 1));
    check(row.census_ok, "census");

    if (row.knot) {
        LaurentPoly delta = alexander_poly(d);
        row.alexander_span = delta.span();
        Integer at1 = delta.eval(1);
        row.alexander_unit = (at1 == 1 || at1 == -1);
        row.alexander_palindromic = delta.is_palindromic();
        check(row.alexander_span == 2 * n, "alexander span");
        check(row.alexander_unit, "alexander unit");
        check(row.alexander_palindromic, "alexander palindromic");

        Integer det = determinant(d);  // throws if the two routes disagree
        row.det_routes_match = true;
        row.determinant_str = det.get_str();
        row.determinant_odd = (det % 2 != 0);
        check(row.determinant_odd, "determinant odd");

        if (n <= opt.oracle_n_max) {
            CrossCheckReport oc = cross_check(n, cat);
            row.oracle_agree = oc.agree;
            check(oc.agree, "oracle");
        }
    }

    row.pass = row.failure.empty();
    return row;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opt, const TileCatalog& cat) {
    if (opt.n_max < 1) throw InvalidInput("verify: n_max must be >= 1");
    VerifyReport rep;
    rep.rows.resize(static_cast<std::size_t>(opt.n_max));

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (int n = 1; n <= opt.n_max; ++n)
            rep.rows[static_cast<std::size_t>(n - 1)] = verify_one(n, opt, cat);
    } else {
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        std::vector<std::string> errors(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (;;) {
                    int n = next.fetch_add(1);
                    if (n > opt.n_max) return;
                    try {
                        rep.rows[static_cast<std::size_t>(n - 1)] = verify_one(n, opt, cat);
                    } catch (const std::exception& ex) {
                        errors[static_cast<std::size_t>(t)] = ex.what();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (!e.empty()) throw IntegrityError("verify worker: " + e);
    }

    rep.all_pass = true;
    for (const auto& row : rep.rows) {
        if (!row.pass && rep.first_failure.empty())
            rep.first_failure = "n=" + std::to_string(row.n) + ": " + row.failure;
        rep.all_pass = rep.all_pass && row.pass;
    }
    return rep;
}

std::string verify_report_json(const VerifyReport& rep, const VerifyOptions& opt) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["n_max"] = opt.n_max;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["crossings"] = r.crossings;
        row["knot"] = r.knot;
        row["alternating"] = r.alternating;
        row["special"] = r.special;
        row["reduced"] = r.reduced;
        row["prime"] = r.prime;
        row["chi"] = r.chi;
        row["genus"] = r.genus_value;
        row["graph_components"] = r.graph_components;
        row["graph_shape_ok"] = r.graph_shape_ok;
        row["census_count"] = r.census_count;
        row["alexander_span"] = r.alexander_span;
        row["alexander_unit"] = r.alexander_unit;
        row["alexander_palindromic"] = r.alexander_palindromic;
        row["determinant"] = r.determinant_str;
        row["determinant_odd"] = r.determinant_odd;
        row["det_routes_match"] = r.det_routes_match;
        if (r.oracle_agree.has_value())
            row["oracle_agree"] = *r.oracle_agree;
        else
            row["oracle_agree"] = nullptr;
        row["pass"] = r.pass;
        if (!r.failure.empty()) row["failure"] = r.failure;
        j["rows"].push_back(row);
    }
    j["all_pass"] = rep.all_pass;
    if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
    return j.dump(2) + "\n";
}

} // namespace knotforge
