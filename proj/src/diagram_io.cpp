#include "knotforge/diagram.hpp"
#include "knotforge/util.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knotforge {

using ordered_json = nlohmann::ordered_json;

std::optional<ExportFormat> parse_format(const std::string& name) {
    if (name == "pd") return ExportFormat::pd;
    if (name == "gauss") return ExportFormat::gauss;
    if (name == "dt") return ExportFormat::dt;
    if (name == "json") return ExportFormat::json;
    return std::nullopt;
}

namespace {

std::string export_pd_text(const Diagram& d) {
    std::ostringstream os;
    os << "PD[";
    const auto& xs = d.crossings();
    for (std::size_t c = 0; c < xs.size(); ++c) {
        if (c) os << ",";
        os << "X[" << xs[c].e[0] << "," << xs[c].e[1] << "," << xs[c].e[2] << ","
           << xs[c].e[3] << "]";
    }
    os << "]";
    return os.str();
}

std::string export_json_text(const Diagram& d) {
    ordered_json j;
    j["crossings"] = ordered_json::array();
    for (const auto& x : d.crossings())
        j["crossings"].push_back({x.e[0], x.e[1], x.e[2], x.e[3]});
    j["orientation"] = d.orientation_flags();
    return j.dump();
}

// Visits along the single strand, in order: (crossing, under?).
struct KnotTrace {
    std::vector<std::pair<int, bool>> visits;
    std::vector<EdgeId> edge_before;  // edge whose head is this visit
};

KnotTrace trace_knot(const Diagram& d) {
    if (d.components().count != 1)
        throw InvalidInput("export: this format requires a knot (1 component)");
    KnotTrace tr;
    EdgeId e = 1;
    do {
        EndRef h = d.head(e);
        tr.visits.emplace_back(h.crossing, h.slot == 0);
        tr.edge_before.push_back(e);
        e = d.strand_next(e);
    } while (e != 1);
    return tr;
}

std::string export_gauss_text(const Diagram& d) {
    KnotTrace tr = trace_knot(d);
    // Crossings numbered by first visit.
    std::vector<int> num(static_cast<std::size_t>(d.crossing_count()), 0);
    int next = 0;
    std::ostringstream os;
    for (std::size_t i = 0; i < tr.visits.size(); ++i) {
        auto [c, under] = tr.visits[i];
        if (num[static_cast<std::size_t>(c)] == 0) num[static_cast<std::size_t>(c)] = ++next;
        if (i) os << " ";
        os << (under ? "U" : "O") << num[static_cast<std::size_t>(c)];
    }
    return os.str();
}

std::string export_dt_text(const Diagram& d) {
    KnotTrace tr = trace_knot(d);
    const int nc = d.crossing_count();
    // Visit positions 1..2c; pair the odd and even visit of each crossing,
    // negate the even label when that visit is an overpass.
    std::vector<std::array<int, 2>> pos(static_cast<std::size_t>(nc), {0, 0});
    std::vector<std::array<bool, 2>> under(static_cast<std::size_t>(nc), {false, false});
    for (std::size_t i = 0; i < tr.visits.size(); ++i) {
        auto [c, u] = tr.visits[i];
        int k = pos[static_cast<std::size_t>(c)][0] == 0 ? 0 : 1;
        pos[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = static_cast<int>(i) + 1;
        under[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = u;
    }
    std::map<int, int> odd_to_even;
    for (int c = 0; c < nc; ++c) {
        int a = pos[static_cast<std::size_t>(c)][0], b = pos[static_cast<std::size_t>(c)][1];
        int odd = (a % 2 != 0) ? a : b;
        int even = (a % 2 != 0) ? b : a;
        bool even_under = (even == a) ? under[static_cast<std::size_t>(c)][0]
                                      : under[static_cast<std::size_t>(c)][1];
        if (odd % 2 == 0 || even % 2 != 0)
            throw IntegrityError("dt: visits of a crossing must have opposite parity");
        odd_to_even[odd] = even_under ? even : -even;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [odd, even] : odd_to_even) {
        (void)odd;
        if (!first) os << " ";
        os << even;
        first = false;
    }
    return os.str();
}

} // namespace

std::string export_diagram(const Diagram& d, ExportFormat format) {
    if (!d.valid()) throw InvalidInput("export: invalid diagram: " + d.validate().summary());
    switch (format) {
        case ExportFormat::pd: return export_pd_text(d);
        case ExportFormat::json: return export_json_text(d);
        case ExportFormat::gauss: return export_gauss_text(d);
        case ExportFormat::dt: return export_dt_text(d);
    }
    throw InvalidInput("export: unknown format");
}

namespace {

// Infer per-edge stored-direction flags from sequentially numbered PD tuples:
// along each strand orbit, consecutive edges must carry consecutive labels
// (cyclically within the component's label range).
std::vector<int> infer_orientation(const std::vector<std::array<EdgeId, 4>>& tuples) {
    const int n_edges = static_cast<int>(tuples.size()) * 2;
    std::map<EdgeId, std::vector<EndRef>> occ;
    for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    for (EdgeId e = 1; e <= n_edges; ++e)
        if (occ[e].size() != 2)
            throw InvalidInput("pd: edge " + std::to_string(e) + " does not appear exactly twice");

    // Strand orbits of the underlying map (slot <-> slot+2 pairing).
    std::vector<char> seen(static_cast<std::size_t>(n_edges) + 1, 0);
    std::vector<int> orient(static_cast<std::size_t>(n_edges), 0);
    for (EdgeId start = 1; start <= n_edges; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // Collect the orbit walking "occurrence 0 -> opposite slot" style.
        std::vector<EdgeId> cyc;
        std::vector<int> end_used;  // which occurrence (0/1) we exited through
        EdgeId e = start;
        int exit_end = 1;  // treat occurrence 1 as the head for the walk
        do {
            cyc.push_back(e);
            seen[static_cast<std::size_t>(e)] = 1;
            EndRef at = occ[e][static_cast<std::size_t>(exit_end)];
            end_used.push_back(exit_end);
            int opp = (at.slot + 2) % 4;
            EdgeId f = tuples[static_cast<std::size_t>(at.crossing)][static_cast<std::size_t>(opp)];
            // Enter f at the occurrence matching (crossing, opp); exit the other.
            int ent = (occ[f][0] == EndRef{at.crossing, opp}) ? 0 : 1;
            e = f;
            exit_end = 1 - ent;
        } while (e != start);

        // The walk direction either follows ascending labels or descending;
        // labels are cyclic within the component.
        EdgeId lo = *std::min_element(cyc.begin(), cyc.end());
        EdgeId hi = *std::max_element(cyc.begin(), cyc.end());
        int len = static_cast<int>(cyc.size());
        if (hi - lo + 1 != len)
            throw InvalidInput("pd: component edge labels must be consecutive");
        auto succ = [&](EdgeId a) { return a == hi ? lo : a + 1; };
        bool ascending = true, descending = true;
        for (int i = 0; i < len; ++i) {
            EdgeId a = cyc[static_cast<std::size_t>(i)];
            EdgeId b = cyc[static_cast<std::size_t>((i + 1) % len)];
            if (succ(a) != b) ascending = false;
            if (succ(b) != a) descending = false;
        }
        if (!ascending && !descending)
            throw InvalidInput("pd: edge labels are not sequential along a strand");
        // Tiny components satisfy both readings; disambiguate against the
        // slot convention (slot 0 flows in, slot 2 flows out).
        auto consistent = [&](bool walk_is_flow) {
            for (int i = 0; i < len; ++i) {
                EdgeId a = cyc[static_cast<std::size_t>(i)];
                int head_occ = walk_is_flow ? end_used[static_cast<std::size_t>(i)]
                                            : 1 - end_used[static_cast<std::size_t>(i)];
                for (int o = 0; o < 2; ++o) {
                    const EndRef& at = occ[a][static_cast<std::size_t>(o)];
                    if (at.slot == 0 && o != head_occ) return false;
                    if (at.slot == 2 && o == head_occ) return false;
                }
            }
            return true;
        };
        bool walk_is_flow;
        if (ascending && descending)
            walk_is_flow = consistent(true) ? true : false;
        else
            walk_is_flow = ascending;
        for (int i = 0; i < len; ++i) {
            EdgeId a = cyc[static_cast<std::size_t>(i)];
            int head_occ = walk_is_flow ? end_used[static_cast<std::size_t>(i)]
                                        : 1 - end_used[static_cast<std::size_t>(i)];
            orient[static_cast<std::size_t>(a - 1)] = (head_occ == 1) ? 1 : -1;
        }
    }
    return orient;
}

} // namespace

Diagram parse_pd(const std::string& text) {
    std::vector<std::array<EdgeId, 4>> tuples;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    // Accept "PD[ X[a,b,c,d], ... ]" as well as a bare whitespace/line list
    // of 4-tuples "a b c d".
    if (text.compare(i, 3, "PD[") == 0 || text.compare(i, 3, "PD(") == 0) {
        while (i < text.size()) {
            std::size_t x = text.find('X', i);
            if (x == std::string::npos) break;
            std::size_t open = x + 1;
            if (open >= text.size() || (text[open] != '[' && text[open] != '(')) {
                i = x + 1;
                continue;
            }
            std::array<EdgeId, 4> t{};
            std::size_t p = open + 1;
            for (int k = 0; k < 4; ++k) {
                while (p < text.size() && !std::isdigit(static_cast<unsigned char>(text[p])))
                    ++p;
                if (p >= text.size()) throw InvalidInput("pd: truncated crossing tuple");
                EdgeId v = 0;
                while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
                    v = v * 10 + (text[p++] - '0');
                t[static_cast<std::size_t>(k)] = v;
            }
            tuples.push_back(t);
            i = p;
        }
    } else {
        std::istringstream is(text);
        std::vector<EdgeId> nums;
        EdgeId v;
        while (is >> v) nums.push_back(v);
        if (nums.empty() || nums.size() % 4 != 0)
            throw InvalidInput("pd: expected a multiple of 4 edge labels");
        for (std::size_t k = 0; k < nums.size(); k += 4)
            tuples.push_back({nums[k], nums[k + 1], nums[k + 2], nums[k + 3]});
    }
    if (tuples.empty()) throw InvalidInput("pd: no crossings found");
    return Diagram::from_crossings(tuples, infer_orientation(tuples));
}

Diagram parse_diagram_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw InvalidInput(std::string("json: parse error: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
        throw InvalidInput("json: expected an object with a \"crossings\" array");
    std::vector<std::array<EdgeId, 4>> tuples;
    for (const auto& row : j["crossings"]) {
        if (!row.is_array() || row.size() != 4)
            throw InvalidInput("json: each crossing must be a 4-tuple");
        tuples.push_back({row[0].get<EdgeId>(), row[1].get<EdgeId>(), row[2].get<EdgeId>(),
                          row[3].get<EdgeId>()});
    }
    std::vector<int> orient;
    if (j.contains("orientation")) {
        for (const auto& v : j["orientation"]) orient.push_back(v.get<int>());
    } else {
        orient = infer_orientation(tuples);  // sequential labels fallback
    }
    return Diagram::from_crossings(tuples, orient);
}

Diagram parse_diagram(const std::string& text, ExportFormat format) {
    switch (format) {
        case ExportFormat::pd: return parse_pd(text);
        case ExportFormat::json: return parse_diagram_json(text);
        default: throw InvalidInput("parse: only pd and json inputs are supported");
    }
}

} // namespace knotforge
