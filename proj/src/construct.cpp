#include "knotforge/construct.hpp"

#include "knotforge/sha256.hpp"
#include "knotforge/util.hpp"
#include "knotforge/tiles_embedded.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace knotforge {

using nlohmann::json;

std::string tile_kind_name(TileKind k) {
    switch (k) {
        case TileKind::fig1a: return "fig1a";
        case TileKind::fig1b: return "fig1b";
        case TileKind::fig2a: return "fig2a";
        case TileKind::fig2b: return "fig2b";
    }
    return "?";
}

const std::string& embedded_tile_json() {
    static const std::string s = tiles::kEmbeddedTileJson;
    return s;
}

const char* expected_tile_sha256() { return tiles::kExpectedTileSha256; }

namespace {

int ray_from_name(const std::string& s) {
    if (s == "NE") return 0;
    if (s == "NW") return 1;
    if (s == "SW") return 2;
    if (s == "SE") return 3;
    throw InvalidInput("tiles: unknown ray '" + s + "'");
}

TilePort port_from_name(const std::string& s, const std::vector<std::string>& holes,
                        bool has_outer) {
    auto dot = s.find('.');
    if (dot == std::string::npos) throw InvalidInput("tiles: bad port '" + s + "'");
    std::string where = s.substr(0, dot);
    int corner = ray_from_name(s.substr(dot + 1));
    if (where == "outer") {
        if (!has_outer) throw InvalidInput("tiles: tile has no outer boundary");
        return {-1, corner};
    }
    for (std::size_t h = 0; h < holes.size(); ++h)
        if (holes[h] == where) return {static_cast<int>(h), corner};
    throw InvalidInput("tiles: unknown hole '" + where + "'");
}

void validate_tile(const Tile& t) {
    const std::string name = tile_kind_name(t.kind);
    // Hole counts fixed by the catalog contract.
    static const std::map<TileKind, std::size_t> expected_holes = {
        {TileKind::fig1a, 2}, {TileKind::fig1b, 1}, {TileKind::fig2a, 1}, {TileKind::fig2b, 0}};
    if (t.hole_names.size() != expected_holes.at(t.kind))
        throw IntegrityError("tiles: " + name + " must have " +
                             std::to_string(expected_holes.at(t.kind)) + " holes");
    if (t.has_outer == (t.kind == TileKind::fig1a))
        throw IntegrityError("tiles: only fig1a lacks an outer boundary");

    // Every boundary (outer + each hole) carries each corner exactly once.
    std::map<std::pair<int, int>, int> port_use;
    for (const auto& s : t.strands) {
        ++port_use[{s.from.hole, s.from.corner}];
        ++port_use[{s.to.hole, s.to.corner}];
    }
    auto check_boundary = [&](int hole) {
        for (int corner = 0; corner < 4; ++corner) {
            auto it = port_use.find({hole, corner});
            if (it == port_use.end() || it->second != 1)
                throw IntegrityError("tiles: " + name + " boundary " + std::to_string(hole) +
                                     " corner " + std::to_string(corner) +
                                     " must be used exactly once");
        }
    };
    if (t.has_outer) check_boundary(-1);
    for (std::size_t h = 0; h < t.hole_names.size(); ++h) check_boundary(static_cast<int>(h));
    std::size_t expected_ports = (t.has_outer ? 4u : 0u) + 4u * t.hole_names.size();
    if (2 * t.strands.size() != expected_ports)
        throw IntegrityError("tiles: " + name + " strand endpoints do not match its ports");

    // Each crossing is passed exactly twice, once over and once under, on
    // complementary diagonal ray pairs.
    std::vector<std::vector<const TilePass*>> by_x(static_cast<std::size_t>(t.n_crossings));
    for (const auto& s : t.strands)
        for (const auto& p : s.passes) {
            if (p.x < 0 || p.x >= t.n_crossings)
                throw IntegrityError("tiles: " + name + " references crossing " +
                                     std::to_string(p.x));
            by_x[static_cast<std::size_t>(p.x)].push_back(&p);
        }
    for (int x = 0; x < t.n_crossings; ++x) {
        const auto& ps = by_x[static_cast<std::size_t>(x)];
        if (ps.size() != 2 || ps[0]->over == ps[1]->over)
            throw IntegrityError("tiles: " + name + " crossing " + std::to_string(x) +
                                 " needs one over and one under pass");
        std::set<int> rays;
        for (const auto* p : ps) {
            if ((p->ray_in + 2) % 4 != p->ray_out)
                throw IntegrityError("tiles: " + name + " crossing " + std::to_string(x) +
                                     " pass must run straight through");
            rays.insert(p->ray_in);
            rays.insert(p->ray_out);
        }
        if (rays.size() != 4)
            throw IntegrityError("tiles: " + name + " crossing " + std::to_string(x) +
                                 " passes must occupy all four rays");
    }

    // Gray fragments: fig1a and fig2a carry one two-vertex double edge.
    bool wants_gray = (t.kind == TileKind::fig1a || t.kind == TileKind::fig2a);
    if (wants_gray) {
        if (t.gray_vertices != 2 || t.gray_edges.size() != 2)
            throw IntegrityError("tiles: " + name + " gray fragment must be 2 vertices, 2 edges");
        for (auto [a, b] : t.gray_edges)
            if (!((a == 0 && b == 1) || (a == 1 && b == 0)))
                throw IntegrityError("tiles: " + name + " gray edges must join the two vertices");
    } else if (t.gray_vertices != 0 || !t.gray_edges.empty()) {
        throw IntegrityError("tiles: " + name + " must not carry a gray fragment");
    }
}

Tile parse_tile(TileKind kind, const json& j) {
    Tile t;
    t.kind = kind;
    t.has_outer = j.at("outer_ports").get<bool>();
    for (const auto& h : j.at("holes")) t.hole_names.push_back(h.get<std::string>());
    t.n_crossings = j.at("crossings").get<int>();
    for (const auto& sj : j.at("strands")) {
        TileStrand s;
        s.from = port_from_name(sj.at("from").get<std::string>(), t.hole_names, t.has_outer);
        s.to = port_from_name(sj.at("to").get<std::string>(), t.hole_names, t.has_outer);
        for (const auto& pj : sj.at("passes")) {
            TilePass p;
            p.x = pj.at("x").get<int>();
            p.over = pj.at("over").get<bool>();
            p.ray_in = ray_from_name(pj.at("in").get<std::string>());
            p.ray_out = ray_from_name(pj.at("out").get<std::string>());
            s.passes.push_back(p);
        }
        t.strands.push_back(std::move(s));
    }
    const auto& gj = j.at("gray");
    t.gray_vertices = gj.at("vertices").get<int>();
    for (const auto& ej : gj.at("edges"))
        t.gray_edges.emplace_back(ej[0].get<int>(), ej[1].get<int>());
    validate_tile(t);
    return t;
}

} // namespace

TileCatalog load_tile_catalog(const std::string& json_text) {
    std::string hash = sha256_hex(json_text);
    if (hash != expected_tile_sha256())
        throw IntegrityError("tile file hash mismatch: got " + hash + ", expected " +
                             expected_tile_sha256());
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& ex) {
        throw IntegrityError(std::string("tile file: parse error: ") + ex.what());
    }
    if (j.value("format", "") != "knotforge-tiles")
        throw IntegrityError("tile file: unexpected format tag");
    TileCatalog cat;
    cat.source_sha256 = hash;
    const auto& tiles = j.at("tiles");
    cat.tiles[0] = parse_tile(TileKind::fig1a, tiles.at("fig1a"));
    cat.tiles[1] = parse_tile(TileKind::fig1b, tiles.at("fig1b"));
    cat.tiles[2] = parse_tile(TileKind::fig2a, tiles.at("fig2a"));
    cat.tiles[3] = parse_tile(TileKind::fig2b, tiles.at("fig2b"));
    return cat;
}

TileCatalog tile_catalog(const std::optional<std::string>& path) {
    std::optional<std::string> file = path;
    if (!file) {
        if (const char* env = std::getenv("KNOTFORGE_TILE_FILE"); env && *env)
            file = std::string(env);
    }
    if (!file) return load_tile_catalog(embedded_tile_json());
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw IntegrityError("tile file: cannot open " + *file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_tile_catalog(ss.str());
}

ConstructionPlan plan(int n) {
    if (n < 1) throw InvalidInput("plan: n must be >= 1");
    ConstructionPlan p;
    p.n = n;
    using Side = PlanStep::Side;
    p.steps.push_back({Side::right, TileKind::fig1b});
    for (int m = 1; m <= n - 1; ++m) {
        p.steps.push_back({Side::left, TileKind::fig2a});
        p.steps.push_back({Side::right, TileKind::fig2a});
        for (int i = 0; i < 2 * m; ++i) p.steps.push_back({Side::left, TileKind::fig1b});
        for (int i = 0; i < 2 * m + 1; ++i) p.steps.push_back({Side::right, TileKind::fig1b});
    }
    p.steps.push_back({Side::left, TileKind::fig2b});
    p.steps.push_back({Side::right, TileKind::fig2b});
    return p;
}

std::map<TileKind, int> ConstructionPlan::tile_counts() const {
    std::map<TileKind, int> counts = {{TileKind::fig1a, 1},
                                      {TileKind::fig1b, 0},
                                      {TileKind::fig2a, 0},
                                      {TileKind::fig2b, 0}};
    for (const auto& s : steps) ++counts[s.tile];
    return counts;
}

int ConstructionPlan::crossing_count(const TileCatalog& cat) const {
    int total = 0;
    for (const auto& [kind, count] : tile_counts()) total += count * cat.get(kind).n_crossings;
    return total;
}

namespace {

struct Instance {
    TileKind kind;
    int first_crossing = 0;  // global id of the tile's crossing 0
    // canonical host port for the outer boundary of this instance
    int host_instance = -1;
    int host_hole = -1;
};

struct Assembly {
    const TileCatalog* cat;
    std::vector<Instance> instances;
    int n_crossings = 0;

    // cursor per chain: (instance, hole) still open
    struct Cursor {
        int instance = -1;
        int hole = -1;
        bool open() const { return instance >= 0; }
    };

    int add_instance(TileKind kind, int host_inst, int host_hole) {
        Instance inst;
        inst.kind = kind;
        inst.first_crossing = n_crossings;
        inst.host_instance = host_inst;
        inst.host_hole = host_hole;
        n_crossings += cat->get(kind).n_crossings;
        instances.push_back(inst);
        return static_cast<int>(instances.size()) - 1;
    }
};

Assembly assemble(const ConstructionPlan& p, const TileCatalog& cat) {
    Assembly a;
    a.cat = &cat;
    a.add_instance(TileKind::fig1a, -1, -1);
    Assembly::Cursor left{0, 0};   // fig1a hole "left"
    Assembly::Cursor right{0, 1};  // fig1a hole "right"
    int step_index = 0;
    for (const auto& step : p.steps) {
        Assembly::Cursor& cur = (step.side == PlanStep::Side::left) ? left : right;
        if (!cur.open())
            throw IntegrityError("assembly: step " + std::to_string(step_index) +
                                 " fills an already closed chain");
        int child = a.add_instance(step.tile, cur.instance, cur.hole);
        const Tile& t = cat.get(step.tile);
        if (t.hole_names.empty())
            cur = {};  // cap
        else
            cur = {child, 0};
        ++step_index;
    }
    if (left.open() || right.open())
        throw IntegrityError("assembly: open holes remain after the final step");
    return a;
}

// A strand endpoint: (instance, strand, which end).
struct StrandEnd {
    int instance;
    int strand;
    bool at_from;
};

// Canonical port key: (host instance, hole index, corner).
struct PortKey {
    int instance, hole, corner;
    bool operator<(const PortKey& o) const {
        return std::tie(instance, hole, corner) < std::tie(o.instance, o.hole, o.corner);
    }
};

struct GlobalPass {
    int crossing;
    bool over;
    int ray_in, ray_out;
};

// Closed strands of the assembled diagram, as sequences of crossing passes.
std::vector<std::vector<GlobalPass>> stitch(const Assembly& a) {
    const TileCatalog& cat = *a.cat;

    std::map<PortKey, std::vector<StrandEnd>> ports;
    auto canonical = [&](int inst, TilePort p) -> PortKey {
        if (p.hole >= 0) return {inst, p.hole, p.corner};
        const Instance& i = a.instances[static_cast<std::size_t>(inst)];
        if (i.host_instance < 0)
            throw IntegrityError("assembly: outer port on the root tile");
        return {i.host_instance, i.host_hole, p.corner};
    };
    for (int inst = 0; inst < static_cast<int>(a.instances.size()); ++inst) {
        const Tile& t = cat.get(a.instances[static_cast<std::size_t>(inst)].kind);
        for (int s = 0; s < static_cast<int>(t.strands.size()); ++s) {
            ports[canonical(inst, t.strands[static_cast<std::size_t>(s)].from)].push_back(
                {inst, s, true});
            ports[canonical(inst, t.strands[static_cast<std::size_t>(s)].to)].push_back(
                {inst, s, false});
        }
    }
    for (const auto& [key, ends] : ports)
        if (ends.size() != 2)
            throw IntegrityError("assembly: port (" + std::to_string(key.instance) + "," +
                                 std::to_string(key.hole) + "," + std::to_string(key.corner) +
                                 ") has " + std::to_string(ends.size()) + " strand ends");

    // Walk: strand ends pair up across ports; traversing a strand backward
    // reverses its pass list and swaps each pass's rays.
    auto strand_ref = [&](int inst, int s) -> const TileStrand& {
        return cat.get(a.instances[static_cast<std::size_t>(inst)].kind)
            .strands[static_cast<std::size_t>(s)];
    };
    auto other_end = [&](const PortKey& key, const StrandEnd& self) -> const StrandEnd& {
        const auto& ends = ports.at(key);
        bool same0 = ends[0].instance == self.instance && ends[0].strand == self.strand &&
                     ends[0].at_from == self.at_from;
        return same0 ? ends[1] : ends[0];
    };

    std::set<std::pair<int, int>> visited;
    std::vector<std::vector<GlobalPass>> circles;
    for (int inst = 0; inst < static_cast<int>(a.instances.size()); ++inst) {
        const Tile& t = cat.get(a.instances[static_cast<std::size_t>(inst)].kind);
        for (int s0 = 0; s0 < static_cast<int>(t.strands.size()); ++s0) {
            if (visited.count({inst, s0})) continue;
            std::vector<GlobalPass> circle;
            int ci = inst, cs = s0;
            bool forward = true;
            do {
                visited.insert({ci, cs});
                const TileStrand& st = strand_ref(ci, cs);
                int base = a.instances[static_cast<std::size_t>(ci)].first_crossing;
                if (forward) {
                    for (const auto& p : st.passes)
                        circle.push_back({base + p.x, p.over, p.ray_in, p.ray_out});
                } else {
                    for (auto it = st.passes.rbegin(); it != st.passes.rend(); ++it)
                        circle.push_back({base + it->x, it->over, it->ray_out, it->ray_in});
                }
                // continue through the port at the end we arrive at
                TilePort exit_port = forward ? st.to : st.from;
                PortKey key = canonical(ci, exit_port);
                StrandEnd next = other_end(key, {ci, cs, !forward});
                ci = next.instance;
                cs = next.strand;
                forward = next.at_from;
            } while (!(ci == inst && cs == s0));
            if (circle.empty())
                throw IntegrityError("assembly: crossing-free component cannot be encoded");
            circles.push_back(std::move(circle));
        }
    }
    return circles;
}

Diagram diagram_from_circles(const std::vector<std::vector<GlobalPass>>& circles,
                             int n_crossings) {
    struct SlotInfo {
        EdgeId edge = 0;
        bool incoming = false;
        bool used = false;
    };
    std::vector<std::array<SlotInfo, 4>> slots(static_cast<std::size_t>(n_crossings));
    std::vector<int> under_in_ray(static_cast<std::size_t>(n_crossings), -1);

    EdgeId next_edge = 1;
    for (const auto& circle : circles) {
        EdgeId first = next_edge;
        for (std::size_t i = 0; i < circle.size(); ++i) {
            const GlobalPass& p = circle[i];
            EdgeId in_edge = next_edge + static_cast<EdgeId>(i) - 1;
            if (i == 0) in_edge = first + static_cast<EdgeId>(circle.size()) - 1;
            EdgeId out_edge = first + static_cast<EdgeId>(i);
            auto& in_slot = slots[static_cast<std::size_t>(p.crossing)]
                                 [static_cast<std::size_t>(p.ray_in)];
            auto& out_slot = slots[static_cast<std::size_t>(p.crossing)]
                                  [static_cast<std::size_t>(p.ray_out)];
            if (in_slot.used || out_slot.used)
                throw IntegrityError("assembly: crossing ray used twice");
            in_slot = {in_edge, true, true};
            out_slot = {out_edge, false, true};
            if (!p.over) under_in_ray[static_cast<std::size_t>(p.crossing)] = p.ray_in;
        }
        next_edge += static_cast<EdgeId>(circle.size());
    }
    const int n_edges = next_edge - 1;

    std::vector<std::array<EdgeId, 4>> tuples(static_cast<std::size_t>(n_crossings));
    // occurrence scan for the orientation flags
    std::vector<std::array<bool, 4>> slot_incoming(static_cast<std::size_t>(n_crossings));
    for (int c = 0; c < n_crossings; ++c) {
        int u = under_in_ray[static_cast<std::size_t>(c)];
        if (u < 0) throw IntegrityError("assembly: crossing with no under pass");
        for (int j = 0; j < 4; ++j) {
            const auto& si = slots[static_cast<std::size_t>(c)][static_cast<std::size_t>((u + j) % 4)];
            if (!si.used) throw IntegrityError("assembly: crossing ray left empty");
            tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = si.edge;
            slot_incoming[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = si.incoming;
        }
    }

    std::vector<int> orientation(static_cast<std::size_t>(n_edges), 0);
    std::vector<char> seen_once(static_cast<std::size_t>(n_edges) + 1, 0);
    for (int c = 0; c < n_crossings; ++c)
        for (int j = 0; j < 4; ++j) {
            EdgeId e = tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
            bool incoming = slot_incoming[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
            if (!seen_once[static_cast<std::size_t>(e)]) {
                seen_once[static_cast<std::size_t>(e)] = 1;
                // +1 when the first occurrence is the tail (outgoing)
                orientation[static_cast<std::size_t>(e - 1)] = incoming ? -1 : 1;
            }
        }

    return Diagram::from_crossings(tuples, orientation);
}

} // namespace

BuildResult build_link(int n, const TileCatalog& cat) {
    ConstructionPlan p = plan(n);
    Assembly a = assemble(p, cat);
    std::vector<std::vector<GlobalPass>> circles;
    try {
        circles = stitch(a);
    } catch (const IntegrityError& ex) {
        throw IntegrityError("build_link(" + std::to_string(n) + "): " + ex.what());
    }
    Diagram d = diagram_from_circles(circles, a.n_crossings);
    if (!d.valid())
        throw IntegrityError("build_link(" + std::to_string(n) +
                             "): assembled diagram invalid: " + d.validate().summary());
    BuildResult res{std::move(d), {}};
    res.seifert = seifert_circles(res.diagram);
    return res;
}

GrayGraph build_graph(int n, const TileCatalog& cat) {
    ConstructionPlan p = plan(n);
    Assembly a = assemble(p, cat);
    GrayGraph g;
    for (std::size_t inst = 0; inst < a.instances.size(); ++inst) {
        const Tile& t = cat.get(a.instances[inst].kind);
        if (t.gray_vertices == 0) continue;
        int base = g.n_vertices;
        std::string origin = tile_kind_name(t.kind) + "#" + std::to_string(inst);
        for (int v = 0; v < t.gray_vertices; ++v) g.vertex_origin.push_back(origin);
        g.n_vertices += t.gray_vertices;
        for (auto [u, v] : t.gray_edges) g.edges.emplace_back(base + u, base + v);
    }
    return g;
}

} // namespace knotforge
