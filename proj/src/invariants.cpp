#include "knotforge/invariants.hpp"

#include "knotforge/util.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knotforge {

namespace {

// Seifert smoothing successor: an edge arriving at a crossing continues into
// the outgoing edge on the same side of the crossing. Arrivals happen at
// slot 0 (under-in) and at over_in; the paired exits are the over-out and
// the under-out respectively.
EdgeId smooth_next(const Diagram& d, EdgeId e) {
    EndRef h = d.head(e);
    const Crossing& x = d.crossing(h.crossing);
    int out_slot;
    if (h.slot == 0)
        out_slot = 4 - x.over_in;  // over-out: 1 if over_in == 3, else 3
    else if (h.slot == x.over_in)
        out_slot = 2;
    else
        throw IntegrityError("seifert: arrival at a non-incoming slot");
    return x.e[static_cast<std::size_t>(out_slot)];
}

} // namespace

SeifertData seifert_circles(const Diagram& d) {
    if (!d.valid()) throw InvalidInput("seifert_circles: invalid diagram: " + d.validate().summary());
    SeifertData sd;
    sd.c = d.crossing_count();
    std::vector<int> circle_of(static_cast<std::size_t>(d.edge_count()) + 1, -1);
    for (EdgeId start = 1; start <= d.edge_count(); ++start) {
        if (circle_of[static_cast<std::size_t>(start)] != -1) continue;
        int id = static_cast<int>(sd.circles.size());
        sd.circles.emplace_back();
        EdgeId e = start;
        do {
            circle_of[static_cast<std::size_t>(e)] = id;
            sd.circles.back().push_back(e);
            e = smooth_next(d, e);
        } while (e != start);
    }
    sd.s = static_cast<int>(sd.circles.size());
    sd.chi = sd.s - sd.c;
    return sd;
}

int genus(const Diagram& d) {
    if (d.components().count != 1)
        throw InvalidInput("genus: diagram is a link, not a knot");
    SeifertData sd = seifert_circles(d);
    if ((1 - sd.chi) % 2 != 0)
        throw IntegrityError("genus: chi has the wrong parity for a knot");
    return (1 - sd.chi) / 2;
}

bool is_alternating(const Diagram& d) {
    if (!d.valid()) throw InvalidInput("is_alternating: invalid diagram");
    std::vector<char> seen(static_cast<std::size_t>(d.edge_count()) + 1, 0);
    for (EdgeId start = 1; start <= d.edge_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        EdgeId e = start;
        int prev = -1, first = -1;
        do {
            seen[static_cast<std::size_t>(e)] = 1;
            int under = d.head(e).slot == 0 ? 1 : 0;
            if (first == -1) first = under;
            else if (under == prev) return false;
            prev = under;
            e = d.strand_next(e);
        } while (e != start);
        if (prev == first) return false;  // cyclic closure must alternate too
    }
    return true;
}

bool is_reduced(const Diagram& d) {
    FaceSet fs = d.faces();
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& cf = fs.corner_face[static_cast<std::size_t>(c)];
        if (cf[0] == cf[2] || cf[1] == cf[3]) return false;
    }
    return true;
}

bool is_special(const Diagram& d) {
    SeifertData sd = seifert_circles(d);
    FaceSet fs = d.faces();

    // Regions of the smoothed diagram: faces of the original map, merged at
    // each crossing across the corners the smoothing joins.
    UnionFind regions(static_cast<std::size_t>(fs.count()));
    for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossing(c);
        const auto& cf = fs.corner_face[static_cast<std::size_t>(c)];
        if (x.over_in == 3)
            regions.unite(cf[1], cf[3]);
        else
            regions.unite(cf[0], cf[2]);
    }

    std::vector<int> circle_of(static_cast<std::size_t>(d.edge_count()) + 1, -1);
    for (std::size_t i = 0; i < sd.circles.size(); ++i)
        for (EdgeId e : sd.circles[i]) circle_of[static_cast<std::size_t>(e)] = static_cast<int>(i);

    // Each circle borders one region on each side.
    std::vector<std::array<int, 2>> side(sd.circles.size(), {-1, -1});
    for (std::size_t i = 0; i < sd.circles.size(); ++i) {
        EdgeId e = sd.circles[i][0];
        side[i][0] = regions.find(fs.side_face[static_cast<std::size_t>(e)][0]);
        side[i][1] = regions.find(fs.side_face[static_cast<std::size_t>(e)][1]);
    }
    std::map<int, std::set<int>> adjacent;  // region -> circles touching it
    for (std::size_t i = 0; i < sd.circles.size(); ++i) {
        adjacent[side[i][0]].insert(static_cast<int>(i));
        adjacent[side[i][1]].insert(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < sd.circles.size(); ++i) {
        if (adjacent[side[i][0]].size() != 1 && adjacent[side[i][1]].size() != 1)
            return false;
    }
    return true;
}

bool diagram_prime(const Diagram& d) {
    if (!d.valid()) throw InvalidInput("diagram_prime: invalid diagram");
    if (!is_alternating(d))
        throw InvalidInput("diagram_prime: requires an alternating diagram");
    if (!is_reduced(d))
        throw InvalidInput("diagram_prime: diagram is not reduced (nugatory crossing present)");

    const int nc = d.crossing_count();
    const int ne = d.edge_count();
    if (nc == 1) return true;
    // Exhaustive 2-edge-cut search over the underlying 4-valent map.
    for (EdgeId e1 = 1; e1 <= ne; ++e1) {
        for (EdgeId e2 = e1 + 1; e2 <= ne; ++e2) {
            UnionFind uf(static_cast<std::size_t>(nc));
            for (EdgeId f = 1; f <= ne; ++f) {
                if (f == e1 || f == e2) continue;
                uf.unite(d.tail(f).crossing, d.head(f).crossing);
            }
            if (uf.set_count() > 1) return false;  // both sides contain crossings
        }
    }
    return true;
}

} // namespace knotforge
