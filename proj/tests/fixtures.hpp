#pragma once

#include "knotforge/construct.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/util.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

using knotforge::Diagram;
using knotforge::EdgeId;
using knotforge::EndRef;

// Standard table diagrams, edge labels numbered along the strand.
inline Diagram trefoil() { return knotforge::parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"); }

inline Diagram figure_eight() {
    return knotforge::parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
}

inline Diagram hopf_link() { return knotforge::parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]"); }

inline Diagram unknot_kink() { return knotforge::parse_pd("PD[X[1,1,2,2]]"); }

// Rebuild a diagram from explicit tuples and per-edge tails; the stored
// direction flags are derived by the occurrence-scan convention.
inline Diagram make_diagram(const std::vector<std::array<EdgeId, 4>>& tuples,
                            const std::vector<EndRef>& tail_of) {
    int n_edges = static_cast<int>(tuples.size()) * 2;
    std::map<EdgeId, std::vector<EndRef>> occ;
    for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
        for (int s = 0; s < 4; ++s)
            occ[tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    std::vector<int> orient(static_cast<std::size_t>(n_edges), 1);
    for (EdgeId e = 1; e <= n_edges; ++e)
        orient[static_cast<std::size_t>(e - 1)] =
            (occ[e][0] == tail_of[static_cast<std::size_t>(e)]) ? 1 : -1;
    return Diagram::from_crossings(tuples, orient);
}

// Connected sum along edge a of d1 and edge b of d2 (both must be knots).
// The two splice edges form a 2-edge cut of the result by construction.
inline Diagram connect_sum(const Diagram& d1, EdgeId a, const Diagram& d2, EdgeId b) {
    int e1 = d1.edge_count();
    std::vector<std::array<EdgeId, 4>> tuples;
    std::vector<EndRef> tail_of(static_cast<std::size_t>(e1 + d2.edge_count()) + 1);
    for (const auto& x : d1.crossings()) tuples.push_back(x.e);
    for (const auto& x : d2.crossings()) {
        std::array<EdgeId, 4> t = x.e;
        for (auto& v : t) v += static_cast<EdgeId>(e1);
        tuples.push_back(t);
    }
    int c1 = d1.crossing_count();
    for (EdgeId e = 1; e <= e1; ++e) tail_of[static_cast<std::size_t>(e)] = d1.tail(e);
    for (EdgeId e = 1; e <= d2.edge_count(); ++e) {
        EndRef t = d2.tail(e);
        tail_of[static_cast<std::size_t>(e + e1)] = {t.crossing + c1, t.slot};
    }
    EdgeId b2 = b + static_cast<EdgeId>(e1);
    EndRef ha = d1.head(a);
    EndRef hb = d2.head(b);
    hb.crossing += c1;
    // splice: a now ends where b ended, and vice versa
    tuples[static_cast<std::size_t>(ha.crossing)][static_cast<std::size_t>(ha.slot)] = b2;
    tuples[static_cast<std::size_t>(hb.crossing)][static_cast<std::size_t>(hb.slot)] = a;
    return make_diagram(tuples, tail_of);
}

// Reidemeister-1 kink on edge e; positive picks the over_in == 3 crossing.
inline Diagram add_kink(const Diagram& d, EdgeId e, bool positive) {
    std::vector<std::array<EdgeId, 4>> tuples;
    std::vector<EndRef> tail_of(static_cast<std::size_t>(d.edge_count() + 2) + 1);
    for (const auto& x : d.crossings()) tuples.push_back(x.e);
    for (EdgeId f = 1; f <= d.edge_count(); ++f) tail_of[static_cast<std::size_t>(f)] = d.tail(f);

    int k = d.crossing_count();
    EdgeId f1 = static_cast<EdgeId>(d.edge_count() + 1);
    EdgeId f2 = static_cast<EdgeId>(d.edge_count() + 2);
    EndRef he = d.head(e);
    // e now flows into the kink; f2 continues to e's old head.
    if (positive)
        tuples.push_back({e, f2, f1, f1});
    else
        tuples.push_back({e, f1, f1, f2});
    tuples[static_cast<std::size_t>(he.crossing)][static_cast<std::size_t>(he.slot)] = f2;
    tail_of[static_cast<std::size_t>(f1)] = {k, 2};
    tail_of[static_cast<std::size_t>(f2)] = {k, positive ? 1 : 3};
    return make_diagram(tuples, tail_of);
}

// Relabel edges by an additive cyclic shift and permute crossing order;
// produces an isomorphic diagram with different labels.
inline Diagram shifted_relabel(const Diagram& d, int shift) {
    int n = d.edge_count();
    auto relab = [&](EdgeId e) { return static_cast<EdgeId>((e - 1 + shift) % n + 1); };
    std::vector<std::array<EdgeId, 4>> tuples;
    std::vector<EndRef> tail_of(static_cast<std::size_t>(n) + 1);
    int nc = d.crossing_count();
    for (int c = nc - 1; c >= 0; --c) {  // reversed crossing order
        std::array<EdgeId, 4> t = d.crossing(c).e;
        for (auto& v : t) v = relab(v);
        tuples.push_back(t);
    }
    for (EdgeId e = 1; e <= n; ++e) {
        EndRef t = d.tail(e);
        tail_of[static_cast<std::size_t>(relab(e))] = {nc - 1 - t.crossing, t.slot};
    }
    return make_diagram(tuples, tail_of);
}

inline const knotforge::TileCatalog& catalog() {
    static const knotforge::TileCatalog cat = knotforge::tile_catalog();
    return cat;
}

} // namespace fixtures
