#pragma once

#include "knotforge/construct.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace knotforge {

/// One chosen edge per connected component of a GrayGraph.
struct EdgeSelection {
    std::vector<int> edge_per_component;  ///< global edge indices, by component id
};

struct GrayComponent {
    std::vector<int> vertices;
    std::vector<int> edges;  ///< indices into GrayGraph::edges
    std::string origin;
};

namespace census {

/// Union-find partition of a GrayGraph, with per-component vertex/edge lists.
std::vector<GrayComponent> components(const GrayGraph& g);

/// Lexicographic stream of edge selections; the visitor may return false to
/// stop early. Returns the total number of selections enumerated.
/// Throws if some component has no edge to choose.
std::uint64_t enumerate_selections(const GrayGraph& g,
                                   const std::function<bool(const EdgeSelection&)>& visit);

/// Number of selections without materializing them (product rule).
std::uint64_t count_selections(const GrayGraph& g);

/// |A_n| for the graph of the construction; asserted equal to 2^(2n-1).
std::uint64_t count_surfaces(int n, const TileCatalog& cat);

} // namespace census

} // namespace knotforge
