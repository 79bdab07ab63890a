#pragma once

#include "knotforge/diagram.hpp"

#include <vector>

namespace knotforge {

/// Seifert-circle decomposition of an oriented diagram.
struct SeifertData {
    std::vector<std::vector<EdgeId>> circles;  ///< partition of edges
    int s = 0;    ///< circle count
    int c = 0;    ///< crossing count
    int chi = 0;  ///< s - c, Euler characteristic of the Seifert-algorithm surface
};

SeifertData seifert_circles(const Diagram& d);

/// (1 - chi) / 2 for a knot diagram; rejects links.
int genus(const Diagram& d);

/// Crossing visits strictly alternate over/under along every component.
bool is_alternating(const Diagram& d);

/// Every Seifert circle bounds a disc free of the other circles; tested on
/// the combinatorial map by contracting the smoothed diagram's regions.
bool is_special(const Diagram& d);

/// No nugatory crossing: no face meets a crossing in two opposite corners.
bool is_reduced(const Diagram& d);

/// No pair of distinct edges disconnects the underlying 4-valent map.
/// Requires a connected, alternating, reduced diagram; throws otherwise.
bool diagram_prime(const Diagram& d);

} // namespace knotforge
