#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"

#include <vector>

namespace knotforge {

/// Wirtinger presentation data: one generator per overstrand arc, one
/// relation per crossing.
struct WirtingerData {
    int arc_count = 0;
    std::vector<int> arc_of_edge;  ///< per edge (1-based), arc ids 0..arc_count-1
    struct Relation {
        int over = 0;   ///< arc of the overstrand
        int in = 0;     ///< arc entering under
        int out = 0;    ///< arc leaving under
        int sign = 0;   ///< crossing sign
    };
    std::vector<Relation> relations;
};

/// Requires a knot diagram with at least one crossing.
WirtingerData wirtinger(const Diagram& d);

/// Alexander polynomial via Fox derivatives of the Wirtinger presentation,
/// one generator and one relation deleted, exact determinant over the
/// integer Laurent ring. Normalized per LaurentPoly::normalized().
LaurentPoly alexander_poly(const Diagram& d);

/// |det G| for the Goeritz matrix of the checkerboard color class not
/// containing the designated outer face.
Integer goeritz_determinant(const Diagram& d);

/// Knot determinant, computed as |Delta(-1)| and via the Goeritz matrix;
/// the two routes are asserted equal.
Integer determinant(const Diagram& d);

} // namespace knotforge
