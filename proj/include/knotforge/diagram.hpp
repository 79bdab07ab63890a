#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace knotforge {

// Edges are 1-based; crossings and slots 0-based. Slots at a crossing are in
// counterclockwise order with slot 0 the incoming understrand, so slot 2 is
// the outgoing understrand and the overstrand occupies slots 1 and 3.
using EdgeId = int;

struct EndRef {
    int crossing = -1;
    int slot = -1;
    bool operator==(const EndRef& o) const { return crossing == o.crossing && slot == o.slot; }
};

struct Crossing {
    std::array<EdgeId, 4> e{};
    int over_in = 0;  ///< 1 or 3: slot where the overstrand enters
    int sign = 0;     ///< +1 iff over_in == 3
};

struct ValidationIssue {
    std::string code;    // stable identifier, e.g. "edge multiplicity"
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

struct ComponentInfo {
    int count = 0;
    std::vector<int> label;  ///< per edge (1-based), component ids 0..count-1
};

/// A directed edge: forward means tail -> head.
struct DirEdge {
    EdgeId edge = 0;
    bool forward = true;
    bool operator==(const DirEdge& o) const = default;
};

struct FaceSet {
    std::vector<std::vector<DirEdge>> faces;
    /// face id at each (crossing, corner); corner k lies between slots k and k+1
    std::vector<std::array<int, 4>> corner_face;
    /// face on the left of each directed edge: [edge][forward?0:1]
    std::vector<std::array<int, 2>> side_face;
    int count() const { return static_cast<int>(faces.size()); }
};

/// Oriented link diagram as a combinatorial map in PD convention.
///
/// Immutable once built. Construction does not throw on semantic errors;
/// call validate() to get the report, and valid() before using operations
/// that require a well-formed diagram.
class Diagram {
public:
    Diagram() = default;

    /// Build from PD tuples plus a per-edge direction flag. orientation[e-1]
    /// is +1 if edge e flows from its first occurrence (scanning crossings
    /// in order, slots 0..3) to its second, -1 for the opposite direction.
    static Diagram from_crossings(const std::vector<std::array<EdgeId, 4>>& tuples,
                                  const std::vector<int>& orientation);

    int crossing_count() const { return static_cast<int>(xs_.size()); }
    int edge_count() const { return n_edges_; }
    const std::vector<Crossing>& crossings() const { return xs_; }
    const Crossing& crossing(int c) const { return xs_[static_cast<std::size_t>(c)]; }

    EndRef tail(EdgeId e) const { return tail_[static_cast<std::size_t>(e)]; }
    EndRef head(EdgeId e) const { return head_[static_cast<std::size_t>(e)]; }

    ValidationReport validate() const { return report_; }
    bool valid() const { return report_.ok(); }

    /// Orbits of the strand-following permutation; labels partition edges.
    ComponentInfo components() const;

    /// Complementary regions of the map; checks V - E + F = 2.
    FaceSet faces() const;

    /// Same diagram with every crossing switched.
    Diagram mirrored() const;

    /// Next edge along the strand after e (through the crossing at its head).
    EdgeId strand_next(EdgeId e) const;

    /// The per-edge orientation flags in the external JSON convention.
    std::vector<int> orientation_flags() const;

    /// Equality up to relabeling of crossings and edges.
    static bool isomorphic(const Diagram& a, const Diagram& b);

private:
    void analyze();  // fills tail_/head_/over_in/sign and report_
    std::string canonical_code() const;

    std::vector<std::array<EdgeId, 4>> tuples_;
    std::vector<int> orientation_;
    int n_edges_ = 0;

    std::vector<Crossing> xs_;
    std::vector<EndRef> tail_, head_;  // 1-based by edge
    ValidationReport report_;
};

// --- serialization (diagram_io.cpp) ---

enum class ExportFormat { pd, gauss, dt, json };

std::optional<ExportFormat> parse_format(const std::string& name);

/// Export in the named format. gauss and dt require a knot.
std::string export_diagram(const Diagram& d, ExportFormat format);

/// Parse "PD[X[a,b,c,d],...]" (edge labels numbered along each component).
Diagram parse_pd(const std::string& text);

/// Parse the JSON schema {"crossings": [[a,b,c,d],...], "orientation": [...]}.
Diagram parse_diagram_json(const std::string& text);

Diagram parse_diagram(const std::string& text, ExportFormat format);

} // namespace knotforge
