#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/invariants.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotforge {

enum class TileKind { fig1a, fig1b, fig2a, fig2b };

std::string tile_kind_name(TileKind k);

// Rays/corners use the slot encoding: 0=NE, 1=NW, 2=SW, 3=SE (counterclockwise).

struct TilePass {
    int x = 0;        ///< crossing index within the tile
    bool over = false;
    int ray_in = 0;   ///< ray along which the strand arrives at the crossing
    int ray_out = 0;
};

struct TilePort {
    int hole = -1;    ///< -1 for the tile's outer boundary, else hole index
    int corner = 0;
};

struct TileStrand {
    TilePort from, to;
    std::vector<TilePass> passes;
};

struct Tile {
    TileKind kind{};
    bool has_outer = false;
    std::vector<std::string> hole_names;
    int n_crossings = 0;
    std::vector<TileStrand> strands;
    int gray_vertices = 0;
    std::vector<std::pair<int, int>> gray_edges;
};

struct TileCatalog {
    std::array<Tile, 4> tiles;  // indexed by TileKind
    std::string source_sha256;
    const Tile& get(TileKind k) const { return tiles[static_cast<std::size_t>(k)]; }
};

/// The embedded tile data (exact bytes of data/tiles.json at build time).
const std::string& embedded_tile_json();
const char* expected_tile_sha256();

/// Parse and validate a tile catalog. Refuses content whose SHA-256 does not
/// match the built-in expected hash (guards silent edits of the tile file).
TileCatalog load_tile_catalog(const std::string& json_text);

/// Embedded catalog, or the given file / KNOTFORGE_TILE_FILE override.
TileCatalog tile_catalog(const std::optional<std::string>& path = std::nullopt);

/// One fill step of the construction: which chain, which tile.
struct PlanStep {
    enum class Side { left, right };
    Side side;
    TileKind tile;
};

struct ConstructionPlan {
    int n = 0;
    std::vector<PlanStep> steps;
    std::map<TileKind, int> tile_counts() const;
    int crossing_count(const TileCatalog& cat) const;
};

/// The nesting word realizing the construction for a given n >= 1.
ConstructionPlan plan(int n);

/// Plane multigraph carried by the construction; components indexed by
/// their originating tile instance.
struct GrayGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> vertex_origin;
};

struct BuildResult {
    Diagram diagram;
    SeifertData seifert;
};

BuildResult build_link(int n, const TileCatalog& cat);
GrayGraph build_graph(int n, const TileCatalog& cat);

} // namespace knotforge
