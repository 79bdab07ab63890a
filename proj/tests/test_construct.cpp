#include "doctest.h"

#include "fixtures.hpp"
#include "knotforge/census.hpp"
#include "knotforge/construct.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/sha256.hpp"
#include "knotforge/util.hpp"

using namespace knotforge;

TEST_CASE("tile catalog loads, validates, and is hash-guarded") {
    const TileCatalog& cat = fixtures::catalog();
    CHECK(cat.get(TileKind::fig1a).hole_names.size() == 2);
    CHECK(cat.get(TileKind::fig1b).hole_names.size() == 1);
    CHECK(cat.get(TileKind::fig2a).hole_names.size() == 1);
    CHECK(cat.get(TileKind::fig2b).hole_names.size() == 0);
    CHECK(cat.get(TileKind::fig2a).gray_vertices == 2);
    CHECK(cat.get(TileKind::fig2a).gray_edges.size() == 2);
    CHECK(cat.get(TileKind::fig1b).gray_vertices == 0);
    CHECK(cat.source_sha256 == expected_tile_sha256());

    std::string tampered = embedded_tile_json();
    tampered.insert(tampered.find("fig1a"), " ");
    CHECK_THROWS_AS(load_tile_catalog(tampered), IntegrityError);
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(embedded_tile_json()) == expected_tile_sha256());
}

TEST_CASE("plan tile counts") {
    ConstructionPlan p1 = plan(1);
    auto c1 = p1.tile_counts();
    CHECK(c1[TileKind::fig1a] == 1);
    CHECK(c1[TileKind::fig1b] == 1);
    CHECK(c1[TileKind::fig2a] == 0);
    CHECK(c1[TileKind::fig2b] == 2);

    auto c2 = plan(2).tile_counts();
    CHECK(c2[TileKind::fig1b] == 6);
    CHECK(c2[TileKind::fig2a] == 2);
    CHECK(c2[TileKind::fig2b] == 2);

    auto c3 = plan(3).tile_counts();
    CHECK(c3[TileKind::fig1b] == 15);

    CHECK_THROWS_AS(plan(0), InvalidInput);

    // closed form: 1 fig1a + 2(n-1) fig2a + (1 + sum 4m+1) fig1b + 2 caps
    for (int n = 1; n <= 12; ++n) {
        auto c = plan(n).tile_counts();
        int fig1b = 1;
        for (int m = 1; m <= n - 1; ++m) fig1b += 4 * m + 1;
        CHECK(c[TileKind::fig1a] == 1);
        CHECK(c[TileKind::fig2a] == 2 * (n - 1));
        CHECK(c[TileKind::fig1b] == fig1b);
        CHECK(c[TileKind::fig2b] == 2);
    }
}

TEST_CASE("built links are knots with the expected Euler characteristic") {
    const TileCatalog& cat = fixtures::catalog();
    for (int n = 1; n <= 5; ++n) {
        BuildResult built = build_link(n, cat);
        INFO("n = ", n);
        CHECK(built.diagram.valid());
        CHECK(built.diagram.components().count == 1);
        CHECK(built.seifert.chi == 1 - 2 * n);
        CHECK(built.diagram.crossing_count() == plan(n).crossing_count(cat));
    }
    // parity induction pattern of the knot-ness proof: L_1, L_2 are knots
    // and L_{n+2} follows; the sweep above covers both chains.
    BuildResult l4 = build_link(4, cat);
    CHECK(l4.seifert.chi == -7);
}

TEST_CASE("assembly is deterministic") {
    const TileCatalog& cat = fixtures::catalog();
    std::string a = export_diagram(build_link(3, cat).diagram, ExportFormat::json);
    std::string b = export_diagram(build_link(3, cat).diagram, ExportFormat::json);
    CHECK(a == b);
}

TEST_CASE("gray graph structure") {
    const TileCatalog& cat = fixtures::catalog();
    GrayGraph g1 = build_graph(1, cat);
    CHECK(census::components(g1).size() == 1);

    GrayGraph g2 = build_graph(2, cat);
    CHECK(census::components(g2).size() == 3);

    GrayGraph g5 = build_graph(5, cat);
    auto comps = census::components(g5);
    CHECK(comps.size() == 9);
    CHECK(g5.n_vertices == 18);
    CHECK(g5.edges.size() == 18);
    for (const auto& c : comps) {
        CHECK(c.vertices.size() == 2);
        CHECK(c.edges.size() == 2);
        CHECK_FALSE(c.origin.empty());
    }
}

TEST_CASE("build_link properties match the larger invariant suite") {
    const TileCatalog& cat = fixtures::catalog();
    for (int n = 1; n <= 3; ++n) {
        BuildResult built = build_link(n, cat);
        CHECK(is_alternating(built.diagram));
        CHECK(is_special(built.diagram));
        CHECK(is_reduced(built.diagram));
        CHECK(diagram_prime(built.diagram));
        CHECK(genus(built.diagram) == n);
    }
}
