#include "doctest.h"

#include "fixtures.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/util.hpp"

#include <sstream>

using namespace knotforge;

TEST_CASE("trefoil validates and has the expected shape") {
    Diagram d = fixtures::trefoil();
    CHECK(d.valid());
    CHECK(d.crossing_count() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.components().count == 1);
    for (const auto& x : d.crossings()) CHECK(x.sign == (x.over_in == 3 ? 1 : -1));
}

TEST_CASE("validation failures carry locations") {
    // edge 1 appears three times
    Diagram bad = Diagram::from_crossings({{1, 1, 1, 2}, {3, 2, 4, 4}},
                                          {1, 1, 1, 1});
    CHECK_FALSE(bad.valid());
    bool found = false;
    for (const auto& issue : bad.validate().issues)
        if (issue.code == "edge multiplicity") found = true;
    CHECK(found);

    Diagram empty = Diagram::from_crossings({}, {});
    CHECK_FALSE(empty.valid());
    CHECK(empty.validate().issues.front().code == "empty diagram unsupported");

    CHECK_THROWS_AS(empty.components(), InvalidInput);
}

TEST_CASE("component counts") {
    CHECK(fixtures::trefoil().components().count == 1);
    CHECK(fixtures::figure_eight().components().count == 1);
    CHECK(fixtures::hopf_link().components().count == 2);
    CHECK(fixtures::unknot_kink().components().count == 1);

    ComponentInfo info = fixtures::hopf_link().components();
    CHECK(info.label[1] == info.label[2]);
    CHECK(info.label[3] == info.label[4]);
    CHECK(info.label[1] != info.label[3]);
}

TEST_CASE("faces satisfy the Euler formula") {
    CHECK(fixtures::trefoil().faces().count() == 5);
    CHECK(fixtures::figure_eight().faces().count() == 6);
    CHECK(fixtures::hopf_link().faces().count() == 4);
    CHECK(fixtures::unknot_kink().faces().count() == 3);
}

TEST_CASE("gauss code of the trefoil alternates") {
    std::string g = export_diagram(fixtures::trefoil(), ExportFormat::gauss);
    CHECK(g == "U1 O2 U3 O1 U2 O3");
}

TEST_CASE("dt code of the trefoil") {
    std::string dt = export_diagram(fixtures::trefoil(), ExportFormat::dt);
    // three even integers; the standard trefoil gives 4 6 2 up to sign
    CHECK(dt.size() >= 5);
    std::istringstream is(dt);
    std::vector<int> vals;
    int v;
    while (is >> v) vals.push_back(v);
    REQUIRE(vals.size() == 3);
    for (int x : vals) CHECK(x % 2 == 0);
    std::vector<int> mags;
    for (int x : vals) mags.push_back(std::abs(x));
    CHECK(mags == std::vector<int>{4, 6, 2});
}

TEST_CASE("dt requires a knot") {
    CHECK_THROWS_AS(export_diagram(fixtures::hopf_link(), ExportFormat::dt), InvalidInput);
    CHECK_THROWS_AS(export_diagram(fixtures::hopf_link(), ExportFormat::gauss), InvalidInput);
}

TEST_CASE("pd and json round-trips are isomorphic") {
    auto roundtrip_ok = [](const Diagram& d) {
        Diagram via_pd = parse_pd(export_diagram(d, ExportFormat::pd));
        Diagram via_json = parse_diagram_json(export_diagram(d, ExportFormat::json));
        return Diagram::isomorphic(d, via_pd) && Diagram::isomorphic(d, via_json);
    };
    CHECK(roundtrip_ok(fixtures::trefoil()));
    CHECK(roundtrip_ok(fixtures::figure_eight()));
    CHECK(roundtrip_ok(fixtures::unknot_kink()));
    // json keeps explicit orientation, so links round-trip too
    Diagram hopf = fixtures::hopf_link();
    CHECK(Diagram::isomorphic(hopf, parse_diagram_json(export_diagram(hopf, ExportFormat::json))));
}

TEST_CASE("isomorphism is invariant under relabeling") {
    Diagram d = fixtures::figure_eight();
    for (int shift : {1, 3, 5})
        CHECK(Diagram::isomorphic(d, fixtures::shifted_relabel(d, shift)));
    CHECK_FALSE(Diagram::isomorphic(fixtures::trefoil(), fixtures::figure_eight()));
}

TEST_CASE("mirror swaps over and under") {
    Diagram d = fixtures::trefoil();
    Diagram m = d.mirrored();
    CHECK(m.valid());
    REQUIRE(m.crossing_count() == d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c)
        CHECK(m.crossing(c).sign == -d.crossing(c).sign);
    CHECK(Diagram::isomorphic(d, m.mirrored()));
}

TEST_CASE("disconnected maps are flagged") {
    // two disjoint kinks
    Diagram d = Diagram::from_crossings({{1, 1, 2, 2}, {3, 3, 4, 4}}, {-1, 1, -1, 1});
    CHECK_FALSE(d.valid());
    bool found = false;
    for (const auto& issue : d.validate().issues)
        if (issue.code == "disconnected") found = true;
    CHECK(found);
}

TEST_CASE("parse_pd rejects malformed input") {
    CHECK_THROWS_AS(parse_pd("PD[]"), InvalidInput);
    CHECK_THROWS_AS(parse_pd("1 2 3"), InvalidInput);
    CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,9]]"), InvalidInput);
    CHECK_THROWS_AS(parse_diagram_json("{\"nope\": 1}"), InvalidInput);
    CHECK_THROWS_AS(parse_diagram_json("not json at all"), InvalidInput);
}
