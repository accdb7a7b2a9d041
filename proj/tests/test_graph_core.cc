#include "oracles.hh"

#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>
#include <slicegra/serialization.hh>

#include <doctest.h>

using namespace slicegra;

namespace
{
    auto named_c3() -> Graph
    {
        return Graph{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}};
    }

    auto p3_over_c3() -> SliceObject
    {
        return SliceObject::from_named(Graph{{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}},
            Graph{{"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}}}, {{"a", "0"}, {"b", "1"}, {"c", "2"}, {"d", "0"}});
    }
}

TEST_CASE("graph invariants")
{
    SUBCASE("loops are rejected")
    {
        CHECK_THROWS_AS(Graph({"u"}, {{"u", "u"}}), InvalidStructure);
    }
    SUBCASE("unknown endpoints are rejected")
    {
        CHECK_THROWS_AS(Graph({"u"}, {{"u", "w"}}), InvalidStructure);
    }
    SUBCASE("duplicate vertices are rejected")
    {
        CHECK_THROWS_AS(Graph({"u", "u"}, {}), InvalidStructure);
    }
    SUBCASE("edges have set semantics")
    {
        Graph g{{"u", "v"}, {{"u", "v"}, {"v", "u"}, {"u", "v"}}};
        CHECK(g.edge_count() == 1);
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(1, 0));
    }
    SUBCASE("vertices iterate lexicographically")
    {
        Graph g{{"z", "a", "m"}, {{"z", "a"}}};
        CHECK(g.vertex(0) == "a");
        CHECK(g.vertex(2) == "z");
        CHECK(g.index_of("m") == 1);
        CHECK_FALSE(g.index_of("q"));
    }
}

TEST_CASE("digraph isolated points and loops")
{
    Digraph d{{"u", "v", "w"}, {{"u", "u"}, {"u", "v"}, {"v", "u"}}};
    CHECK(d.arc_count() == 3);
    CHECK(d.has_loop(0));
    CHECK_FALSE(d.is_isolated(0));
    CHECK(d.is_isolated(2));
    CHECK(d.has_isolated_point());
    CHECK_FALSE(d.is_irreflexive());
    CHECK(d.arc_index(1, 0) == 2);
}

TEST_CASE("build_path")
{
    CHECK(build_path(0).size() == 1);
    CHECK(build_path(0).edge_count() == 0);
    CHECK(build_path(3).size() == 4);
    CHECK(build_path(3).edge_count() == 3);
    auto p12 = build_path(12);
    CHECK(p12.size() == 13);
    CHECK(p12.edge_count() == 12);
    CHECK(p12.adjacent(p12.require_index("v9"), p12.require_index("v10")));
}

TEST_CASE("build_cycle")
{
    CHECK(build_cycle(3).edge_count() == 3);
    CHECK(build_cycle(4).size() == 4);
    CHECK(build_cycle(4).edge_count() == 4);
    CHECK_THROWS_AS(build_cycle(2), InvalidStructure);
}

TEST_CASE("build_star")
{
    auto y = build_star(3);
    CHECK(y.size() == 4);
    CHECK(y.edge_count() == 3);
    int centres = 0;
    for (VertexIndex v = 0; v < y.size(); ++v)
        centres += y.degree(v) == 3;
    CHECK(centres == 1);
    CHECK(build_star(0).size() == 1);
    CHECK(build_star(1).edge_count() == 1);
}

TEST_CASE("disjoint_union")
{
    std::vector<Graph> two_paths{build_path(3), build_path(3)};
    auto u = disjoint_union(two_paths);
    CHECK(u.size() == 8);
    CHECK(u.edge_count() == 6);
    CHECK(u.index_of("1:v3"));

    CHECK(disjoint_union(std::vector<Graph>{}).size() == 0);

    std::vector<Graph> mixed{build_cycle(3), build_star(3)};
    auto m = disjoint_union(mixed);
    CHECK(m.size() == 7);
    CHECK(m.edge_count() == 6);
    CHECK(connected_components(m).size() == 2);
}

TEST_CASE("is_homomorphism")
{
    auto c3 = named_c3();
    SUBCASE("identity on C3")
    {
        CHECK(is_homomorphism(std::map<VertexId, VertexId>{{"a", "a"}, {"b", "b"}, {"c", "c"}}, c3, c3));
    }
    SUBCASE("constant map from K2 fails with the edge")
    {
        auto k2 = build_complete(2);
        auto r = is_homomorphism(std::map<VertexId, VertexId>{{"v0", "v0"}, {"v1", "v0"}}, k2, k2);
        CHECK_FALSE(r.holds);
        REQUIRE(r.violating_edge);
        CHECK(*r.violating_edge == NamedEdge{"v0", "v1"});
    }
    SUBCASE("gadget colouring P3 -> C3")
    {
        Graph p3{{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}};
        Graph base{{"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}}};
        CHECK(is_homomorphism(std::map<VertexId, VertexId>{{"a", "0"}, {"b", "1"}, {"c", "2"}, {"d", "0"}}, p3, base));
    }
    SUBCASE("partial or out-of-range maps are errors, not false")
    {
        CHECK_THROWS_AS(is_homomorphism(std::map<VertexId, VertexId>{{"a", "a"}}, c3, c3), InvalidMap);
        CHECK_THROWS_AS(
            is_homomorphism(std::map<VertexId, VertexId>{{"a", "a"}, {"b", "b"}, {"c", "x"}}, c3, c3), InvalidMap);
        std::vector<VertexIndex> wide{0, 1, 7};
        CHECK_THROWS_AS(is_homomorphism(wide, c3, c3), InvalidMap);
    }
}

TEST_CASE("morphism construction agrees with is_homomorphism")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        auto a = share(oracle::random_graph(rng, 1 + rng() % 4, 0.5));
        auto b = share(oracle::random_graph(rng, 1 + rng() % 4, 0.6));
        std::vector<VertexIndex> images(a->size());
        for (auto & x : images)
            x = rng() % b->size();
        if (is_homomorphism(images, *a, *b))
            CHECK_NOTHROW(Morphism(a, b, images));
        else
            CHECK_THROWS_AS(Morphism(a, b, images), NotAHomomorphism);
    }
}

TEST_CASE("slice objects and morphisms")
{
    auto x = p3_over_c3();
    CHECK(x.image().size() == 3);

    SUBCASE("commuting triangle is enforced")
    {
        auto shift = std::vector<VertexIndex>{1, 2, 3, 2};
        CHECK_THROWS_AS(SliceMorphism(x, x, Morphism(x.carrier_ptr(), x.carrier_ptr(), shift)), InvalidStructure);
        CHECK_NOTHROW(SliceMorphism::identity(x));
    }
    SUBCASE("different bases are a mismatch")
    {
        auto c4 = share(build_cycle(4));
        SliceObject y{Morphism::identity(c4)};
        CHECK_THROWS_AS(SliceMorphism(x, y, Morphism(x.carrier_ptr(), c4, {0, 1, 2, 3})), BaseMismatch);
    }
    SUBCASE("an invalid structure map is rejected")
    {
        CHECK_THROWS_AS(SliceObject::from_named(build_path(1), build_path(1), {{"v0", "v0"}, {"v1", "v0"}}), NotAHomomorphism);
    }
    SUBCASE("restriction keeps ids")
    {
        std::vector<VertexIndex> keep{1, 2};
        auto r = x.restrict_to(keep);
        CHECK(r.carrier().vertex(0) == "b");
        CHECK(r.base() == x.base());
        CHECK(r.base().vertex(r.colour(1)) == "2");
    }
}

TEST_CASE("components and distances")
{
    Graph g{{"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"d", "e"}}};
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<VertexIndex>{0, 1, 2});
    CHECK_FALSE(is_connected(g));
    std::vector<VertexIndex> src{0};
    auto dist = bfs_distances(g, src);
    CHECK(dist[2] == 2);
    CHECK(dist[3] == Bitset::npos);
}

TEST_CASE("serialization round trips")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        auto g = oracle::random_graph(rng, rng() % 7, 0.4);
        CHECK(graph_from_json(to_json(g)) == g);
        CHECK(parse_graph(dump(to_json(g))) == g);
        CHECK(graph_from_edge_list(to_edge_list(g)) == g);
        auto d = oracle::random_digraph(rng, 1 + rng() % 3, 0.5);
        CHECK(digraph_from_json(to_json(d)) == d);
        CHECK(digraph_from_edge_list(to_edge_list(d)) == d);

        auto base = share(build_path(3));
        auto carrier = share(oracle::random_graph(rng, 1 + rng() % 4, 0.5));
        for (auto & m : oracle::homs(*carrier, *base)) {
            SliceObject x{Morphism{carrier, base, m}};
            CHECK(slice_from_json(to_json(x)) == x);
            auto text = dump(to_json(x));
            CHECK(dump(to_json(slice_from_json(parse_json(text)))) == text);
            break;
        }
    }
}

TEST_CASE("serialized form is canonical")
{
    Graph g{{"b", "a"}, {{"b", "a"}}};
    CHECK(dump(to_json(g)) == "{\n  \"vertices\": [\n    \"a\",\n    \"b\"\n  ],\n  \"edges\": [\n    [\n      \"a\",\n      \"b\"\n    ]\n  ]\n}\n");
    CHECK(to_edge_list(Graph{{"a", "b", "c"}, {{"a", "b"}}}) == "c\na b\n");
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_graph("{\"vertices\": ["), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"edges\": []}"), ParseError);
    CHECK_THROWS_AS(parse_graph("a b c\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"vertices\": [\"a\"], \"edges\": [[\"a\", \"z\"]]}"), std::exception);
    CHECK(parse_graph("# comment\na b\n\nc\n").size() == 3);
}
