#include "oracles.hh"

#include <slicegra/arrow.hh>
#include <slicegra/gadget_library.hh>
#include <slicegra/universality.hh>

#include <doctest.h>

using namespace slicegra;

namespace
{
    auto p3_letters() -> GraphPtr
    {
        return share(Graph{{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}});
    }

    auto single_arc() -> DigraphPtr
    {
        return share(Digraph{{"u", "v"}, {{"u", "v"}}});
    }

    auto loop() -> DigraphPtr
    {
        return share(Digraph{{"u"}, {{"u", "u"}}});
    }

    auto two_cycle() -> DigraphPtr
    {
        return share(Digraph{{"u", "v"}, {{"u", "v"}, {"v", "u"}}});
    }
}

TEST_CASE("arrow_graph examples")
{
    auto h = p3_letters();
    SUBCASE("single arc gives one copy")
    {
        auto r = arrow_graph(single_arc(), h, "a", "d");
        CHECK(r.product->size() == 4);
        CHECK(r.product->edge_count() == 3);
        CHECK(path_order(*r.product));
    }
    SUBCASE("two arcs out of one vertex")
    {
        auto d = share(Digraph{{"u", "v", "w"}, {{"u", "v"}, {"u", "w"}}});
        auto r = arrow_graph(d, h, "a", "d");
        CHECK(r.product->size() == 7);
        CHECK(r.product->edge_count() == 6);
    }
    SUBCASE("a loop closes a triangle")
    {
        auto r = arrow_graph(loop(), h, "a", "d");
        CHECK(r.product->size() == 3);
        CHECK(r.product->edge_count() == 3);
        CHECK(contains_subgraph(share(build_cycle(3)), r.product));
    }
    SUBCASE("bad endpoints")
    {
        CHECK_THROWS_AS(arrow_graph(single_arc(), h, "a", "a"), InvalidStructure);
        CHECK_THROWS_AS(arrow_graph(single_arc(), h, "a", "z"), InvalidStructure);
    }
    SUBCASE("loop with an edge between the ends")
    {
        CHECK_NOTHROW(arrow_graph(single_arc(), h, "a", "b"));
        CHECK_THROWS_AS(arrow_graph(loop(), h, "a", "b"), InvalidStructure);
    }
}

TEST_CASE("interior ids")
{
    CHECK(interior_vertex_id("u", "v", "b") == "(u,v)::b");
    auto r = arrow_graph(single_arc(), p3_letters(), "a", "d");
    CHECK(r.product->index_of("(u,v)::b"));
    CHECK(r.product->index_of("(u,v)::c"));
    CHECK_FALSE(r.product->index_of("(u,v)::a"));
}

TEST_CASE("phi")
{
    SUBCASE("single arc")
    {
        auto r = arrow_graph(single_arc(), p3_letters(), "a", "d");
        auto named = r.phi(0, 1).to_named();
        CHECK(named["a"] == "u");
        CHECK(named["b"] == "(u,v)::b");
        CHECK(named["c"] == "(u,v)::c");
        CHECK(named["d"] == "v");
        CHECK_THROWS_AS(r.phi(1, 0), InvalidStructure);
        CHECK_THROWS_AS(r.phi(3), InvalidStructure);
    }
    SUBCASE("loop arc identifies the ends")
    {
        auto r = arrow_graph(loop(), p3_letters(), "a", "d");
        auto named = r.phi(0, 0).to_named();
        CHECK(named["a"] == "u");
        CHECK(named["d"] == "u");
    }
    SUBCASE("interiors are injective on every arc")
    {
        auto r = arrow_graph(two_cycle(), p3_letters(), "a", "d");
        std::set<VertexIndex> seen;
        for (std::size_t e = 0; e < 2; ++e)
            for (VertexIndex w : {1, 2})
                CHECK(seen.insert(r.phi_image(e, w)).second);
    }
}

TEST_CASE("arrow_slice")
{
    auto c3 = builtin_gadget("c3");
    SUBCASE("single arc is a path coloured 0,1,2,0")
    {
        auto s = arrow_slice(single_arc(), c3);
        auto & x = s.object;
        auto order = path_order(x.carrier());
        REQUIRE(order);
        std::vector<std::string> colours;
        for (auto v : *order)
            colours.push_back(x.base().vertex(x.colour(v)));
        CHECK((colours == std::vector<std::string>{"0", "1", "2", "0"} || colours == std::vector<std::string>{"0", "2", "1", "0"}));
    }
    SUBCASE("loop gives a triangle coloured 0,1,2")
    {
        auto s = arrow_slice(loop(), c3);
        CHECK(s.object.carrier().size() == 3);
        CHECK(s.object.image().size() == 3);
        CHECK(is_homomorphism(s.object.structure_map().images(), s.object.carrier(), s.object.base()));
    }
    SUBCASE("gadget with split ends is rejected")
    {
        auto spec = c3.spec();
        spec.map["d"] = "1";
        auto checked = Gadget::validate(spec);
        REQUIRE(std::holds_alternative<GadgetDefect>(checked));
        CHECK(std::get<GadgetDefect>(checked).kind == GadgetDefectKind::endpoints_coloured_apart);
        CHECK_THROWS_AS(Gadget::from_spec(spec), InvalidGadget);
    }
}

TEST_CASE("arrow_morphism")
{
    auto g = builtin_gadget("c3");
    auto arc = arrow_slice(single_arc(), g);
    auto cyc = arrow_slice(two_cycle(), g);
    SUBCASE("identity goes to identity")
    {
        std::vector<VertexIndex> id{0, 1};
        CHECK(arrow_morphism(cyc, cyc, id) == SliceMorphism::identity(cyc.object));
    }
    SUBCASE("two digraph homs give two slice homs")
    {
        auto homs = enumerate_digraph_homs(*arc.arrow.digraph, *cyc.arrow.digraph);
        REQUIRE(homs.size() == 2);
        CHECK_FALSE(arrow_morphism(arc, cyc, homs[0]) == arrow_morphism(arc, cyc, homs[1]));
    }
    SUBCASE("non-homomorphisms are rejected")
    {
        std::vector<VertexIndex> collapse{0, 0};
        CHECK_THROWS_AS(arrow_morphism(arc, arc, collapse), InvalidStructure);
    }
}

TEST_CASE("arrow invariants on random digraphs")
{
    std::mt19937_64 rng(21);
    for (auto & name : builtin_gadget_names()) {
        auto g = builtin_gadget(name);
        auto & h = g.carrier();
        for (int round = 0; round < 30; ++round) {
            auto d = share(oracle::random_digraph(rng, 1 + rng() % 6, 0.3));
            auto s = arrow_slice(d, g);
            auto & product = *s.arrow.product;
            CHECK(product.size() == d->size() + d->arc_count() * (h.size() - 2));
            CHECK(product.edge_count() == d->arc_count() * h.edge_count());
            for (std::size_t e = 0; e < d->arc_count(); ++e) {
                auto phi = s.arrow.phi(e);
                // a loop arc glues a to b, so neighbours of b become neighbours of a:
                // only injectivity off b survives there
                bool is_loop = d->arcs()[e].first == d->arcs()[e].second;
                for (VertexIndex x = 0; x < h.size(); ++x) {
                    CHECK(s.object.colour(phi(x)) == g.slice().colour(x));
                    for (VertexIndex y = x + 1; y < h.size(); ++y) {
                        if (is_loop && (x == g.b() || y == g.b()))
                            continue;
                        CHECK(phi(x) != phi(y));
                        if (! is_loop)
                            CHECK(product.adjacent(phi(x), phi(y)) == h.adjacent(x, y));
                    }
                }
                CHECK_NOTHROW(s.phi(e));
            }
        }
    }
}

TEST_CASE("functoriality on digraphs with up to 3 vertices")
{
    auto g = builtin_gadget("c3");
    std::mt19937_64 rng(22);
    for (int round = 0; round < 40; ++round) {
        std::vector<ArrowSlice> s;
        for (int i = 0; i < 3; ++i)
            s.push_back(arrow_slice(share(oracle::random_digraph(rng, 1 + rng() % 3, 0.6)), g));
        auto first = enumerate_digraph_homs(*s[0].arrow.digraph, *s[1].arrow.digraph);
        auto second = enumerate_digraph_homs(*s[1].arrow.digraph, *s[2].arrow.digraph);
        for (auto & h1 : first)
            for (auto & h2 : second) {
                std::vector<VertexIndex> h21(h1.size());
                for (std::size_t v = 0; v < h1.size(); ++v)
                    h21[v] = h2[h1[v]];
                CHECK(arrow_morphism(s[0], s[2], h21) == compose(arrow_morphism(s[1], s[2], h2), arrow_morphism(s[0], s[1], h1)));
            }
    }
}
