#include "oracles.hh"

#include <slicegra/gadget_library.hh>
#include <slicegra/universality.hh>

#include <doctest.h>

using namespace slicegra;

namespace
{
    auto colour_of(const Gadget & g, const VertexId & v) -> VertexId
    {
        return g.base().vertex(g.slice().colour(g.carrier().require_index(v)));
    }

    auto preimages(const Gadget & g, const VertexId & c) -> std::vector<VertexId>
    {
        std::vector<VertexId> out;
        for (auto & v : g.carrier().vertices())
            if (colour_of(g, v) == c)
                out.push_back(v);
        return out;
    }

    auto colour_word(const Gadget & g) -> std::string
    {
        std::string out;
        for (auto & v : g.carrier().vertices())
            out += colour_of(g, v);
        return out;
    }
}

TEST_CASE("built-in gadgets")
{
    auto c3 = builtin_gadget("c3");
    CHECK(colour_word(c3) == "0120");
    CHECK(c3.carrier().vertex(c3.a()) == "a");
    CHECK(c3.carrier().vertex(c3.b()) == "d");
    CHECK(colour_of(c3, "a") == "0");
    CHECK(colour_of(c3, "d") == "0");

    auto c4 = builtin_gadget("C4");
    CHECK(colour_word(c4) == "01230");
    CHECK(c4.carrier().vertex(c4.b()) == "e");

    auto p4 = builtin_gadget("p4");
    CHECK(p4.carrier().size() == 13);
    CHECK(colour_word(p4) == "0121234323210");
    CHECK(preimages(p4, "4") == std::vector<VertexId>{"g"});
    CHECK(p4.carrier().vertex(p4.b()) == "m");

    auto y = builtin_gadget("y");
    CHECK(colour_word(y) == "0121310");
    CHECK(preimages(y, "2") == std::vector<VertexId>{"c"});
    CHECK(preimages(y, "3") == std::vector<VertexId>{"e"});
    std::vector<VertexIndex> from_c{y.carrier().require_index("c")};
    CHECK(bfs_distances(y.carrier(), from_c)[y.carrier().require_index("e")] == 2);
    CHECK(y.base().edge_count() == 3);
    CHECK(y.base().degree(y.base().require_index("1")) == 3);

    CHECK_THROWS_AS(builtin_gadget("k5"), UnknownGadget);
}

TEST_CASE("built-in gadget invariants")
{
    for (auto & name : builtin_gadget_names()) {
        auto g = builtin_gadget(name);
        CHECK(is_homomorphism(g.slice().structure_map().images(), g.carrier(), g.base()));
        CHECK(g.a() != g.b());
        CHECK(g.slice().colour(g.a()) == g.slice().colour(g.b()));
        CHECK_FALSE(g.carrier().adjacent(g.a(), g.b()));
        CHECK(g.base() == builtin_base(name));
        CHECK(std::holds_alternative<Gadget>(Gadget::validate(g.spec())));
    }
}

TEST_CASE("gadget serialization")
{
    for (auto & name : builtin_gadget_names()) {
        auto g = builtin_gadget(name);
        auto spec = gadget_spec_from_json(parse_json(dump(to_json(g))));
        auto back = Gadget::from_spec(spec);
        CHECK(back.slice() == g.slice());
        CHECK(back.a() == g.a());
        CHECK(back.b() == g.b());
    }
}

TEST_CASE("gadget defects")
{
    auto spec = builtin_gadget("c3").spec();
    SUBCASE("ends equal")
    {
        spec.b = spec.a;
        CHECK(std::get<GadgetDefect>(Gadget::validate(spec)).kind == GadgetDefectKind::endpoints_equal);
    }
    SUBCASE("missing end")
    {
        spec.b = "q";
        CHECK(std::get<GadgetDefect>(Gadget::validate(spec)).kind == GadgetDefectKind::endpoint_missing);
    }
    SUBCASE("broken structure map names the edge")
    {
        spec.map["c"] = "1";
        auto d = std::get<GadgetDefect>(Gadget::validate(spec));
        CHECK(d.kind == GadgetDefectKind::invalid_structure_map);
        REQUIRE(d.edge);
    }
    SUBCASE("ends coloured apart")
    {
        GadgetSpec bad{"apart", share(build_path(2)), share(build_path(2)), {{"v0", "v0"}, {"v1", "v1"}, {"v2", "v0"}}, "v0", "v1"};
        CHECK(std::get<GadgetDefect>(Gadget::validate(bad)).kind == GadgetDefectKind::endpoints_coloured_apart);
    }
}

TEST_CASE("verify_gadget on single digraphs")
{
    auto c3 = builtin_gadget("c3");
    auto arc = share(Digraph{{"u", "v"}, {{"u", "v"}}});
    auto two_cycle = share(Digraph{{"u", "v"}, {{"u", "v"}, {"v", "u"}}});
    auto loop = share(Digraph{{"u"}, {{"u", "u"}}});

    auto r = verify_gadget(c3, arc);
    CHECK(r.pass);
    CHECK(r.homs_found == 1);
    r = verify_gadget(c3, two_cycle);
    CHECK(r.pass);
    CHECK(r.homs_found == 2);
    r = verify_gadget(c3, loop);
    CHECK(r.pass);
    CHECK(r.homs_found == 1);

    auto isolated = share(Digraph{{"u", "v", "w"}, {{"u", "v"}}});
    CHECK_THROWS_AS(verify_gadget(c3, isolated), IsolatedPoint);
}

TEST_CASE("slice homs agree with a brute-force count on small products")
{
    auto g = builtin_gadget("c3");
    for (auto & d : enumerate_digraphs(2, true)) {
        auto s = arrow_slice(share(d), g);
        auto brute = oracle::slice_homs(g.slice(), s.object);
        CHECK(brute.size() == d.arc_count());
        std::set<oracle::Map> phis;
        for (std::size_t e = 0; e < d.arc_count(); ++e) {
            auto phi = s.arrow.phi(e);
            phis.emplace(phi.images().begin(), phi.images().end());
        }
        CHECK(brute == phis);
    }
}

TEST_CASE("verify_gadget_exhaustive")
{
    auto r = verify_gadget_exhaustive(builtin_gadget("c3").spec(), 2);
    CHECK(r.pass);
    CHECK(r.digraphs_checked == 14);
    CHECK(r.digraphs_per_size[1] == 1);
    CHECK(r.digraphs_per_size[2] == 13);

    auto parallel = verify_gadget_exhaustive(builtin_gadget("p4").spec(), 2, 3);
    auto serial = verify_gadget_exhaustive(builtin_gadget("p4").spec(), 2, 1);
    CHECK(parallel.pass);
    CHECK(dump(to_json(parallel)) == dump(to_json(serial)));

    CHECK_THROWS_AS(verify_gadget_exhaustive(builtin_gadget("c3").spec(), 9), CapExceeded);

    auto broken = builtin_gadget("c3").spec();
    broken.map["c"] = "1";
    auto f = verify_gadget_exhaustive(broken, 2);
    CHECK_FALSE(f.pass);
    REQUIRE(f.counterexample);
}

TEST_CASE("mutations can fail verification")
{
    for (auto & name : builtin_gadget_names()) {
        auto g = builtin_gadget(name);
        std::size_t failing = 0;
        for (auto & m : single_vertex_mutations(g)) {
            auto r = verify_gadget_exhaustive(m, 2);
            if (! r.pass) {
                CHECK(r.counterexample.has_value());
                ++failing;
            }
        }
        CHECK(failing >= 3);
    }
}

TEST_CASE("valid mutations that fail produce extra homs")
{
    // P4 gadget with the colour-4 vertex moved down stays a valid structure map
    // but loses the unique-preimage pin.
    auto spec = builtin_gadget("p4").spec();
    spec.map["g"] = "2";
    REQUIRE(std::holds_alternative<Gadget>(Gadget::validate(spec)));
    auto r = verify_gadget_exhaustive(spec, 2);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->kind != CounterexampleKind::gadget_defect);
}

TEST_CASE("G_k")
{
    CHECK_THROWS_AS(build_gk(1), InvalidStructure);
    for (std::size_t k = 2; k <= 5; ++k) {
        auto gk = build_gk(k);
        auto & g = *gk.graph;
        CHECK(g.size() == 13 + 6 * (k - 1));
        CHECK(g.edge_count() == 9 + 6 * k);
        CHECK(g.vertex(gk.a) == "K");
        CHECK(g.vertex(gk.b) == "M");
        CHECK(gk.hom_to_odd_cycle.codomain().size() == 2 * k - 1);
        CHECK(is_homomorphism(gk.hom_to_odd_cycle.images(), g, gk.hom_to_odd_cycle.codomain()));
        auto k_label = gk.hom_to_odd_cycle.codomain().vertex(gk.hom_to_odd_cycle(gk.a));
        CHECK(k_label == std::to_string(k));
        CHECK(gk.hom_to_odd_cycle(gk.a) == gk.hom_to_odd_cycle(gk.b));
        CHECK_FALSE(g.adjacent(gk.a, gk.b));
    }
}

TEST_CASE("strong replacement")
{
    SUBCASE("G_2 on a single arc")
    {
        auto gk = build_gk(2);
        auto r = check_strong_replacement(gk.graph, gk.a, gk.b, share(Digraph{{"u", "v"}, {{"u", "v"}}}));
        CHECK(r.holds);
        CHECK(r.homs_checked >= 1);
    }
    SUBCASE("K2 always lands in a copy")
    {
        auto k2 = share(build_complete(2));
        auto r = check_strong_replacement(k2, 0, 1, share(Digraph{{"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}}));
        CHECK(r.holds);
    }
    SUBCASE("P2 crosses copies")
    {
        auto p2 = share(Graph{{"a", "b", "c"}, {{"a", "c"}, {"c", "b"}}});
        auto r = check_strong_replacement(p2, 0, 1, share(Digraph{{"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}}));
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness);
        std::set<VertexIndex> image(r.witness->images().begin(), r.witness->images().end());
        CHECK(image.size() == 3);
    }
    SUBCASE("two isolated points on a single arc")
    {
        auto pair = share(Graph{{"a", "b"}, {}});
        CHECK(check_strong_replacement(pair, 0, 1, share(Digraph{{"u", "v"}, {{"u", "v"}}})).holds);
    }
    SUBCASE("regimes")
    {
        auto loop = share(Digraph{{"u", "v"}, {{"u", "u"}, {"u", "v"}}});
        auto p2 = share(Graph{{"a", "b", "c"}, {{"a", "c"}, {"c", "b"}}});
        CHECK_THROWS_AS(check_strong_replacement(p2, 0, 1, loop), InvalidStructure);
        CHECK_NOTHROW(check_strong_replacement(p2, 0, 1, loop, ReplacementRegime::no_isolated_points));
    }
}

TEST_CASE("report serialization")
{
    auto r = verify_gadget_exhaustive(builtin_gadget("y").spec(), 1);
    auto j = to_json(r);
    CHECK(j["verdict"] == "pass");
    CHECK(j["digraphs_checked"] == 1);
    CHECK(j["counterexample"].is_null());
}
