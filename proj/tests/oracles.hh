#ifndef SLICEGRA_TESTS_ORACLES_HH
#define SLICEGRA_TESTS_ORACLES_HH

// Brute-force reference implementations. Deliberately naive: they walk every
// vertex map and test edges directly, sharing no code with the search engine.

#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using slicegra::Digraph;
    using slicegra::Graph;
    using slicegra::SliceObject;
    using slicegra::VertexIndex;

    using Map = std::vector<VertexIndex>;

    /// Every map A -> B in odometer order, as long as visit returns true.
    template <typename F>
    auto for_each_map(std::size_t from, std::size_t to, F && visit) -> void
    {
        Map m(from, 0);
        if (from > 0 && to == 0)
            return;
        while (true) {
            if (! visit(m))
                return;
            std::size_t i = 0;
            while (i < from && ++m[i] == to)
                m[i++] = 0;
            if (i == from)
                return;
        }
    }

    inline auto edge_set(const Graph & g) -> std::set<std::pair<VertexIndex, VertexIndex>>
    {
        std::set<std::pair<VertexIndex, VertexIndex>> s;
        for (auto [u, v] : g.edges()) {
            s.emplace(u, v);
            s.emplace(v, u);
        }
        return s;
    }

    inline auto preserves(const Map & m, const Graph & a, const std::set<std::pair<VertexIndex, VertexIndex>> & b_edges) -> bool
    {
        for (auto [u, v] : a.edges())
            if (! b_edges.contains({m[u], m[v]}))
                return false;
        return true;
    }

    inline auto homs(const Graph & a, const Graph & b) -> std::set<Map>
    {
        std::set<Map> out;
        auto be = edge_set(b);
        for_each_map(a.size(), b.size(), [&](const Map & m) {
            if (preserves(m, a, be))
                out.insert(m);
            return true;
        });
        return out;
    }

    inline auto slice_homs(const SliceObject & x, const SliceObject & y) -> std::set<Map>
    {
        std::set<Map> out;
        for (auto & m : homs(x.carrier(), y.carrier())) {
            bool commutes = true;
            for (VertexIndex v = 0; v < m.size(); ++v)
                if (y.colour(m[v]) != x.colour(v))
                    commutes = false;
            if (commutes)
                out.insert(m);
        }
        return out;
    }

    inline auto is_bijection(const Map & m) -> bool
    {
        std::vector<bool> hit(m.size(), false);
        for (auto v : m) {
            if (hit[v])
                return false;
            hit[v] = true;
        }
        return true;
    }

    enum class Endo
    {
        rigid,
        automorphisms_only,
        proper
    };

    inline auto endo_kind(const std::set<Map> & endos) -> Endo
    {
        if (endos.size() == 1)
            return Endo::rigid;
        for (auto & m : endos)
            if (! is_bijection(m))
                return Endo::proper;
        return Endo::automorphisms_only;
    }

    inline auto slice_endo_kind(const SliceObject & x) -> Endo
    {
        return endo_kind(slice_homs(x, x));
    }

    /// Ordinary subgraph containment by trying every injective map.
    inline auto contains(const Graph & pattern, const Graph & host) -> bool
    {
        if (pattern.size() > host.size())
            return false;
        auto he = edge_set(host);
        bool found = false;
        for_each_map(pattern.size(), host.size(), [&](const Map & m) {
            std::set<VertexIndex> distinct(m.begin(), m.end());
            if (distinct.size() == m.size() && preserves(m, pattern, he))
                found = true;
            return ! found;
        });
        return found;
    }

    inline auto digraph_homs(const Digraph & a, const Digraph & b) -> std::set<Map>
    {
        std::set<std::pair<VertexIndex, VertexIndex>> arcs(b.arcs().begin(), b.arcs().end());
        std::set<Map> out;
        for_each_map(a.size(), b.size(), [&](const Map & m) {
            for (auto [u, v] : a.arcs())
                if (! arcs.contains({m[u], m[v]}))
                    return true;
            out.insert(m);
            return true;
        });
        return out;
    }

    /// Labelled relations on n points with no isolated point, by inclusion-exclusion:
    /// sum over isolated sets S of (-1)^|S| C(n,|S|) 2^((n-|S|)^2).
    inline auto no_isolated_count(std::size_t n) -> std::int64_t
    {
        std::int64_t total = 0, binom = 1;
        for (std::size_t s = 0; s <= n; ++s) {
            auto rest = (n - s) * (n - s);
            std::int64_t term = binom * (std::int64_t{1} << rest);
            total += s % 2 == 0 ? term : -term;
            binom = binom * static_cast<std::int64_t>(n - s) / static_cast<std::int64_t>(s + 1);
        }
        return total;
    }

    inline auto names(std::size_t n, const std::string & prefix = "v") -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(prefix + std::to_string(i));
        return out;
    }

    /// G(n, p) on vertices v0..v(n-1).
    inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<std::pair<VertexIndex, VertexIndex>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng))
                    edges.emplace_back(i, j);
        std::vector<slicegra::NamedEdge> named;
        auto plain = names(n);
        for (auto [i, j] : edges)
            named.emplace_back(plain[i], plain[j]);
        return Graph{plain, named};
    }

    /// Random connected graph: a random spanning tree plus extra edges.
    inline auto random_connected_graph(std::mt19937_64 & rng, std::size_t n, double extra) -> Graph
    {
        auto plain = names(n);
        std::vector<slicegra::NamedEdge> named;
        std::bernoulli_distribution coin(extra);
        for (std::size_t i = 1; i < n; ++i)
            named.emplace_back(plain[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)], plain[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng))
                    named.emplace_back(plain[i], plain[j]);
        return Graph{plain, named};
    }

    /// Random relation on v0..v(n-1) with arc density p; retried until no point is isolated.
    inline auto random_digraph(std::mt19937_64 & rng, std::size_t n, double p) -> Digraph
    {
        std::bernoulli_distribution coin(p);
        auto plain = names(n);
        while (true) {
            std::vector<slicegra::NamedEdge> arcs;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (coin(rng))
                        arcs.emplace_back(plain[i], plain[j]);
            Digraph d{plain, arcs};
            if (! d.has_isolated_point())
                return d;
        }
    }

    /// The same graph under fresh random names; `renaming[v]` is the new id of v.
    inline auto relabel(const Graph & g, std::mt19937_64 & rng, std::vector<std::string> & renaming) -> Graph
    {
        renaming.clear();
        std::vector<std::size_t> order(g.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i < g.size(); ++i)
            renaming.push_back("r" + std::to_string(order[i]));
        std::vector<slicegra::NamedEdge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(renaming[u], renaming[v]);
        return Graph{renaming, edges};
    }
}

#endif
