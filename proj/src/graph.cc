#include <slicegra/graph.hh>

#include <algorithm>
#include <deque>
#include <map>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace slicegra
{
    namespace
    {
        auto sorted_unique_vertices(vector<VertexId> vertices) -> vector<VertexId>
        {
            std::sort(vertices.begin(), vertices.end());
            auto dup = std::adjacent_find(vertices.begin(), vertices.end());
            if (dup != vertices.end())
                throw InvalidStructure("duplicate vertex '" + *dup + "'");
            return vertices;
        }

        auto lookup(std::span<const VertexId> vertices, const VertexId & id) -> optional<VertexIndex>
        {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
            if (it == vertices.end() || *it != id)
                return std::nullopt;
            return static_cast<VertexIndex>(it - vertices.begin());
        }
    }

    Graph::Graph(vector<VertexId> vertices, const vector<NamedEdge> & edges) :
        _vertices(sorted_unique_vertices(std::move(vertices)))
    {
        vector<IndexEdge> indexed;
        indexed.reserve(edges.size());
        for (auto & [u, v] : edges) {
            auto i = index_of(u), j = index_of(v);
            if (! i || ! j)
                throw InvalidStructure("edge {" + u + ", " + v + "} has an endpoint outside the vertex set");
            indexed.emplace_back(*i, *j);
        }
        build(indexed);
    }

    auto Graph::from_indices(vector<VertexId> sorted_vertices, const vector<IndexEdge> & edges) -> Graph
    {
        Graph g;
        g._vertices = sorted_unique_vertices(std::move(sorted_vertices));
        for (auto & [i, j] : edges)
            if (i >= g.size() || j >= g.size())
                throw InvalidStructure("edge index out of range");
        g.build(edges);
        return g;
    }

    auto Graph::build(const vector<IndexEdge> & edges) -> void
    {
        _edges.clear();
        for (auto [i, j] : edges) {
            if (i == j)
                throw InvalidStructure("loop at vertex '" + _vertices[i] + "' in an undirected graph");
            _edges.emplace_back(std::min(i, j), std::max(i, j));
        }
        std::sort(_edges.begin(), _edges.end());
        _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());

        _neighbours.assign(size(), {});
        _rows.assign(size(), Bitset(size()));
        for (auto [i, j] : _edges) {
            _neighbours[i].push_back(j);
            _neighbours[j].push_back(i);
            _rows[i].set(j);
            _rows[j].set(i);
        }
        for (auto & n : _neighbours)
            std::sort(n.begin(), n.end());
    }

    auto Graph::index_of(const VertexId & id) const -> optional<VertexIndex>
    {
        return lookup(_vertices, id);
    }

    auto Graph::require_index(const VertexId & id) const -> VertexIndex
    {
        auto i = index_of(id);
        if (! i)
            throw InvalidStructure("unknown vertex '" + id + "'");
        return *i;
    }

    auto Graph::named_edges() const -> vector<NamedEdge>
    {
        vector<NamedEdge> result;
        result.reserve(_edges.size());
        for (auto [i, j] : _edges)
            result.emplace_back(_vertices[i], _vertices[j]);
        return result;
    }

    Digraph::Digraph(vector<VertexId> vertices, const vector<NamedEdge> & arcs) :
        _vertices(sorted_unique_vertices(std::move(vertices)))
    {
        vector<IndexEdge> indexed;
        for (auto & [u, v] : arcs) {
            auto i = index_of(u), j = index_of(v);
            if (! i || ! j)
                throw InvalidStructure("arc (" + u + ", " + v + ") has an endpoint outside the vertex set");
            indexed.emplace_back(*i, *j);
        }
        build(indexed);
    }

    auto Digraph::from_indices(vector<VertexId> sorted_vertices, const vector<IndexEdge> & arcs) -> Digraph
    {
        Digraph d;
        d._vertices = sorted_unique_vertices(std::move(sorted_vertices));
        for (auto & [i, j] : arcs)
            if (i >= d.size() || j >= d.size())
                throw InvalidStructure("arc index out of range");
        d.build(arcs);
        return d;
    }

    auto Digraph::build(const vector<IndexEdge> & arcs) -> void
    {
        _arcs = arcs;
        std::sort(_arcs.begin(), _arcs.end());
        _arcs.erase(std::unique(_arcs.begin(), _arcs.end()), _arcs.end());
        _out_rows.assign(size(), Bitset(size()));
        _in_rows.assign(size(), Bitset(size()));
        for (auto [i, j] : _arcs) {
            _out_rows[i].set(j);
            _in_rows[j].set(i);
        }
    }

    auto Digraph::index_of(const VertexId & id) const -> optional<VertexIndex>
    {
        return lookup(_vertices, id);
    }

    auto Digraph::require_index(const VertexId & id) const -> VertexIndex
    {
        auto i = index_of(id);
        if (! i)
            throw InvalidStructure("unknown vertex '" + id + "'");
        return *i;
    }

    auto Digraph::arc_index(VertexIndex tail, VertexIndex head) const -> optional<size_t>
    {
        auto it = std::lower_bound(_arcs.begin(), _arcs.end(), IndexEdge{tail, head});
        if (it == _arcs.end() || *it != IndexEdge{tail, head})
            return std::nullopt;
        return static_cast<size_t>(it - _arcs.begin());
    }

    auto Digraph::has_isolated_point() const -> bool
    {
        for (VertexIndex i = 0; i < size(); ++i)
            if (is_isolated(i))
                return true;
        return false;
    }

    auto Digraph::is_irreflexive() const -> bool
    {
        return std::none_of(_arcs.begin(), _arcs.end(), [](const IndexEdge & a) { return a.first == a.second; });
    }

    auto build_path(size_t length, const string & prefix) -> Graph
    {
        vector<VertexId> vertices;
        vector<NamedEdge> edges;
        for (size_t i = 0; i <= length; ++i)
            vertices.push_back(prefix + to_string(i));
        for (size_t i = 0; i < length; ++i)
            edges.emplace_back(vertices[i], vertices[i + 1]);
        return Graph{vertices, edges};
    }

    auto build_cycle(size_t n, const string & prefix) -> Graph
    {
        if (n < 3)
            throw InvalidStructure("a cycle needs at least 3 vertices, got " + to_string(n));
        vector<VertexId> vertices;
        vector<NamedEdge> edges;
        for (size_t i = 0; i < n; ++i)
            vertices.push_back(prefix + to_string(i));
        for (size_t i = 0; i < n; ++i)
            edges.emplace_back(vertices[i], vertices[(i + 1) % n]);
        return Graph{vertices, edges};
    }

    auto build_star(size_t leaves, const string & prefix) -> Graph
    {
        vector<VertexId> vertices{prefix + "0"};
        vector<NamedEdge> edges;
        for (size_t i = 1; i <= leaves; ++i) {
            vertices.push_back(prefix + to_string(i));
            edges.emplace_back(vertices.front(), vertices.back());
        }
        return Graph{vertices, edges};
    }

    auto build_complete(size_t n, const string & prefix) -> Graph
    {
        vector<VertexId> vertices;
        vector<NamedEdge> edges;
        for (size_t i = 0; i < n; ++i)
            vertices.push_back(prefix + to_string(i));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                edges.emplace_back(vertices[i], vertices[j]);
        return Graph{vertices, edges};
    }

    auto disjoint_union(std::span<const Graph> parts) -> Graph
    {
        vector<VertexId> vertices;
        vector<NamedEdge> edges;
        for (size_t p = 0; p < parts.size(); ++p) {
            auto tag = to_string(p) + ":";
            for (auto & v : parts[p].vertices())
                vertices.push_back(tag + v);
            for (auto & [u, v] : parts[p].named_edges())
                edges.emplace_back(tag + u, tag + v);
        }
        return Graph{vertices, edges};
    }

    auto induced_subgraph(const Graph & g, std::span<const VertexIndex> keep) -> Graph
    {
        vector<VertexIndex> sorted(keep.begin(), keep.end());
        std::sort(sorted.begin(), sorted.end());
        vector<VertexId> vertices;
        std::map<VertexIndex, VertexIndex> position;
        for (auto v : sorted) {
            position.emplace(v, vertices.size());
            vertices.push_back(g.vertex(v));
        }
        vector<IndexEdge> edges;
        for (auto [i, j] : g.edges()) {
            auto pi = position.find(i), pj = position.find(j);
            if (pi != position.end() && pj != position.end())
                edges.emplace_back(pi->second, pj->second);
        }
        return Graph::from_indices(std::move(vertices), edges);
    }

    auto connected_components(const Graph & g) -> vector<vector<VertexIndex>>
    {
        vector<vector<VertexIndex>> result;
        vector<bool> seen(g.size(), false);
        for (VertexIndex start = 0; start < g.size(); ++start) {
            if (seen[start])
                continue;
            vector<VertexIndex> component{start};
            seen[start] = true;
            for (size_t head = 0; head < component.size(); ++head)
                for (auto w : g.neighbours(component[head]))
                    if (! seen[w]) {
                        seen[w] = true;
                        component.push_back(w);
                    }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto bfs_distances(const Graph & g, std::span<const VertexIndex> sources) -> vector<size_t>
    {
        vector<size_t> dist(g.size(), Bitset::npos);
        std::deque<VertexIndex> queue;
        for (auto s : sources)
            if (dist[s] == Bitset::npos) {
                dist[s] = 0;
                queue.push_back(s);
            }
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(v))
                if (dist[w] == Bitset::npos) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }
}
