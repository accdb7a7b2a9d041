#ifndef SLICEGRA_GRAPH_HH
#define SLICEGRA_GRAPH_HH

#include <slicegra/bitset.hh>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slicegra
{
    using VertexId = std::string;
    using VertexIndex = std::size_t;
    using IndexEdge = std::pair<VertexIndex, VertexIndex>;
    using NamedEdge = std::pair<VertexId, VertexId>;

    /// Raised when a graph, digraph, map or slice object violates its invariants.
    class InvalidStructure : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /**
     * A finite simple undirected graph.
     *
     * Vertices are opaque strings kept in lexicographic order; a vertex's index
     * is its position in that order, so iteration over indices is
     * deterministic. Edges are unordered pairs of distinct vertices, stored as
     * (i, j) with i < j and sorted. Immutable after construction.
     */
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InvalidStructure on duplicate vertices, unknown endpoints or loops.
        /// Repeated edges (in either orientation) collapse to one.
        Graph(std::vector<VertexId> vertices, const std::vector<NamedEdge> & edges);

        /// Index-based constructor; `vertices` must already be sorted and unique.
        static auto from_indices(std::vector<VertexId> sorted_vertices, const std::vector<IndexEdge> & edges) -> Graph;

        auto size() const -> std::size_t { return _vertices.size(); }
        auto empty() const -> bool { return _vertices.empty(); }
        auto edge_count() const -> std::size_t { return _edges.size(); }

        auto vertices() const -> std::span<const VertexId> { return _vertices; }
        auto vertex(VertexIndex i) const -> const VertexId & { return _vertices.at(i); }
        auto index_of(const VertexId & id) const -> std::optional<VertexIndex>;
        /// Throws InvalidStructure when `id` is not a vertex.
        auto require_index(const VertexId & id) const -> VertexIndex;

        auto edges() const -> std::span<const IndexEdge> { return _edges; }
        auto named_edges() const -> std::vector<NamedEdge>;
        auto neighbours(VertexIndex i) const -> std::span<const VertexIndex> { return _neighbours[i]; }
        auto degree(VertexIndex i) const -> std::size_t { return _neighbours[i].size(); }
        auto adjacent(VertexIndex i, VertexIndex j) const -> bool { return _rows[i].test(j); }
        auto adjacency_row(VertexIndex i) const -> const Bitset & { return _rows[i]; }

        auto operator==(const Graph & other) const -> bool
        {
            return _vertices == other._vertices && _edges == other._edges;
        }

    private:
        auto build(const std::vector<IndexEdge> & edges) -> void;

        std::vector<VertexId> _vertices;
        std::vector<IndexEdge> _edges;
        std::vector<std::vector<VertexIndex>> _neighbours;
        std::vector<Bitset> _rows;
    };

    using GraphPtr = std::shared_ptr<const Graph>;

    inline auto share(Graph g) -> GraphPtr { return std::make_shared<const Graph>(std::move(g)); }

    /// A finite binary relation: ordered arcs, loops allowed.
    class Digraph
    {
    public:
        Digraph() = default;
        Digraph(std::vector<VertexId> vertices, const std::vector<NamedEdge> & arcs);
        static auto from_indices(std::vector<VertexId> sorted_vertices, const std::vector<IndexEdge> & arcs) -> Digraph;

        auto size() const -> std::size_t { return _vertices.size(); }
        auto arc_count() const -> std::size_t { return _arcs.size(); }
        auto vertices() const -> std::span<const VertexId> { return _vertices; }
        auto vertex(VertexIndex i) const -> const VertexId & { return _vertices.at(i); }
        auto index_of(const VertexId & id) const -> std::optional<VertexIndex>;
        auto require_index(const VertexId & id) const -> VertexIndex;

        /// Arcs sorted lexicographically by (tail, head).
        auto arcs() const -> std::span<const IndexEdge> { return _arcs; }
        auto arc_index(VertexIndex tail, VertexIndex head) const -> std::optional<std::size_t>;
        auto has_arc(VertexIndex tail, VertexIndex head) const -> bool { return _out_rows[tail].test(head); }
        auto out_row(VertexIndex i) const -> const Bitset & { return _out_rows[i]; }
        auto in_row(VertexIndex i) const -> const Bitset & { return _in_rows[i]; }
        auto has_loop(VertexIndex i) const -> bool { return has_arc(i, i); }

        auto is_isolated(VertexIndex i) const -> bool { return _out_rows[i].none() && _in_rows[i].none(); }
        auto has_isolated_point() const -> bool;
        auto is_irreflexive() const -> bool;

        auto operator==(const Digraph & other) const -> bool
        {
            return _vertices == other._vertices && _arcs == other._arcs;
        }

    private:
        auto build(const std::vector<IndexEdge> & arcs) -> void;

        std::vector<VertexId> _vertices;
        std::vector<IndexEdge> _arcs;
        std::vector<Bitset> _out_rows, _in_rows;
    };

    using DigraphPtr = std::shared_ptr<const Digraph>;

    inline auto share(Digraph d) -> DigraphPtr { return std::make_shared<const Digraph>(std::move(d)); }

    // Standard families. "P_n" is the path with n edges and n + 1 vertices.

    auto build_path(std::size_t length, const std::string & prefix = "v") -> Graph;
    /// Throws InvalidStructure for n < 3.
    auto build_cycle(std::size_t n, const std::string & prefix = "v") -> Graph;
    /// K_{1,k}: centre "v0", leaves "v1".."vk".
    auto build_star(std::size_t leaves, const std::string & prefix = "v") -> Graph;
    auto build_complete(std::size_t n, const std::string & prefix = "v") -> Graph;
    /// Vertex ids become "<part index>:<id>".
    auto disjoint_union(std::span<const Graph> parts) -> Graph;

    auto induced_subgraph(const Graph & g, std::span<const VertexIndex> keep) -> Graph;
    /// Components as sorted index lists, ordered by their least vertex.
    auto connected_components(const Graph & g) -> std::vector<std::vector<VertexIndex>>;
    auto is_connected(const Graph & g) -> bool;
    /// Breadth-first distances from a set of sources; unreachable vertices get npos.
    auto bfs_distances(const Graph & g, std::span<const VertexIndex> sources) -> std::vector<std::size_t>;
}

#endif
