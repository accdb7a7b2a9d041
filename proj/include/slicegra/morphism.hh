#ifndef SLICEGRA_MORPHISM_HH
#define SLICEGRA_MORPHISM_HH

#include <slicegra/graph.hh>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace slicegra
{
    /// A vertex map that is not total on its domain or leaves the codomain.
    /// Kept distinct from a failed edge-preservation check.
    class InvalidMap : public InvalidStructure
    {
    public:
        using InvalidStructure::InvalidStructure;
    };

    class NotAHomomorphism : public InvalidStructure
    {
    public:
        NotAHomomorphism(const NamedEdge & edge, const std::string & what) :
            InvalidStructure(what),
            violating_edge(edge)
        {
        }

        NamedEdge violating_edge;
    };

    /// Two slice objects or a slice and a graph disagree on the base graph.
    class BaseMismatch : public InvalidStructure
    {
    public:
        using InvalidStructure::InvalidStructure;
    };

    struct HomCheck
    {
        bool holds = true;
        /// First domain edge (in edge order) whose image is not an edge.
        std::optional<NamedEdge> violating_edge;

        explicit operator bool() const { return holds; }
    };

    /// Throws InvalidMap if `map` is not total on `a` or hits a non-vertex of `b`.
    auto is_homomorphism(const std::map<VertexId, VertexId> & map, const Graph & a, const Graph & b) -> HomCheck;
    auto is_homomorphism(std::span<const VertexIndex> map, const Graph & a, const Graph & b) -> HomCheck;

    /// Digraph analogue: arcs, including loops, must land on arcs.
    auto is_digraph_homomorphism(std::span<const VertexIndex> map, const Digraph & a, const Digraph & b) -> bool;

    /// A validated graph homomorphism. Construction fails on non-edge-preserving maps.
    class Morphism
    {
    public:
        Morphism(GraphPtr domain, GraphPtr codomain, std::vector<VertexIndex> images);

        static auto from_named(GraphPtr domain, GraphPtr codomain, const std::map<VertexId, VertexId> & map) -> Morphism;
        static auto identity(GraphPtr g) -> Morphism;

        auto domain() const -> const Graph & { return *_domain; }
        auto codomain() const -> const Graph & { return *_codomain; }
        auto domain_ptr() const -> const GraphPtr & { return _domain; }
        auto codomain_ptr() const -> const GraphPtr & { return _codomain; }

        auto operator()(VertexIndex v) const -> VertexIndex { return _images[v]; }
        auto images() const -> std::span<const VertexIndex> { return _images; }
        auto image_of(const VertexId & v) const -> const VertexId &;
        auto to_named() const -> std::map<VertexId, VertexId>;

        auto is_injective() const -> bool;
        auto is_surjective() const -> bool;
        auto is_bijective() const -> bool { return is_injective() && is_surjective(); }

        auto operator==(const Morphism & other) const -> bool;

    private:
        GraphPtr _domain, _codomain;
        std::vector<VertexIndex> _images;
    };

    /// second ∘ first.
    auto compose(const Morphism & second, const Morphism & first) -> Morphism;

    auto same_graph(const GraphPtr & a, const GraphPtr & b) -> bool;

    /// An object (H, f) of the slice category over the base graph G.
    class SliceObject
    {
    public:
        explicit SliceObject(Morphism structure_map);

        static auto from_named(Graph carrier, Graph base, const std::map<VertexId, VertexId> & map) -> SliceObject;
        static auto from_named(GraphPtr carrier, GraphPtr base, const std::map<VertexId, VertexId> & map) -> SliceObject;

        auto carrier() const -> const Graph & { return _structure.domain(); }
        auto base() const -> const Graph & { return _structure.codomain(); }
        auto carrier_ptr() const -> const GraphPtr & { return _structure.domain_ptr(); }
        auto base_ptr() const -> const GraphPtr & { return _structure.codomain_ptr(); }
        auto structure_map() const -> const Morphism & { return _structure; }
        auto colour(VertexIndex v) const -> VertexIndex { return _structure(v); }

        /// f[H] as sorted base indices.
        auto image() const -> std::vector<VertexIndex>;
        /// Restriction to the induced subgraph on `keep`; vertex ids are retained.
        auto restrict_to(std::span<const VertexIndex> keep) const -> SliceObject;

        auto operator==(const SliceObject & other) const -> bool { return _structure == other._structure; }

    private:
        Morphism _structure;
    };

    /// A carrier homomorphism commuting with the structure maps.
    class SliceMorphism
    {
    public:
        /// Throws BaseMismatch for different bases and InvalidStructure when the triangle fails.
        SliceMorphism(SliceObject source, SliceObject target, Morphism map);

        static auto identity(const SliceObject & x) -> SliceMorphism;

        auto source() const -> const SliceObject & { return _source; }
        auto target() const -> const SliceObject & { return _target; }
        auto map() const -> const Morphism & { return _map; }
        auto operator()(VertexIndex v) const -> VertexIndex { return _map(v); }

        auto operator==(const SliceMorphism & other) const -> bool { return _map == other._map; }

    private:
        SliceObject _source, _target;
        Morphism _map;
    };

    auto compose(const SliceMorphism & second, const SliceMorphism & first) -> SliceMorphism;
}

#endif
