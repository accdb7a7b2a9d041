#ifndef SLICEGRA_ARROW_HH
#define SLICEGRA_ARROW_HH

#include <slicegra/gadget.hh>
#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>

#include <span>
#include <vector>

namespace slicegra
{
    /// Id of the interior product vertex for gadget vertex `w` on arc (u, v): "(u,v)::w".
    auto interior_vertex_id(const VertexId & u, const VertexId & v, const VertexId & w) -> VertexId;

    /**
     * The product D * (H, a, b): one copy of H per arc (u, v) of D, with a
     * glued to u and b glued to v. Vertices are D's vertices plus one interior
     * vertex per (arc, w) for w outside {a, b}.
     */
    struct ArrowResult
    {
        DigraphPtr digraph;
        GraphPtr gadget;
        VertexIndex a = 0, b = 0;
        GraphPtr product;
        /// D vertex index -> product vertex index.
        std::vector<VertexIndex> base_embedding;
        /// [arc index][gadget vertex] -> product vertex; npos at a and b.
        std::vector<std::vector<VertexIndex>> interior_index;

        /// Image of gadget vertex `w` under phi for the arc with the given index.
        auto phi_image(std::size_t arc, VertexIndex w) const -> VertexIndex;
        /// phi_(u,v): H -> D * H. Throws InvalidStructure for an unknown arc.
        auto phi(std::size_t arc) const -> Morphism;
        auto phi(VertexIndex tail, VertexIndex head) const -> Morphism;
    };

    /// Throws InvalidStructure when a == b, when an endpoint is out of range, or
    /// when a loop arc meets an edge {a, b} (the product would need a graph loop).
    auto arrow_graph(const DigraphPtr & d, const GraphPtr & h, VertexIndex a, VertexIndex b) -> ArrowResult;
    auto arrow_graph(const DigraphPtr & d, const GraphPtr & h, const VertexId & a, const VertexId & b) -> ArrowResult;

    /// h * H for a digraph homomorphism h: D1 -> D2. Throws InvalidStructure
    /// when h does not preserve arcs or the two products use different gadgets.
    auto arrow_graph_morphism(const ArrowResult & from, const ArrowResult & to, std::span<const VertexIndex> h) -> Morphism;

    /// The slice object (D * H, f_D) for a gadget (H, f, a, b).
    struct ArrowSlice
    {
        Gadget gadget;
        ArrowResult arrow;
        SliceObject object;

        /// phi for the given arc, as a slice morphism (H, f) -> (D * H, f_D).
        auto phi(std::size_t arc) const -> SliceMorphism;
    };

    auto arrow_slice(const DigraphPtr & d, const Gadget & g) -> ArrowSlice;

    /// h * H as a slice morphism between arrow slices built from the same gadget.
    auto arrow_morphism(const ArrowSlice & from, const ArrowSlice & to, std::span<const VertexIndex> h) -> SliceMorphism;
}

#endif
