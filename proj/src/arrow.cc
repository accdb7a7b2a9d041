#include <slicegra/arrow.hh>

using std::size_t;
using std::vector;

namespace slicegra
{
    auto interior_vertex_id(const VertexId & u, const VertexId & v, const VertexId & w) -> VertexId
    {
        return "(" + u + "," + v + ")::" + w;
    }

    auto ArrowResult::phi_image(size_t arc, VertexIndex w) const -> VertexIndex
    {
        auto [u, v] = digraph->arcs()[arc];
        if (w == a)
            return base_embedding[u];
        if (w == b)
            return base_embedding[v];
        return interior_index[arc][w];
    }

    auto ArrowResult::phi(size_t arc) const -> Morphism
    {
        if (arc >= digraph->arc_count())
            throw InvalidStructure("unknown arc index " + std::to_string(arc));
        vector<VertexIndex> images(gadget->size());
        for (VertexIndex w = 0; w < gadget->size(); ++w)
            images[w] = phi_image(arc, w);
        return Morphism{gadget, product, std::move(images)};
    }

    auto ArrowResult::phi(VertexIndex tail, VertexIndex head) const -> Morphism
    {
        auto arc = digraph->arc_index(tail, head);
        if (! arc)
            throw InvalidStructure("(" + digraph->vertex(tail) + ", " + digraph->vertex(head) + ") is not an arc");
        return phi(*arc);
    }

    auto arrow_graph(const DigraphPtr & d, const GraphPtr & h, VertexIndex a, VertexIndex b) -> ArrowResult
    {
        if (a >= h->size() || b >= h->size())
            throw InvalidStructure("distinguished vertex is not in the gadget");
        if (a == b)
            throw InvalidStructure("distinguished vertices must differ");
        if (h->adjacent(a, b) && ! d->is_irreflexive())
            throw InvalidStructure("gadget has the edge {a, b}; a loop arc would produce a graph loop");

        vector<VertexId> vertices(d->vertices().begin(), d->vertices().end());
        for (auto [u, v] : d->arcs())
            for (VertexIndex w = 0; w < h->size(); ++w)
                if (w != a && w != b)
                    vertices.push_back(interior_vertex_id(d->vertex(u), d->vertex(v), h->vertex(w)));

        ArrowResult r;
        r.digraph = d;
        r.gadget = h;
        r.a = a;
        r.b = b;

        // Sorting the combined id list gives the product's vertex order; the
        // index tables are then filled by lookup.
        auto probe = Graph{vertices, {}};
        for (VertexIndex x = 0; x < d->size(); ++x)
            r.base_embedding.push_back(probe.require_index(d->vertex(x)));
        for (auto [u, v] : d->arcs()) {
            vector<VertexIndex> row(h->size(), Bitset::npos);
            for (VertexIndex w = 0; w < h->size(); ++w)
                if (w != a && w != b)
                    row[w] = probe.require_index(interior_vertex_id(d->vertex(u), d->vertex(v), h->vertex(w)));
            r.interior_index.push_back(std::move(row));
        }

        vector<IndexEdge> edges;
        for (size_t arc = 0; arc < d->arc_count(); ++arc)
            for (auto [s, t] : h->edges())
                edges.emplace_back(r.phi_image(arc, s), r.phi_image(arc, t));
        r.product = share(Graph::from_indices(vector<VertexId>(probe.vertices().begin(), probe.vertices().end()), edges));
        return r;
    }

    auto arrow_graph(const DigraphPtr & d, const GraphPtr & h, const VertexId & a, const VertexId & b) -> ArrowResult
    {
        return arrow_graph(d, h, h->require_index(a), h->require_index(b));
    }

    auto arrow_graph_morphism(const ArrowResult & from, const ArrowResult & to, std::span<const VertexIndex> h) -> Morphism
    {
        if (! same_graph(from.gadget, to.gadget) || from.a != to.a || from.b != to.b)
            throw InvalidStructure("arrow products use different gadgets");
        if (! is_digraph_homomorphism(h, *from.digraph, *to.digraph))
            throw InvalidStructure("map is not a digraph homomorphism");

        vector<VertexIndex> images(from.product->size(), Bitset::npos);
        for (VertexIndex x = 0; x < from.digraph->size(); ++x)
            images[from.base_embedding[x]] = to.base_embedding[h[x]];
        for (size_t arc = 0; arc < from.digraph->arc_count(); ++arc) {
            auto [u, v] = from.digraph->arcs()[arc];
            auto target_arc = *to.digraph->arc_index(h[u], h[v]);
            for (VertexIndex w = 0; w < from.gadget->size(); ++w)
                if (w != from.a && w != from.b)
                    images[from.interior_index[arc][w]] = to.interior_index[target_arc][w];
        }
        return Morphism{from.product, to.product, std::move(images)};
    }

    auto ArrowSlice::phi(size_t arc) const -> SliceMorphism
    {
        return SliceMorphism{gadget.slice(), object, arrow.phi(arc)};
    }

    auto arrow_slice(const DigraphPtr & d, const Gadget & g) -> ArrowSlice
    {
        auto arrow = arrow_graph(d, g.carrier_ptr(), g.a(), g.b());
        auto & f = g.slice();
        vector<VertexIndex> colours(arrow.product->size(), Bitset::npos);
        for (auto x : arrow.base_embedding)
            colours[x] = f.colour(g.a());
        for (size_t arc = 0; arc < d->arc_count(); ++arc)
            for (VertexIndex w = 0; w < g.carrier().size(); ++w)
                if (w != g.a() && w != g.b())
                    colours[arrow.interior_index[arc][w]] = f.colour(w);
        SliceObject object{Morphism{arrow.product, f.base_ptr(), std::move(colours)}};
        return ArrowSlice{g, std::move(arrow), std::move(object)};
    }

    auto arrow_morphism(const ArrowSlice & from, const ArrowSlice & to, std::span<const VertexIndex> h) -> SliceMorphism
    {
        if (! (from.gadget.slice() == to.gadget.slice()))
            throw InvalidStructure("arrow slices use different gadgets");
        return SliceMorphism{from.object, to.object, arrow_graph_morphism(from.arrow, to.arrow, h)};
    }
}
