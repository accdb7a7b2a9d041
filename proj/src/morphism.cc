#include <slicegra/morphism.hh>

#include <algorithm>

using std::map;
using std::size_t;
using std::vector;

namespace slicegra
{
    namespace
    {
        auto check_indices(std::span<const VertexIndex> images, const Graph & a, const Graph & b) -> void
        {
            if (images.size() != a.size())
                throw InvalidMap("map has " + std::to_string(images.size()) + " images for " + std::to_string(a.size()) +
                    " domain vertices");
            for (size_t v = 0; v < images.size(); ++v)
                if (images[v] >= b.size())
                    throw InvalidMap("image of '" + a.vertex(v) + "' is not a codomain vertex");
        }

        auto to_indices(const map<VertexId, VertexId> & named, const Graph & a, const Graph & b) -> vector<VertexIndex>
        {
            for (auto & [from, _] : named)
                if (! a.index_of(from))
                    throw InvalidMap("map assigns '" + from + "', which is not a domain vertex");
            vector<VertexIndex> images(a.size());
            for (size_t v = 0; v < a.size(); ++v) {
                auto it = named.find(a.vertex(v));
                if (it == named.end())
                    throw InvalidMap("map is not total: no image for '" + a.vertex(v) + "'");
                auto target = b.index_of(it->second);
                if (! target)
                    throw InvalidMap("image '" + it->second + "' of '" + a.vertex(v) + "' is not a codomain vertex");
                images[v] = *target;
            }
            return images;
        }
    }

    auto is_homomorphism(std::span<const VertexIndex> images, const Graph & a, const Graph & b) -> HomCheck
    {
        check_indices(images, a, b);
        for (auto [i, j] : a.edges())
            if (! b.adjacent(images[i], images[j]))
                return HomCheck{false, NamedEdge{a.vertex(i), a.vertex(j)}};
        return HomCheck{};
    }

    auto is_homomorphism(const map<VertexId, VertexId> & named, const Graph & a, const Graph & b) -> HomCheck
    {
        auto images = to_indices(named, a, b);
        return is_homomorphism(images, a, b);
    }

    auto is_digraph_homomorphism(std::span<const VertexIndex> images, const Digraph & a, const Digraph & b) -> bool
    {
        if (images.size() != a.size())
            return false;
        for (auto img : images)
            if (img >= b.size())
                return false;
        for (auto [i, j] : a.arcs())
            if (! b.has_arc(images[i], images[j]))
                return false;
        return true;
    }

    Morphism::Morphism(GraphPtr domain, GraphPtr codomain, vector<VertexIndex> images) :
        _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _images(std::move(images))
    {
        auto check = is_homomorphism(_images, *_domain, *_codomain);
        if (! check)
            throw NotAHomomorphism(*check.violating_edge,
                "edge {" + check.violating_edge->first + ", " + check.violating_edge->second + "} is not preserved");
    }

    auto Morphism::from_named(GraphPtr domain, GraphPtr codomain, const map<VertexId, VertexId> & named) -> Morphism
    {
        auto images = to_indices(named, *domain, *codomain);
        return Morphism{std::move(domain), std::move(codomain), std::move(images)};
    }

    auto Morphism::identity(GraphPtr g) -> Morphism
    {
        vector<VertexIndex> images(g->size());
        for (size_t v = 0; v < images.size(); ++v)
            images[v] = v;
        return Morphism{g, g, std::move(images)};
    }

    auto Morphism::image_of(const VertexId & v) const -> const VertexId &
    {
        return _codomain->vertex(_images[_domain->require_index(v)]);
    }

    auto Morphism::to_named() const -> map<VertexId, VertexId>
    {
        map<VertexId, VertexId> result;
        for (size_t v = 0; v < _images.size(); ++v)
            result.emplace(_domain->vertex(v), _codomain->vertex(_images[v]));
        return result;
    }

    auto Morphism::is_injective() const -> bool
    {
        vector<bool> hit(_codomain->size(), false);
        for (auto img : _images) {
            if (hit[img])
                return false;
            hit[img] = true;
        }
        return true;
    }

    auto Morphism::is_surjective() const -> bool
    {
        vector<bool> hit(_codomain->size(), false);
        size_t distinct = 0;
        for (auto img : _images)
            if (! hit[img]) {
                hit[img] = true;
                ++distinct;
            }
        return distinct == _codomain->size();
    }

    auto Morphism::operator==(const Morphism & other) const -> bool
    {
        return _images == other._images && same_graph(_domain, other._domain) && same_graph(_codomain, other._codomain);
    }

    auto same_graph(const GraphPtr & a, const GraphPtr & b) -> bool
    {
        return a == b || *a == *b;
    }

    auto compose(const Morphism & second, const Morphism & first) -> Morphism
    {
        if (! same_graph(first.codomain_ptr(), second.domain_ptr()))
            throw InvalidStructure("morphisms are not composable");
        vector<VertexIndex> images(first.domain().size());
        for (size_t v = 0; v < images.size(); ++v)
            images[v] = second(first(v));
        return Morphism{first.domain_ptr(), second.codomain_ptr(), std::move(images)};
    }

    SliceObject::SliceObject(Morphism structure_map) :
        _structure(std::move(structure_map))
    {
    }

    auto SliceObject::from_named(Graph carrier, Graph base, const map<VertexId, VertexId> & named) -> SliceObject
    {
        return from_named(share(std::move(carrier)), share(std::move(base)), named);
    }

    auto SliceObject::from_named(GraphPtr carrier, GraphPtr base, const map<VertexId, VertexId> & named) -> SliceObject
    {
        return SliceObject{Morphism::from_named(std::move(carrier), std::move(base), named)};
    }

    auto SliceObject::image() const -> vector<VertexIndex>
    {
        vector<VertexIndex> result(_structure.images().begin(), _structure.images().end());
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto SliceObject::restrict_to(std::span<const VertexIndex> keep) const -> SliceObject
    {
        auto sub = share(induced_subgraph(carrier(), keep));
        vector<VertexIndex> images(sub->size());
        for (size_t v = 0; v < sub->size(); ++v)
            images[v] = colour(carrier().require_index(sub->vertex(v)));
        return SliceObject{Morphism{sub, base_ptr(), std::move(images)}};
    }

    SliceMorphism::SliceMorphism(SliceObject source, SliceObject target, Morphism map) :
        _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map))
    {
        if (! same_graph(_source.base_ptr(), _target.base_ptr()))
            throw BaseMismatch("slice objects live over different base graphs");
        if (! same_graph(_map.domain_ptr(), _source.carrier_ptr()) || ! same_graph(_map.codomain_ptr(), _target.carrier_ptr()))
            throw InvalidStructure("map does not run between the carriers of the slice objects");
        for (size_t v = 0; v < _source.carrier().size(); ++v)
            if (_target.colour(_map(v)) != _source.colour(v))
                throw InvalidStructure("triangle does not commute at '" + _source.carrier().vertex(v) + "'");
    }

    auto SliceMorphism::identity(const SliceObject & x) -> SliceMorphism
    {
        return SliceMorphism{x, x, Morphism::identity(x.carrier_ptr())};
    }

    auto compose(const SliceMorphism & second, const SliceMorphism & first) -> SliceMorphism
    {
        return SliceMorphism{first.source(), second.target(), compose(second.map(), first.map())};
    }
}
