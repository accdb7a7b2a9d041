#ifndef SLICEGRA_GADGET_HH
#define SLICEGRA_GADGET_HH

#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>
#include <slicegra/serialization.hh>

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace slicegra
{
    /// Unvalidated gadget data, as read from a file or produced by a mutation.
    struct GadgetSpec
    {
        std::string name;
        GraphPtr carrier;
        GraphPtr base;
        std::map<VertexId, VertexId> map;
        VertexId a, b;
    };

    enum class GadgetDefectKind
    {
        endpoint_missing,
        endpoints_equal,
        invalid_structure_map,
        endpoints_coloured_apart,
        endpoints_adjacent
    };

    auto to_string(GadgetDefectKind k) -> const char *;

    struct GadgetDefect
    {
        GadgetDefectKind kind;
        std::string message;
        /// Carrier edge not preserved by the structure map, for invalid_structure_map.
        std::optional<NamedEdge> edge;
    };

    class InvalidGadget : public InvalidStructure
    {
    public:
        explicit InvalidGadget(GadgetDefect d) :
            InvalidStructure(d.message),
            defect(std::move(d))
        {
        }

        GadgetDefect defect;
    };

    /**
     * A slice object (H, f) with distinguished vertices a != b such that
     * f(a) = f(b) and {a, b} is not an edge of H.
     */
    class Gadget
    {
    public:
        /// Throws InvalidGadget.
        Gadget(SliceObject slice, VertexIndex a, VertexIndex b, std::string name = {});

        static auto validate(const GadgetSpec & spec) -> std::variant<Gadget, GadgetDefect>;
        /// Throws InvalidGadget.
        static auto from_spec(const GadgetSpec & spec) -> Gadget;

        auto slice() const -> const SliceObject & { return _slice; }
        auto carrier() const -> const Graph & { return _slice.carrier(); }
        auto carrier_ptr() const -> const GraphPtr & { return _slice.carrier_ptr(); }
        auto base() const -> const Graph & { return _slice.base(); }
        auto a() const -> VertexIndex { return _a; }
        auto b() const -> VertexIndex { return _b; }
        auto name() const -> const std::string & { return _name; }
        auto spec() const -> GadgetSpec;

    private:
        SliceObject _slice;
        VertexIndex _a, _b;
        std::string _name;
    };

    /// Slice object fields plus "a" and "b" (and an optional "name").
    auto to_json(const GadgetSpec & spec) -> Json;
    auto to_json(const Gadget & g) -> Json;
    auto gadget_spec_from_json(const Json & j) -> GadgetSpec;
}

#endif
