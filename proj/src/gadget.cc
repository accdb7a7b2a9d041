#include <slicegra/gadget.hh>

namespace slicegra
{
    namespace
    {
        auto defect_of(const Graph & carrier, const Graph & base, VertexIndex a, VertexIndex b, std::span<const VertexIndex> colours)
            -> std::optional<GadgetDefect>
        {
            if (a == b)
                return GadgetDefect{GadgetDefectKind::endpoints_equal, "distinguished vertices coincide", std::nullopt};
            if (colours[a] != colours[b])
                return GadgetDefect{GadgetDefectKind::endpoints_coloured_apart,
                    "f(" + carrier.vertex(a) + ") = " + base.vertex(colours[a]) + " differs from f(" + carrier.vertex(b) +
                        ") = " + base.vertex(colours[b]),
                    std::nullopt};
            if (carrier.adjacent(a, b))
                return GadgetDefect{GadgetDefectKind::endpoints_adjacent,
                    "distinguished vertices " + carrier.vertex(a) + " and " + carrier.vertex(b) + " are adjacent", std::nullopt};
            return std::nullopt;
        }
    }

    auto to_string(GadgetDefectKind k) -> const char *
    {
        switch (k) {
            case GadgetDefectKind::endpoint_missing: return "endpoint_missing";
            case GadgetDefectKind::endpoints_equal: return "endpoints_equal";
            case GadgetDefectKind::invalid_structure_map: return "invalid_structure_map";
            case GadgetDefectKind::endpoints_coloured_apart: return "endpoints_coloured_apart";
            case GadgetDefectKind::endpoints_adjacent: return "endpoints_adjacent";
        }
        return "?";
    }

    Gadget::Gadget(SliceObject slice, VertexIndex a, VertexIndex b, std::string name) :
        _slice(std::move(slice)),
        _a(a),
        _b(b),
        _name(std::move(name))
    {
        if (a >= carrier().size() || b >= carrier().size())
            throw InvalidGadget(GadgetDefect{GadgetDefectKind::endpoint_missing, "distinguished vertex out of range", std::nullopt});
        if (auto d = defect_of(carrier(), base(), a, b, _slice.structure_map().images()))
            throw InvalidGadget(*d);
    }

    auto Gadget::validate(const GadgetSpec & spec) -> std::variant<Gadget, GadgetDefect>
    {
        auto a = spec.carrier->index_of(spec.a), b = spec.carrier->index_of(spec.b);
        if (! a || ! b)
            return GadgetDefect{GadgetDefectKind::endpoint_missing,
                "distinguished vertex '" + (a ? spec.b : spec.a) + "' is not in the carrier", std::nullopt};
        try {
            auto slice = SliceObject::from_named(spec.carrier, spec.base, spec.map);
            if (auto d = defect_of(*spec.carrier, *spec.base, *a, *b, slice.structure_map().images()))
                return *d;
            return Gadget{std::move(slice), *a, *b, spec.name};
        }
        catch (const NotAHomomorphism & e) {
            return GadgetDefect{GadgetDefectKind::invalid_structure_map, e.what(), e.violating_edge};
        }
        catch (const InvalidMap & e) {
            return GadgetDefect{GadgetDefectKind::invalid_structure_map, e.what(), std::nullopt};
        }
    }

    auto Gadget::from_spec(const GadgetSpec & spec) -> Gadget
    {
        auto result = validate(spec);
        if (auto d = std::get_if<GadgetDefect>(&result))
            throw InvalidGadget(*d);
        return std::get<Gadget>(std::move(result));
    }

    auto Gadget::spec() const -> GadgetSpec
    {
        return GadgetSpec{_name, carrier_ptr(), _slice.base_ptr(), _slice.structure_map().to_named(), carrier().vertex(_a),
            carrier().vertex(_b)};
    }

    auto to_json(const GadgetSpec & spec) -> Json
    {
        Json map = Json::object();
        for (auto & [k, v] : spec.map)
            map[k] = v;
        Json j = Json::object();
        if (! spec.name.empty())
            j["name"] = spec.name;
        j["carrier"] = to_json(*spec.carrier);
        j["base"] = to_json(*spec.base);
        j["map"] = map;
        j["a"] = spec.a;
        j["b"] = spec.b;
        return j;
    }

    auto to_json(const Gadget & g) -> Json
    {
        return to_json(g.spec());
    }

    auto gadget_spec_from_json(const Json & j) -> GadgetSpec
    {
        if (! j.is_object())
            throw ParseError("gadget must be a JSON object");
        for (auto key : {"carrier", "base", "map", "a", "b"})
            if (! j.contains(key))
                throw ParseError(std::string{"gadget is missing field \""} + key + "\"");
        if (! j.at("a").is_string() || ! j.at("b").is_string())
            throw ParseError("gadget fields \"a\" and \"b\" must be strings");
        GadgetSpec spec;
        spec.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
        spec.carrier = share(graph_from_json(j.at("carrier")));
        spec.base = share(graph_from_json(j.at("base")));
        spec.map = map_from_json(j.at("map"));
        spec.a = j.at("a").get<std::string>();
        spec.b = j.at("b").get<std::string>();
        return spec;
    }
}
