#ifndef SLICEGRA_SERIALIZATION_HH
#define SLICEGRA_SERIALIZATION_HH

#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace slicegra
{
    using Json = nlohmann::ordered_json;

    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // JSON documents:
    //   graph   {"vertices": [...], "edges": [["u","v"], ...]}
    //   digraph {"vertices": [...], "arcs": [["u","v"], ...]}
    //   slice   {"carrier": <graph>, "base": <graph>, "map": {"u": "x", ...}}
    // Serialized vertices and edges are in lexicographic order.

    auto to_json(const Graph & g) -> Json;
    auto to_json(const Digraph & d) -> Json;
    auto to_json(const SliceObject & x) -> Json;
    auto to_json(const Morphism & m) -> Json;

    auto graph_from_json(const Json & j) -> Graph;
    auto digraph_from_json(const Json & j) -> Digraph;
    auto slice_from_json(const Json & j) -> SliceObject;
    auto map_from_json(const Json & j) -> std::map<VertexId, VertexId>;

    /// Whitespace-separated text: one "u v" edge per line, a lone "u" declares
    /// an isolated vertex, '#' starts a comment.
    auto graph_from_edge_list(const std::string & text) -> Graph;
    auto digraph_from_edge_list(const std::string & text) -> Digraph;
    auto to_edge_list(const Graph & g) -> std::string;
    auto to_edge_list(const Digraph & d) -> std::string;
    auto to_dot(const Graph & g) -> std::string;

    /// Accept either JSON (first non-blank character '{') or edge-list text.
    auto parse_graph(const std::string & text) -> Graph;
    auto parse_digraph(const std::string & text) -> Digraph;
    auto parse_json(const std::string & text) -> Json;

    /// Canonical text form: two-space indented JSON with a trailing newline.
    auto dump(const Json & j) -> std::string;

    auto read_file(const std::string & path) -> std::string;
}

#endif
