#include <slicegra/serialization.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace slicegra
{
    namespace
    {
        auto string_list(const Json & j, const char * what) -> vector<string>
        {
            if (! j.is_array())
                throw ParseError(string{what} + " must be an array");
            vector<string> result;
            for (auto & e : j) {
                if (! e.is_string())
                    throw ParseError(string{what} + " entries must be strings");
                result.push_back(e.get<string>());
            }
            return result;
        }

        auto pair_list(const Json & j, const char * what) -> vector<NamedEdge>
        {
            if (! j.is_array())
                throw ParseError(string{what} + " must be an array");
            vector<NamedEdge> result;
            for (auto & e : j) {
                if (! e.is_array() || e.size() != 2 || ! e[0].is_string() || ! e[1].is_string())
                    throw ParseError(string{what} + " entries must be [\"u\", \"v\"] pairs");
                result.emplace_back(e[0].get<string>(), e[1].get<string>());
            }
            return result;
        }

        auto require(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw ParseError(string{"missing field \""} + key + "\"");
            return j.at(key);
        }

        template <typename Out>
        auto parse_lines(const string & text, Out && out) -> void
        {
            std::istringstream in(text);
            string line;
            std::size_t number = 0;
            while (std::getline(in, line)) {
                ++number;
                if (auto hash = line.find('#'); hash != string::npos)
                    line.erase(hash);
                std::istringstream words(line);
                vector<string> tokens;
                for (string w; words >> w;)
                    tokens.push_back(w);
                if (tokens.empty())
                    continue;
                if (tokens.size() > 2)
                    throw ParseError("line " + std::to_string(number) + ": expected \"u v\" or \"u\"");
                out(tokens);
            }
        }

        auto first_significant(const string & text) -> char
        {
            for (char c : text)
                if (! std::isspace(static_cast<unsigned char>(c)))
                    return c;
            return '\0';
        }
    }

    auto to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto & [u, v] : g.named_edges())
            edges.push_back(Json::array({u, v}));
        return Json{{"vertices", Json(vector<string>(g.vertices().begin(), g.vertices().end()))}, {"edges", edges}};
    }

    auto to_json(const Digraph & d) -> Json
    {
        Json arcs = Json::array();
        for (auto [i, j] : d.arcs())
            arcs.push_back(Json::array({d.vertex(i), d.vertex(j)}));
        return Json{{"vertices", Json(vector<string>(d.vertices().begin(), d.vertices().end()))}, {"arcs", arcs}};
    }

    auto to_json(const Morphism & m) -> Json
    {
        Json result = Json::object();
        for (auto & [k, v] : m.to_named())
            result[k] = v;
        return result;
    }

    auto to_json(const SliceObject & x) -> Json
    {
        return Json{{"carrier", to_json(x.carrier())}, {"base", to_json(x.base())}, {"map", to_json(x.structure_map())}};
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        auto vertices = string_list(require(j, "vertices"), "vertices");
        auto edges = j.contains("edges") ? pair_list(j.at("edges"), "edges") : vector<NamedEdge>{};
        try {
            return Graph{vertices, edges};
        }
        catch (const InvalidStructure & e) {
            throw ParseError(e.what());
        }
    }

    auto digraph_from_json(const Json & j) -> Digraph
    {
        auto vertices = string_list(require(j, "vertices"), "vertices");
        auto arcs = j.contains("arcs") ? pair_list(j.at("arcs"), "arcs") : vector<NamedEdge>{};
        try {
            return Digraph{vertices, arcs};
        }
        catch (const InvalidStructure & e) {
            throw ParseError(e.what());
        }
    }

    auto map_from_json(const Json & j) -> std::map<VertexId, VertexId>
    {
        if (! j.is_object())
            throw ParseError("map must be an object");
        std::map<VertexId, VertexId> result;
        for (auto & [k, v] : j.items()) {
            if (! v.is_string())
                throw ParseError("map values must be strings");
            result.emplace(k, v.get<string>());
        }
        return result;
    }

    auto slice_from_json(const Json & j) -> SliceObject
    {
        auto carrier = graph_from_json(require(j, "carrier"));
        auto base = graph_from_json(require(j, "base"));
        auto map = map_from_json(require(j, "map"));
        return SliceObject::from_named(std::move(carrier), std::move(base), map);
    }

    auto graph_from_edge_list(const string & text) -> Graph
    {
        vector<string> vertices;
        vector<NamedEdge> edges;
        parse_lines(text, [&](const vector<string> & t) {
            vertices.insert(vertices.end(), t.begin(), t.end());
            if (t.size() == 2)
                edges.emplace_back(t[0], t[1]);
        });
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        try {
            return Graph{vertices, edges};
        }
        catch (const InvalidStructure & e) {
            throw ParseError(e.what());
        }
    }

    auto digraph_from_edge_list(const string & text) -> Digraph
    {
        vector<string> vertices;
        vector<NamedEdge> arcs;
        parse_lines(text, [&](const vector<string> & t) {
            vertices.insert(vertices.end(), t.begin(), t.end());
            if (t.size() == 2)
                arcs.emplace_back(t[0], t[1]);
        });
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        return Digraph{vertices, arcs};
    }

    auto to_edge_list(const Graph & g) -> string
    {
        string out;
        for (VertexIndex v = 0; v < g.size(); ++v)
            if (g.degree(v) == 0)
                out += g.vertex(v) + "\n";
        for (auto & [u, v] : g.named_edges())
            out += u + " " + v + "\n";
        return out;
    }

    auto to_edge_list(const Digraph & d) -> string
    {
        string out;
        for (VertexIndex v = 0; v < d.size(); ++v)
            if (d.is_isolated(v))
                out += d.vertex(v) + "\n";
        for (auto [i, j] : d.arcs())
            out += d.vertex(i) + " " + d.vertex(j) + "\n";
        return out;
    }

    auto to_dot(const Graph & g) -> string
    {
        string out = "graph G {\n";
        for (auto & v : g.vertices())
            out += "  \"" + v + "\";\n";
        for (auto & [u, v] : g.named_edges())
            out += "  \"" + u + "\" -- \"" + v + "\";\n";
        return out + "}\n";
    }

    auto parse_json(const string & text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw ParseError(string{"malformed JSON: "} + e.what());
        }
    }

    auto parse_graph(const string & text) -> Graph
    {
        if (first_significant(text) == '{')
            return graph_from_json(parse_json(text));
        return graph_from_edge_list(text);
    }

    auto parse_digraph(const string & text) -> Digraph
    {
        if (first_significant(text) == '{')
            return digraph_from_json(parse_json(text));
        return digraph_from_edge_list(text);
    }

    auto dump(const Json & j) -> string
    {
        return j.dump(2) + "\n";
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}
