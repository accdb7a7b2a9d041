#include <slicegra/arrow.hh>
#include <slicegra/gadget_library.hh>
#include <slicegra/hom_search.hh>
#include <slicegra/serialization.hh>
#include <slicegra/universality.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <thread>

using namespace slicegra;

using std::cerr;
using std::cout;
using std::string;

namespace
{
    enum Exit : int
    {
        ok = 0,
        negative = 1,
        usage = 2
    };

    /// Input or usage problem detected after argument parsing.
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto emit(const Json & j) -> void
    {
        cout << dump(j);
    }

    auto load_json(const string & path) -> Json
    {
        return parse_json(read_file(path));
    }

    auto load_graph(const string & path) -> Graph
    {
        return parse_graph(read_file(path));
    }

    auto load_digraph(const string & path) -> Digraph
    {
        return parse_digraph(read_file(path));
    }

    auto is_builtin(const string & name) -> bool
    {
        auto names = builtin_gadget_names();
        string lower = name;
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
        return std::find(names.begin(), names.end(), lower) != names.end();
    }

    auto load_gadget_spec(const string & name_or_file) -> GadgetSpec
    {
        if (is_builtin(name_or_file))
            return builtin_gadget(name_or_file).spec();
        return gadget_spec_from_json(load_json(name_or_file));
    }

    auto load_gadget(const string & name_or_file) -> Gadget
    {
        auto checked = Gadget::validate(load_gadget_spec(name_or_file));
        if (auto defect = std::get_if<GadgetDefect>(&checked))
            throw UsageError("invalid gadget (" + string{to_string(defect->kind)} + "): " + defect->message);
        return std::get<Gadget>(std::move(checked));
    }

    auto print_graph(const Graph & g, const string & format) -> void
    {
        if (format == "edgelist")
            cout << to_edge_list(g);
        else if (format == "dot")
            cout << to_dot(g);
        else
            emit(to_json(g));
    }

    auto parse_arc(const string & text, const Digraph & d) -> std::pair<VertexIndex, VertexIndex>
    {
        auto comma = text.find(',');
        if (comma == string::npos)
            throw UsageError("--arc expects 'tail,head'");
        auto tail = d.index_of(text.substr(0, comma));
        auto head = d.index_of(text.substr(comma + 1));
        if (! tail || ! head || ! d.has_arc(*tail, *head))
            throw UsageError("'" + text + "' is not an arc of the digraph");
        return {*tail, *head};
    }

    auto warn_isolated(const Digraph & d) -> void
    {
        for (VertexIndex v = 0; v < d.size(); ++v)
            if (d.is_isolated(v))
                cerr << "note: vertex '" << d.vertex(v) << "' is isolated\n";
    }

    enum class DocumentKind
    {
        graph,
        digraph,
        slice
    };

    auto document_kind(const string & text) -> DocumentKind
    {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == string::npos || text[first] != '{')
            return DocumentKind::graph;
        auto j = parse_json(text);
        if (j.contains("carrier"))
            return DocumentKind::slice;
        if (j.contains("arcs"))
            return DocumentKind::digraph;
        return DocumentKind::graph;
    }

    auto hom_payload(std::size_t count, bool complete, const string & mode, Json listed) -> Json
    {
        Json j;
        j["mode"] = mode;
        if (mode == "exists")
            j["exists"] = count > 0;
        else
            j["count"] = count;
        if (mode == "list")
            j["homs"] = std::move(listed);
        if (! complete && mode != "exists")
            j["complete"] = false;
        return j;
    }

    struct Options
    {
        string input, second, gadget = "c3", base, digraph, arc, mode = "count", format = "json", a, b;
        std::size_t max_size = 2, max_carrier = 4, cap = default_digraph_cap;
        unsigned jobs = 1;
        bool connected_only = false, loops = false, allow_isolated = false, canonical = false, constructive = false,
             list = false;
    };
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"slicegra: slice categories of graphs, gadgets and universality checks"};
    app.require_subcommand(1);
    Options o;

    auto add_jobs = [&](CLI::App * c) {
        c->add_option("--jobs,-j", o.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
    };
    auto add_gadget = [&](CLI::App * c) {
        c->add_option("--gadget,-g", o.gadget, "Built-in gadget (c3, c4, p4, y) or gadget JSON file");
    };

    auto classify = app.add_subcommand("classify", "Is the slice over a graph universal? Exit 1 when not");
    classify->add_option("graph", o.input, "Graph file")->required();

    auto cone = app.add_subcommand("cone-classify", "Is the cone over a graph universal? Exit 1 when not");
    cone->add_option("graph", o.input, "Graph file")->required();

    auto arrow = app.add_subcommand("arrow", "Build the arrow slice D * gadget");
    arrow->add_option("digraph", o.input, "Digraph file")->required();
    add_gadget(arrow);
    arrow->add_option("--format", o.format, "json, edgelist or dot")->check(CLI::IsMember({"json", "edgelist", "dot"}));

    auto phi = app.add_subcommand("phi", "The gadget copy on one arc of D * gadget");
    phi->add_option("digraph", o.input, "Digraph file")->required();
    add_gadget(phi);
    phi->add_option("--arc", o.arc, "Arc as 'tail,head'")->required();

    auto verify = app.add_subcommand("verify-gadget", "Check that gadget homs into products are exactly the phi maps");
    add_gadget(verify);
    auto verify_size = verify->add_option("--max-size", o.max_size, "Sweep all digraphs up to this many vertices");
    verify->add_option("--digraph", o.digraph, "Check a single digraph instead")->excludes(verify_size);
    verify->add_option("--cap", o.cap, "Largest vertex count the enumerator accepts");
    add_jobs(verify);

    auto strong = app.add_subcommand("strong-replacement", "Do all homs H -> D * H land in one copy of H?");
    strong->add_option("graph", o.input, "Graph H")->required();
    strong->add_option("digraph", o.second, "Digraph D")->required();
    strong->add_option("--a", o.a, "Vertex glued to arc tails")->required();
    strong->add_option("--b", o.b, "Vertex glued to arc heads")->required();
    strong->add_flag("--loops", o.loops, "Allow loops (digraphs without isolated points)");

    auto homs = app.add_subcommand("homs", "Homomorphisms between graphs, digraphs or slice objects");
    homs->add_option("source", o.input, "Source file")->required();
    homs->add_option("target", o.second, "Target file")->required();
    homs->add_option("--base", o.base, "Require both slice objects to live over this graph");
    homs->add_option("--mode", o.mode, "exists, count or list")->check(CLI::IsMember({"exists", "count", "list"}));

    auto endos = app.add_subcommand("endos", "Classify the endomorphisms of a slice object");
    endos->add_option("slice", o.input, "Slice object file")->required();
    endos->add_flag("--constructive", o.constructive, "Constructive verdict (base must not be universal)");

    auto retract = app.add_subcommand("retract", "Retract a connected slice object over a short path");
    retract->add_option("slice", o.input, "Slice object file")->required();

    auto dichotomy = app.add_subcommand("dichotomy", "Rigid-or-proper sweep over a non-universal base");
    dichotomy->add_option("base", o.input, "Base graph file")->required();
    dichotomy->add_option("--max-carrier", o.max_carrier, "Largest carrier size")->check(CLI::Range(1, 6));
    dichotomy->add_flag("--connected-only", o.connected_only, "Skip disconnected carriers");
    add_jobs(dichotomy);

    auto embed = app.add_subcommand("embed-check", "Check h -> h * H is a bijection on hom sets");
    add_gadget(embed);
    embed->add_option("--max-size", o.max_size, "Largest digraph size");
    embed->add_option("--cap", o.cap, "Largest vertex count the enumerator accepts");
    add_jobs(embed);

    auto digraphs = app.add_subcommand("enumerate-digraphs", "List labelled digraphs on n vertices");
    digraphs->add_option("--max-size", o.max_size, "Number of vertices");
    digraphs->add_flag("--allow-isolated", o.allow_isolated, "Include digraphs with isolated points");
    digraphs->add_flag("--canonical", o.canonical, "One representative per isomorphism class");
    digraphs->add_option("--cap", o.cap, "Largest vertex count the enumerator accepts");

    auto gadget = app.add_subcommand("gadget", "Print a built-in gadget");
    gadget->add_option("name", o.gadget, "Gadget name");
    gadget->add_flag("--list", o.list, "List built-in gadget names");
    gadget->add_option("--format", o.format, "json, edgelist or dot")->check(CLI::IsMember({"json", "edgelist", "dot"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*classify) {
            auto g = share(load_graph(o.input));
            auto c = classify_slice_base(g);
            emit(to_json(c, *g));
            return c.universal ? Exit::ok : Exit::negative;
        }

        if (*cone) {
            auto g = load_graph(o.input);
            auto c = classify_cone_base(g);
            emit(to_json(c, g));
            return c.universal ? Exit::ok : Exit::negative;
        }

        if (*arrow) {
            auto d = share(load_digraph(o.input));
            warn_isolated(*d);
            auto s = arrow_slice(d, load_gadget(o.gadget));
            if (o.format == "json")
                emit(to_json(s.object));
            else
                print_graph(s.object.carrier(), o.format);
            return Exit::ok;
        }

        if (*phi) {
            auto d = share(load_digraph(o.input));
            auto s = arrow_slice(d, load_gadget(o.gadget));
            auto [tail, head] = parse_arc(o.arc, *d);
            emit(to_json(s.arrow.phi(tail, head)));
            return Exit::ok;
        }

        if (*verify) {
            auto spec = load_gadget_spec(o.gadget);
            GadgetReport report;
            if (! o.digraph.empty())
                report = verify_gadget(spec, share(load_digraph(o.digraph)));
            else {
                cerr << "verifying up to " << o.max_size << " vertices\n";
                report = verify_gadget_exhaustive(spec, o.max_size, o.jobs, o.cap);
            }
            emit(to_json(report));
            return report.pass ? Exit::ok : Exit::negative;
        }

        if (*strong) {
            auto h = share(load_graph(o.input));
            auto d = share(load_digraph(o.second));
            auto regime = o.loops ? ReplacementRegime::no_isolated_points : ReplacementRegime::irreflexive;
            auto r = check_strong_replacement(h, h->require_index(o.a), h->require_index(o.b), d, regime);
            Json j;
            j["verdict"] = r.holds ? "pass" : "fail";
            j["homs_checked"] = r.homs_checked;
            j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
            emit(j);
            return r.holds ? Exit::ok : Exit::negative;
        }

        if (*homs) {
            auto source_text = read_file(o.input);
            auto target_text = read_file(o.second);
            auto kind = document_kind(source_text);
            if (kind != document_kind(target_text))
                throw UsageError("source and target must both be graphs, digraphs or slice objects");
            Json listed = Json::array();
            auto record = [&](const Graph & a, const Graph & b, std::span<const VertexIndex> images) {
                Json m = Json::object();
                for (VertexIndex v = 0; v < images.size(); ++v)
                    m[a.vertex(v)] = b.vertex(images[v]);
                listed.push_back(m);
            };

            if (kind == DocumentKind::slice) {
                auto x = slice_from_json(parse_json(source_text));
                auto y = slice_from_json(parse_json(target_text));
                if (! o.base.empty()) {
                    auto base = share(load_graph(o.base));
                    if (! same_graph(base, x.base_ptr()) || ! same_graph(base, y.base_ptr()))
                        throw BaseMismatch("slice objects do not live over the given base");
                }
                std::size_t count = 0;
                auto r = for_each_slice_hom(x, y, [&](std::span<const VertexIndex> s) {
                    ++count;
                    if (o.mode == "list")
                        record(x.carrier(), y.carrier(), s);
                    return o.mode != "exists";
                });
                emit(hom_payload(count, r.complete, o.mode, listed));
                return Exit::ok;
            }
            if (! o.base.empty())
                throw UsageError("--base applies to slice objects only");

            if (kind == DocumentKind::digraph) {
                auto a = parse_digraph(source_text);
                auto b = parse_digraph(target_text);
                std::size_t count = 0;
                auto r = for_each_digraph_hom(a, b, [&](std::span<const VertexIndex> s) {
                    ++count;
                    if (o.mode == "list") {
                        Json m = Json::object();
                        for (VertexIndex v = 0; v < s.size(); ++v)
                            m[a.vertex(v)] = b.vertex(s[v]);
                        listed.push_back(m);
                    }
                    return o.mode != "exists";
                });
                emit(hom_payload(count, r.complete, o.mode, listed));
                return Exit::ok;
            }

            auto a = parse_graph(source_text);
            auto b = parse_graph(target_text);
            std::size_t count = 0;
            auto r = for_each_hom(a, b, {}, [&](std::span<const VertexIndex> s) {
                ++count;
                if (o.mode == "list")
                    record(a, b, s);
                return o.mode != "exists";
            });
            emit(hom_payload(count, r.complete, o.mode, listed));
            return Exit::ok;
        }

        if (*endos) {
            auto x = slice_from_json(load_json(o.input));
            if (o.constructive) {
                auto v = classify_slice_object(x);
                emit(to_json(v));
                return v.agrees_with_brute_force().value_or(true) ? Exit::ok : Exit::negative;
            }
            emit(to_json(classify_endomorphisms(x)));
            return Exit::ok;
        }

        if (*retract) {
            auto x = slice_from_json(load_json(o.input));
            emit(to_json(retract_slice_to_path(x), x));
            return Exit::ok;
        }

        if (*dichotomy) {
            auto base = share(load_graph(o.input));
            cerr << "sweeping carriers up to " << o.max_carrier << " vertices\n";
            auto report = dichotomy_sweep(base, o.max_carrier, o.connected_only, o.jobs);
            emit(to_json(report));
            return report.pass ? Exit::ok : Exit::negative;
        }

        if (*embed) {
            auto g = load_gadget(o.gadget);
            cerr << "verifying gadget up to " << o.max_size << " vertices\n";
            auto verified = verify_gadget_exhaustive(g.spec(), o.max_size, o.jobs, o.cap);
            if (! verified.pass) {
                Json j;
                j["verdict"] = "fail";
                j["gadget_report"] = to_json(verified);
                emit(j);
                return Exit::negative;
            }
            cerr << "checking hom-set bijections\n";
            auto report = full_embedding_check(g, o.max_size, o.jobs, o.cap);
            emit(to_json(report));
            return report.pass ? Exit::ok : Exit::negative;
        }

        if (*digraphs) {
            DigraphEnumeration options{! o.allow_isolated, o.canonical, o.cap};
            Json list = Json::array();
            for_each_digraph(o.max_size, options, [&](const Digraph & d) {
                list.push_back(to_json(d));
                return true;
            });
            Json j;
            j["vertices"] = o.max_size;
            j["count"] = list.size();
            j["digraphs"] = list;
            emit(j);
            return Exit::ok;
        }

        if (*gadget) {
            if (o.list) {
                emit(Json(builtin_gadget_names()));
                return Exit::ok;
            }
            auto g = builtin_gadget(o.gadget);
            if (o.format == "json")
                emit(to_json(g));
            else
                print_graph(g.carrier(), o.format);
            return Exit::ok;
        }
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }

    return Exit::usage;
}
