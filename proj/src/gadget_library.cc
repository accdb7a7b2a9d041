#include <slicegra/gadget_library.hh>
#include <slicegra/parallel.hh>

#include <algorithm>
#include <cctype>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace slicegra
{
    namespace
    {
        auto lettered_path(size_t length) -> Graph
        {
            vector<VertexId> vertices;
            vector<NamedEdge> edges;
            for (size_t i = 0; i <= length; ++i)
                vertices.push_back(string(1, static_cast<char>('a' + i)));
            for (size_t i = 0; i < length; ++i)
                edges.emplace_back(vertices[i], vertices[i + 1]);
            return Graph{vertices, edges};
        }

        auto lower(string s) -> string
        {
            std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
            return s;
        }

        auto path_gadget(const string & name, Graph base, const vector<int> & colours) -> Gadget
        {
            auto carrier = share(lettered_path(colours.size() - 1));
            std::map<VertexId, VertexId> map;
            for (size_t i = 0; i < colours.size(); ++i)
                map.emplace(carrier->vertex(i), std::to_string(colours[i]));
            auto slice = SliceObject::from_named(carrier, share(std::move(base)), map);
            return Gadget{std::move(slice), 0, colours.size() - 1, name};
        }

        auto defect_report(const GadgetDefect & d, size_t max_size) -> GadgetReport
        {
            GadgetReport r;
            r.max_size = max_size;
            r.pass = false;
            GadgetCounterexample c;
            c.kind = CounterexampleKind::gadget_defect;
            c.defect = d;
            r.counterexample = std::move(c);
            return r;
        }
    }

    auto builtin_gadget_names() -> vector<string>
    {
        return {"c3", "c4", "p4", "y"};
    }

    auto builtin_base(const string & name) -> Graph
    {
        auto key = lower(name);
        if (key == "c3")
            return build_cycle(3, "");
        if (key == "c4")
            return build_cycle(4, "");
        if (key == "p4")
            return build_path(4, "");
        if (key == "y")
            return Graph{{"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"1", "3"}}};
        throw UnknownGadget("unknown built-in gadget '" + name + "' (expected c3, c4, p4 or y)");
    }

    auto builtin_gadget(const string & name) -> Gadget
    {
        auto key = lower(name);
        auto base = builtin_base(key);
        if (key == "c3")
            return path_gadget(key, std::move(base), {0, 1, 2, 0});
        if (key == "c4")
            return path_gadget(key, std::move(base), {0, 1, 2, 3, 0});
        if (key == "p4")
            return path_gadget(key, std::move(base), {0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 0});
        return path_gadget(key, std::move(base), {0, 1, 2, 1, 3, 1, 0});
    }

    auto build_gk(size_t k) -> GkGraph
    {
        if (k < 2)
            throw InvalidStructure("G_k needs k >= 2, got " + std::to_string(k));
        const long m = static_cast<long>(2 * k - 1);
        const long kk = static_cast<long>(k);

        // Anchor labels in C_{2k-1}; K is a, M is b, both labelled k.
        std::map<string, long> label{{"A", 0}, {"B", kk}, {"C", 1}, {"D", 1}, {"E", 1}, {"F", 0}, {"H", 0}, {"I", 1},
            {"K", kk}, {"L", 0}, {"M", kk}, {"N", 1}, {"P", 0}};
        vector<std::pair<string, string>> solid{
            {"A", "E"}, {"E", "F"}, {"F", "D"}, {"H", "D"}, {"C", "H"}, {"A", "I"}, {"L", "D"}, {"N", "P"}, {"P", "C"}};
        vector<std::pair<string, string>> dotted{{"A", "B"}, {"B", "C"}, {"I", "K"}, {"K", "L"}, {"L", "M"}, {"M", "N"}};

        vector<VertexId> vertices;
        for (auto & [v, _] : label)
            vertices.push_back(v);
        vector<NamedEdge> edges(solid.begin(), solid.end());
        std::map<VertexId, VertexId> hom;
        auto mod = [m](long x) { return ((x % m) + m) % m; };

        for (auto & [from, to] : dotted) {
            long start = label[from], end = label[to];
            // Walk k steps around the odd cycle in whichever direction lands on the end label.
            long step = mod(end - start) == kk ? 1 : -1;
            if (mod(start + step * kk) != end)
                throw InvalidStructure("no length-k walk between labels");
            string previous = from;
            for (size_t i = 1; i < k; ++i) {
                string inner = from + to + std::to_string(i);
                vertices.push_back(inner);
                label[inner] = mod(start + step * static_cast<long>(i));
                edges.emplace_back(previous, inner);
                previous = inner;
            }
            edges.emplace_back(previous, to);
        }

        auto graph = share(Graph{vertices, edges});
        auto cycle = share(build_cycle(static_cast<size_t>(m), ""));
        for (auto & [v, l] : label)
            hom.emplace(v, std::to_string(l));
        return GkGraph{graph, graph->require_index("K"), graph->require_index("M"), Morphism::from_named(graph, cycle, hom)};
    }

    auto to_string(CounterexampleKind k) -> const char *
    {
        switch (k) {
            case CounterexampleKind::gadget_defect: return "gadget_defect";
            case CounterexampleKind::extra_hom: return "extra_hom";
            case CounterexampleKind::missing_phi: return "missing_phi";
        }
        return "?";
    }

    auto verify_gadget(const Gadget & g, const DigraphPtr & d) -> GadgetReport
    {
        if (d->has_isolated_point())
            throw IsolatedPoint("digraph has an isolated point; the gadget condition quantifies over digraphs without them");

        auto product = arrow_slice(d, g);
        std::map<vector<VertexIndex>, size_t> expected;
        for (size_t arc = 0; arc < d->arc_count(); ++arc) {
            auto phi = product.arrow.phi(arc);
            expected.emplace(vector<VertexIndex>(phi.images().begin(), phi.images().end()), arc);
        }

        GadgetReport report;
        report.digraphs_checked = 1;
        report.max_size = d->size();
        report.digraphs_per_size.assign(d->size() + 1, 0);
        report.digraphs_per_size[d->size()] = 1;

        std::set<vector<VertexIndex>> seen;
        for_each_slice_hom(g.slice(), product.object, [&](std::span<const VertexIndex> s) {
            ++report.homs_found;
            vector<VertexIndex> images(s.begin(), s.end());
            if (! expected.contains(images)) {
                if (! report.counterexample) {
                    GadgetCounterexample c;
                    c.kind = CounterexampleKind::extra_hom;
                    c.digraph = *d;
                    c.map = Morphism{g.carrier_ptr(), product.arrow.product, images}.to_named();
                    report.counterexample = std::move(c);
                }
                report.pass = false;
            }
            seen.insert(std::move(images));
            return true;
        });

        if (! report.counterexample)
            for (auto & [images, arc] : expected)
                if (! seen.contains(images)) {
                    GadgetCounterexample c;
                    c.kind = CounterexampleKind::missing_phi;
                    c.digraph = *d;
                    c.arc = NamedEdge{d->vertex(d->arcs()[arc].first), d->vertex(d->arcs()[arc].second)};
                    c.map = product.arrow.phi(arc).to_named();
                    report.counterexample = std::move(c);
                    report.pass = false;
                    break;
                }
        return report;
    }

    auto verify_gadget(const GadgetSpec & spec, const DigraphPtr & d) -> GadgetReport
    {
        auto validated = Gadget::validate(spec);
        if (auto defect = std::get_if<GadgetDefect>(&validated))
            return defect_report(*defect, d->size());
        return verify_gadget(std::get<Gadget>(validated), d);
    }

    auto verify_gadget_exhaustive(const GadgetSpec & spec, size_t max_n, unsigned jobs, size_t cap) -> GadgetReport
    {
        if (max_n > cap)
            throw CapExceeded("digraph enumeration is capped at " + std::to_string(cap) + " vertices, asked for " +
                std::to_string(max_n));
        auto validated = Gadget::validate(spec);
        if (auto defect = std::get_if<GadgetDefect>(&validated))
            return defect_report(*defect, max_n);
        auto & gadget = std::get<Gadget>(validated);

        vector<DigraphPtr> digraphs;
        for (size_t n = 1; n <= max_n; ++n)
            for_each_digraph(n, DigraphEnumeration{true, false, cap}, [&](const Digraph & d) {
                digraphs.push_back(share(d));
                return true;
            });

        vector<GadgetReport> results(digraphs.size());
        parallel_for(digraphs.size(), jobs, [&](size_t i) { results[i] = verify_gadget(gadget, digraphs[i]); });

        GadgetReport merged;
        merged.max_size = max_n;
        merged.digraphs_per_size.assign(max_n + 1, 0);
        for (size_t i = 0; i < results.size(); ++i) {
            auto & r = results[i];
            ++merged.digraphs_checked;
            ++merged.digraphs_per_size[digraphs[i]->size()];
            merged.homs_found += r.homs_found;
            if (! r.pass) {
                merged.pass = false;
                if (! merged.counterexample)
                    merged.counterexample = r.counterexample;
            }
        }
        return merged;
    }

    auto single_vertex_mutations(const Gadget & g) -> vector<GadgetSpec>
    {
        vector<GadgetSpec> result;
        auto original = g.spec();
        for (auto & v : g.carrier().vertices())
            for (auto & c : g.base().vertices()) {
                if (original.map.at(v) == c)
                    continue;
                auto mutated = original;
                mutated.map[v] = c;
                mutated.name = original.name + "[" + v + "->" + c + "]";
                result.push_back(std::move(mutated));
            }
        return result;
    }

    auto check_strong_replacement(const GraphPtr & h, VertexIndex a, VertexIndex b, const DigraphPtr & d, ReplacementRegime regime)
        -> StrongReplacementResult
    {
        if (regime == ReplacementRegime::irreflexive && ! d->is_irreflexive())
            throw InvalidStructure("digraph has a loop; strong replacement quantifies over irreflexive digraphs");
        if (regime == ReplacementRegime::no_isolated_points && d->has_isolated_point())
            throw InvalidStructure("digraph has an isolated point");

        auto product = arrow_graph(d, h, a, b);
        vector<Bitset> copies;
        for (size_t arc = 0; arc < d->arc_count(); ++arc) {
            Bitset copy(product.product->size());
            for (VertexIndex w = 0; w < h->size(); ++w)
                copy.set(product.phi_image(arc, w));
            copies.push_back(std::move(copy));
        }

        StrongReplacementResult result;
        for_each_hom(*h, *product.product, {}, [&](std::span<const VertexIndex> s) {
            ++result.homs_checked;
            bool inside = std::any_of(copies.begin(), copies.end(), [&](const Bitset & copy) {
                return std::all_of(s.begin(), s.end(), [&](VertexIndex x) { return copy.test(x); });
            });
            if (inside)
                return true;
            result.holds = false;
            result.witness.emplace(h, product.product, vector<VertexIndex>(s.begin(), s.end()));
            return false;
        });
        return result;
    }

    auto to_json(const GadgetReport & r) -> Json
    {
        Json j;
        j["verdict"] = r.pass ? "pass" : "fail";
        j["digraphs_checked"] = r.digraphs_checked;
        j["max_size"] = r.max_size;
        Json per = Json::object();
        for (size_t n = 1; n < r.digraphs_per_size.size(); ++n)
            per[std::to_string(n)] = r.digraphs_per_size[n];
        j["digraphs_per_size"] = per;
        j["homs_found"] = r.homs_found;
        if (r.counterexample) {
            auto & c = *r.counterexample;
            Json cj;
            cj["kind"] = to_string(c.kind);
            if (c.digraph)
                cj["digraph"] = to_json(*c.digraph);
            if (c.arc)
                cj["arc"] = Json::array({c.arc->first, c.arc->second});
            if (! c.map.empty()) {
                Json map = Json::object();
                for (auto & [k, v] : c.map)
                    map[k] = v;
                cj["map"] = map;
            }
            if (c.defect) {
                cj["defect"] = to_string(c.defect->kind);
                cj["message"] = c.defect->message;
                if (c.defect->edge)
                    cj["edge"] = Json::array({c.defect->edge->first, c.defect->edge->second});
            }
            j["counterexample"] = cj;
        }
        else
            j["counterexample"] = nullptr;
        return j;
    }
}
