#include <slicegra/parallel.hh>
#include <slicegra/universality.hh>

#include <algorithm>
#include <deque>
#include <random>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace slicegra
{
    namespace
    {
        auto pattern_embedding(Pattern p, const GraphPtr & host, vector<VertexIndex> images) -> PatternWitness
        {
            return PatternWitness{p, Morphism{share(pattern_graph(p)), host, std::move(images)}};
        }

        /// Vertices of the component of `start`, walked from its least end (or
        /// least vertex, for a cycle). Requires every degree in the component <= 2.
        auto walk_component(const Graph & g, const vector<VertexIndex> & component) -> vector<VertexIndex>
        {
            VertexIndex start = component.front();
            for (auto v : component)
                if (g.degree(v) <= 1) {
                    start = v;
                    break;
                }
            vector<VertexIndex> order{start};
            VertexIndex previous = Bitset::npos, current = start;
            while (order.size() < component.size()) {
                VertexIndex next = Bitset::npos;
                for (auto w : g.neighbours(current))
                    if (w != previous) {
                        next = w;
                        break;
                    }
                if (next == Bitset::npos || next == start)
                    break;
                order.push_back(next);
                previous = current;
                current = next;
            }
            return order;
        }

        auto component_edge_count(const Graph & g, const vector<VertexIndex> & component) -> size_t
        {
            size_t twice = 0;
            for (auto v : component)
                twice += g.degree(v);
            return twice / 2;
        }

        /// The image of a connected slice object as a path of base vertices,
        /// ordered along the base component from its lexicographically smaller end.
        auto image_path_of(const SliceObject & x) -> vector<VertexIndex>
        {
            auto image = x.image();
            if (image.empty())
                return image;
            auto & base = x.base();
            auto components = connected_components(base);
            auto comp = std::find_if(components.begin(), components.end(), [&](const vector<VertexIndex> & c) {
                return std::binary_search(c.begin(), c.end(), image.front());
            });
            for (auto v : *comp)
                if (base.degree(v) > 2)
                    throw InvalidStructure("image does not lie on a path component of the base");
            if (component_edge_count(base, *comp) != comp->size() - 1)
                throw InvalidStructure("image does not lie on a path component of the base");
            auto order = walk_component(base, *comp);
            vector<VertexIndex> result;
            for (auto v : order)
                if (std::binary_search(image.begin(), image.end(), v))
                    result.push_back(v);
            if (result.size() != image.size())
                throw InvalidStructure("image is not contained in one base component");
            return result;
        }

        /// Lexicographically least walk c0..cm in the carrier with colour(ci) == colours[i].
        auto find_copy(const SliceObject & x, std::span<const VertexIndex> colours) -> optional<vector<VertexIndex>>
        {
            vector<VertexIndex> chosen;
            std::function<bool()> extend = [&]() -> bool {
                if (chosen.size() == colours.size())
                    return true;
                auto want = colours[chosen.size()];
                auto try_vertex = [&](VertexIndex v) {
                    if (x.colour(v) != want)
                        return false;
                    chosen.push_back(v);
                    if (extend())
                        return true;
                    chosen.pop_back();
                    return false;
                };
                if (chosen.empty()) {
                    for (VertexIndex v = 0; v < x.carrier().size(); ++v)
                        if (try_vertex(v))
                            return true;
                }
                else
                    for (auto v : x.carrier().neighbours(chosen.back()))
                        if (try_vertex(v))
                            return true;
                return false;
            };
            if (colours.empty() || ! extend())
                return std::nullopt;
            return chosen;
        }

        auto position_in(std::span<const VertexIndex> path, VertexIndex v) -> size_t
        {
            return static_cast<size_t>(std::find(path.begin(), path.end(), v) - path.begin());
        }

        /// Where position i of a (*)-path of length `longer` lands on one of length `shorter`.
        auto fold_position(size_t i, size_t longer, size_t shorter) -> size_t
        {
            if (i == longer)
                return shorter;
            if (i + 1 <= shorter)
                return i;
            return i % 2 == 0 ? shorter - 1 : shorter - 2;
        }

        /// Image of every carrier vertex under the retraction (identity for a certificate).
        auto retraction_images(const PathRetraction & r, size_t size) -> vector<VertexIndex>
        {
            if (auto plan = std::get_if<RetractionPlan>(&r))
                return vector<VertexIndex>(plan->retraction.map().images().begin(), plan->retraction.map().images().end());
            vector<VertexIndex> identity(size);
            for (size_t v = 0; v < size; ++v)
                identity[v] = v;
            return identity;
        }

        auto is_subset(const vector<VertexIndex> & a, const vector<VertexIndex> & b) -> bool
        {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        }

        auto named_list(const Graph & g, std::span<const VertexIndex> vs) -> Json
        {
            Json out = Json::array();
            for (auto v : vs)
                out.push_back(g.vertex(v));
            return out;
        }
    }

    auto to_string(Pattern p) -> const char *
    {
        switch (p) {
            case Pattern::c3: return "C3";
            case Pattern::c4: return "C4";
            case Pattern::p4: return "P4";
            case Pattern::y: return "Y";
        }
        return "?";
    }

    auto pattern_graph(Pattern p) -> Graph
    {
        switch (p) {
            case Pattern::c3: return build_cycle(3);
            case Pattern::c4: return build_cycle(4);
            case Pattern::p4: return build_path(4);
            case Pattern::y: return build_star(3);
        }
        return {};
    }

    auto classify_slice_base(const GraphPtr & g) -> BaseClassification
    {
        BaseClassification result;
        for (VertexIndex v = 0; v < g->size(); ++v)
            if (g->degree(v) >= 3) {
                auto n = g->neighbours(v);
                result.universal = true;
                result.witness = pattern_embedding(Pattern::y, g, {v, n[0], n[1], n[2]});
                return result;
            }

        for (auto & component : connected_components(*g)) {
            auto order = walk_component(*g, component);
            bool cycle = component_edge_count(*g, component) >= component.size();
            if (cycle && component.size() == 3) {
                result.universal = true;
                result.witness = pattern_embedding(Pattern::c3, g, order);
                return result;
            }
            if (cycle && component.size() == 4) {
                result.universal = true;
                result.witness = pattern_embedding(Pattern::c4, g, order);
                return result;
            }
            if (component.size() >= 5) {
                result.universal = true;
                result.witness = pattern_embedding(Pattern::p4, g, vector<VertexIndex>(order.begin(), order.begin() + 5));
                return result;
            }
            result.decomposition.push_back(std::move(order));
        }
        return result;
    }

    auto classify_slice_base_by_patterns(const GraphPtr & g) -> BaseClassification
    {
        BaseClassification result;
        for (auto p : all_patterns)
            if (auto found = contains_subgraph(share(pattern_graph(p)), g)) {
                result.universal = true;
                result.witness = PatternWitness{p, *found};
                return result;
            }
        for (auto & component : connected_components(*g))
            result.decomposition.push_back(walk_component(*g, component));
        return result;
    }

    auto classify_cone_base(const Graph & g) -> ConeClassification
    {
        ConeClassification result;
        vector<size_t> depth(g.size(), Bitset::npos);
        vector<VertexIndex> parent(g.size(), Bitset::npos);
        for (VertexIndex root = 0; root < g.size(); ++root) {
            if (depth[root] != Bitset::npos)
                continue;
            depth[root] = 0;
            std::deque<VertexIndex> queue{root};
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : g.neighbours(v))
                    if (depth[w] == Bitset::npos) {
                        depth[w] = depth[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
            }
        }

        for (auto [u, v] : g.edges()) {
            if (depth[u] % 2 != depth[v] % 2)
                continue;
            // Both tree paths climb to the lowest common ancestor; together with
            // the edge they close an odd cycle.
            vector<VertexIndex> up_u{u}, up_v{v};
            auto x = u, y = v;
            while (depth[x] > depth[y]) {
                x = parent[x];
                up_u.push_back(x);
            }
            while (depth[y] > depth[x]) {
                y = parent[y];
                up_v.push_back(y);
            }
            while (x != y) {
                x = parent[x];
                y = parent[y];
                up_u.push_back(x);
                up_v.push_back(y);
            }
            up_v.pop_back();
            result.universal = true;
            result.odd_cycle = up_u;
            result.odd_cycle.insert(result.odd_cycle.end(), up_v.rbegin(), up_v.rend());
            return result;
        }

        result.bipartition.resize(g.size());
        for (VertexIndex v = 0; v < g.size(); ++v)
            result.bipartition[v] = static_cast<int>(depth[v] % 2);
        return result;
    }

    auto path_order(const Graph & g) -> optional<vector<VertexIndex>>
    {
        if (g.empty() || ! is_connected(g) || g.edge_count() != g.size() - 1)
            return std::nullopt;
        for (VertexIndex v = 0; v < g.size(); ++v)
            if (g.degree(v) > 2)
                return std::nullopt;
        vector<VertexIndex> all(g.size());
        for (VertexIndex v = 0; v < g.size(); ++v)
            all[v] = v;
        return walk_component(g, all);
    }

    auto path_of(const PathRetraction & r) -> const vector<VertexIndex> &
    {
        return std::visit([](auto & x) -> const vector<VertexIndex> & { return x.path_vertices; }, r);
    }

    auto retract_onto_image(const SliceObject & x, std::span<const VertexIndex> image_path) -> PathRetraction
    {
        auto & h = x.carrier();
        if (h.empty() || ! is_connected(h))
            throw RetractionError("carrier must be connected and non-empty");
        if (image_path.empty() || image_path.size() > 4)
            throw RetractionError("image path must have between 1 and 4 vertices");

        vector<size_t> position(x.base().size(), Bitset::npos);
        for (size_t i = 0; i < image_path.size(); ++i)
            position[image_path[i]] = i;
        vector<size_t> p(h.size());
        vector<bool> covered(image_path.size(), false);
        for (VertexIndex v = 0; v < h.size(); ++v) {
            p[v] = position[x.colour(v)];
            if (p[v] == Bitset::npos)
                throw RetractionError("vertex '" + h.vertex(v) + "' is coloured outside the image path");
            covered[p[v]] = true;
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            throw RetractionError("structure map is not surjective onto the path");

        vector<VertexIndex> zeros;
        for (VertexIndex v = 0; v < h.size(); ++v)
            if (p[v] == 0)
                zeros.push_back(v);
        auto tau = bfs_distances(h, zeros);

        const size_t m = image_path.size() - 1;
        vector<VertexIndex> path;
        vector<VertexIndex> images(h.size());

        if (m == 3) {
            vector<VertexIndex> threes;
            for (VertexIndex v = 0; v < h.size(); ++v)
                if (p[v] == 3)
                    threes.push_back(v);
            auto to_three = bfs_distances(h, threes);
            size_t k = Bitset::npos;
            for (auto z : zeros)
                k = std::min(k, to_three[z]);

            // Least start, then least next vertex that stays on a shortest route.
            for (auto z : zeros)
                if (to_three[z] == k) {
                    path.push_back(z);
                    break;
                }
            while (path.size() <= k) {
                auto remaining = k - path.size();
                for (auto w : h.neighbours(path.back()))
                    if (to_three[w] == remaining) {
                        path.push_back(w);
                        break;
                    }
            }

            if (k < 3 || k % 2 == 0)
                throw RetractionError("shortest 0-to-3 path has length " + std::to_string(k));
            for (size_t i = 0; i <= k; ++i) {
                size_t want = i == 0 ? 0 : i == k ? 3 : i % 2 == 1 ? 1 : 2;
                if (p[path[i]] != want)
                    throw RetractionError("shortest 0-to-3 path breaks the 0,1,2,...,1,2,3 colour pattern");
            }

            for (VertexIndex v = 0; v < h.size(); ++v) {
                size_t best = Bitset::npos, best_gap = Bitset::npos;
                bool tie = false;
                for (size_t i = 0; i <= k; ++i) {
                    if (p[path[i]] != p[v])
                        continue;
                    size_t gap = tau[v] > i ? tau[v] - i : i - tau[v];
                    if (gap < best_gap) {
                        best_gap = gap;
                        best = i;
                        tie = false;
                    }
                    else if (gap == best_gap)
                        tie = true;
                }
                if (tie)
                    throw RetractionError("no unique nearest path vertex for '" + h.vertex(v) + "'");
                images[v] = path[best];
            }
        }
        else {
            vector<VertexIndex> positions(image_path.begin(), image_path.end());
            auto copy = find_copy(x, positions);
            if (! copy)
                throw RetractionError("no isomorphic copy of the image inside the carrier");
            path = *copy;
            for (VertexIndex v = 0; v < h.size(); ++v)
                images[v] = path[p[v]];
        }

        if (path.size() == h.size())
            return RigidPathCertificate{path, tau};
        Morphism r{x.carrier_ptr(), x.carrier_ptr(), std::move(images)};
        return RetractionPlan{path, tau, SliceMorphism{x, x, std::move(r)}};
    }

    auto retract_slice_to_path(const SliceObject & x) -> PathRetraction
    {
        auto order = path_order(x.base());
        if (! order || order->size() > 4)
            throw RetractionError("base must be a path with at most 3 edges");
        if (x.image().size() != x.base().size())
            throw RetractionError("structure map is not surjective onto the path");
        return retract_onto_image(x, *order);
    }

    auto compare_components(const SliceObject & x, const SliceObject & y) -> ComponentComparison
    {
        if (! same_graph(x.base_ptr(), y.base_ptr()))
            throw BaseMismatch("slice objects live over different base graphs");
        if (x.carrier().empty() || y.carrier().empty() || ! is_connected(x.carrier()) || ! is_connected(y.carrier()))
            throw InvalidStructure("both carriers must be connected and non-empty");
        auto ix = image_path_of(x);
        auto iy = image_path_of(y);
        if (ix.size() > 4 || iy.size() > 4)
            throw InvalidStructure("images must be paths with at most 3 edges");
        if (! is_subset(x.image(), y.image()))
            throw InvalidStructure("image of the first object is not contained in the image of the second");

        if (ix.size() == 4) {
            auto rx = retract_onto_image(x, ix);
            auto ry = retract_onto_image(y, ix);
            auto & px = path_of(rx);
            auto & py = path_of(ry);
            bool forward = px.size() >= py.size();
            auto & source = forward ? x : y;
            auto & target = forward ? y : x;
            auto & long_path = forward ? px : py;
            auto & short_path = forward ? py : px;
            auto r = retraction_images(forward ? rx : ry, source.carrier().size());
            vector<VertexIndex> images(source.carrier().size());
            for (VertexIndex v = 0; v < images.size(); ++v)
                images[v] = short_path[fold_position(position_in(long_path, r[v]), long_path.size() - 1, short_path.size() - 1)];
            Morphism m{source.carrier_ptr(), target.carrier_ptr(), std::move(images)};
            return ComponentComparison{forward ? Direction::forward : Direction::backward, SliceMorphism{source, target, std::move(m)}};
        }

        auto copy = find_copy(y, ix);
        if (! copy)
            throw InvalidStructure("no isomorphic copy of the smaller image inside the larger object");
        vector<VertexIndex> images(x.carrier().size());
        for (VertexIndex v = 0; v < images.size(); ++v)
            images[v] = (*copy)[position_in(ix, x.colour(v))];
        return ComponentComparison{Direction::forward, SliceMorphism{x, y, Morphism{x.carrier_ptr(), y.carrier_ptr(), std::move(images)}}};
    }

    auto SliceVerdict::agrees_with_brute_force() const -> optional<bool>
    {
        if (! brute_force)
            return std::nullopt;
        if (kind == SliceVerdictKind::rigid)
            return brute_force->verdict == EndoVerdict::rigid;
        return brute_force->verdict == EndoVerdict::has_proper_endomorphism;
    }

    auto classify_slice_object(const SliceObject & x, size_t cross_check_limit) -> SliceVerdict
    {
        if (classify_slice_base(x.base_ptr()).universal)
            throw UniversalBase("base contains C3, C4, P4 or Y; use the gadget pipeline instead");

        SliceVerdict verdict;
        if (x.carrier().size() <= cross_check_limit)
            verdict.brute_force = classify_endomorphisms(x);

        auto components = connected_components(x.carrier());
        vector<SliceObject> parts;
        vector<vector<VertexIndex>> images;
        for (auto & c : components) {
            parts.push_back(x.restrict_to(c));
            images.push_back(parts.back().image());
        }

        auto finish = [&](vector<VertexIndex> map, string reason) {
            verdict.kind = SliceVerdictKind::proper_endomorphism;
            verdict.reason = std::move(reason);
            verdict.witness.emplace(x, x, Morphism{x.carrier_ptr(), x.carrier_ptr(), std::move(map)});
            return verdict;
        };
        vector<VertexIndex> identity(x.carrier().size());
        for (VertexIndex v = 0; v < identity.size(); ++v)
            identity[v] = v;

        for (size_t i = 0; i < components.size(); ++i) {
            auto r = retract_onto_image(parts[i], image_path_of(parts[i]));
            if (auto plan = std::get_if<RetractionPlan>(&r)) {
                auto map = identity;
                for (VertexIndex v = 0; v < components[i].size(); ++v)
                    map[components[i][v]] = components[i][plan->retraction(v)];
                return finish(std::move(map), "component retraction");
            }
        }

        for (size_t i = 0; i < components.size(); ++i)
            for (size_t j = i + 1; j < components.size(); ++j) {
                size_t small, large;
                if (is_subset(images[i], images[j]))
                    small = i, large = j;
                else if (is_subset(images[j], images[i]))
                    small = j, large = i;
                else
                    continue;
                auto cmp = compare_components(parts[small], parts[large]);
                auto from = cmp.direction == Direction::forward ? small : large;
                auto to = cmp.direction == Direction::forward ? large : small;
                auto map = identity;
                for (VertexIndex v = 0; v < components[from].size(); ++v)
                    map[components[from][v]] = components[to][cmp.morphism(v)];
                return finish(std::move(map), "comparable components");
            }

        return verdict;
    }

    auto check_embedding_pair(const ArrowSlice & f1, const ArrowSlice & f2) -> EmbeddingPairResult
    {
        EmbeddingPairResult result;
        std::set<vector<VertexIndex>> slice_homs;
        for_each_slice_hom(f1.object, f2.object, [&](std::span<const VertexIndex> s) {
            slice_homs.emplace(s.begin(), s.end());
            return true;
        });
        result.slice_homs = slice_homs.size();

        std::set<vector<VertexIndex>> mapped;
        for (auto & h : enumerate_digraph_homs(*f1.arrow.digraph, *f2.arrow.digraph)) {
            ++result.digraph_homs;
            auto m = arrow_morphism(f1, f2, h);
            vector<VertexIndex> images(m.map().images().begin(), m.map().images().end());
            if (! slice_homs.contains(images)) {
                result.ok = false;
                result.detail = "h * H is not among the slice homs";
            }
            if (! mapped.insert(std::move(images)).second) {
                result.ok = false;
                result.detail = "two digraph homs give the same slice hom";
            }
        }
        if (result.ok && result.digraph_homs != result.slice_homs) {
            result.ok = false;
            result.detail = "slice hom not of the form h * H";
        }
        return result;
    }

    namespace
    {
        auto embedding_report(const vector<ArrowSlice> & slices, const vector<std::pair<size_t, size_t>> & pairs, unsigned jobs)
            -> EmbeddingReport
        {
            vector<EmbeddingPairResult> results(pairs.size());
            parallel_for(pairs.size(), jobs,
                [&](size_t i) { results[i] = check_embedding_pair(slices[pairs[i].first], slices[pairs[i].second]); });
            EmbeddingReport report;
            for (size_t i = 0; i < pairs.size(); ++i) {
                ++report.pairs_checked;
                report.digraph_homs += results[i].digraph_homs;
                report.slice_homs += results[i].slice_homs;
                if (! results[i].ok) {
                    report.pass = false;
                    report.violations.push_back(EmbeddingViolation{
                        *slices[pairs[i].first].arrow.digraph, *slices[pairs[i].second].arrow.digraph, results[i]});
                }
            }
            return report;
        }
    }

    auto full_embedding_check(const Gadget & g, size_t max_n, unsigned jobs, size_t cap) -> EmbeddingReport
    {
        vector<ArrowSlice> slices;
        for (size_t n = 1; n <= max_n; ++n)
            for (auto & d : enumerate_digraphs(n, DigraphEnumeration{true, false, cap}))
                slices.push_back(arrow_slice(share(d), g));
        vector<std::pair<size_t, size_t>> pairs;
        for (size_t i = 0; i < slices.size(); ++i)
            for (size_t j = 0; j < slices.size(); ++j)
                pairs.emplace_back(i, j);
        return embedding_report(slices, pairs, jobs);
    }

    auto embedding_spot_check(const Gadget & g, size_t n, size_t samples, std::uint64_t seed, unsigned jobs) -> EmbeddingReport
    {
        auto digraphs = enumerate_digraphs(n, true);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, digraphs.size() - 1);
        vector<std::pair<size_t, size_t>> pairs;
        std::map<size_t, size_t> slot;
        vector<ArrowSlice> slices;
        auto slice_for = [&](size_t d) {
            auto [it, fresh] = slot.emplace(d, slices.size());
            if (fresh)
                slices.push_back(arrow_slice(share(digraphs[d]), g));
            return it->second;
        };
        for (size_t s = 0; s < samples; ++s) {
            auto a = pick(rng), b = pick(rng);
            auto sa = slice_for(a);
            auto sb = slice_for(b);
            pairs.emplace_back(sa, sb);
        }
        return embedding_report(slices, pairs, jobs);
    }

    auto check_dichotomy_instance(const SliceObject & x) -> optional<string>
    {
        auto endo = classify_endomorphisms(x);
        if (endo.verdict == EndoVerdict::automorphisms_only)
            return "neither rigid nor has a proper endomorphism: " + std::to_string(endo.endo_count) + " endomorphisms, all automorphisms";
        auto verdict = classify_slice_object(x, 0);
        bool constructive_rigid = verdict.kind == SliceVerdictKind::rigid;
        if (constructive_rigid != (endo.verdict == EndoVerdict::rigid))
            return string{"constructive verdict "} + (constructive_rigid ? "Rigid" : "ProperEndo") + " disagrees with brute force " +
                to_string(endo.verdict);
        if (verdict.witness && verdict.witness->map().is_bijective())
            return "constructive witness is an automorphism";
        return std::nullopt;
    }

    auto dichotomy_sweep(const GraphPtr & base, size_t max_carrier, bool connected_only, unsigned jobs) -> DichotomyReport
    {
        if (classify_slice_base(base).universal)
            throw UniversalBase("base contains C3, C4, P4 or Y; the dichotomy applies only to unions of short paths");

        vector<SliceObject> instances;
        for (size_t n = 1; n <= max_carrier; ++n) {
            vector<VertexId> names;
            for (size_t i = 0; i < n; ++i)
                names.push_back("v" + std::to_string(i));
            vector<IndexEdge> slots;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    slots.emplace_back(i, j);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
                vector<IndexEdge> edges;
                for (size_t s = 0; s < slots.size(); ++s)
                    if ((mask >> s) & 1)
                        edges.push_back(slots[s]);
                auto carrier = share(Graph::from_indices(names, edges));
                if (connected_only && ! is_connected(*carrier))
                    continue;
                for (auto & f : enumerate_homs(carrier, base))
                    instances.emplace_back(f);
            }
        }

        vector<optional<string>> problems(instances.size());
        vector<bool> rigid(instances.size());
        parallel_for(instances.size(), jobs, [&](size_t i) {
            problems[i] = check_dichotomy_instance(instances[i]);
            rigid[i] = classify_endomorphisms(instances[i]).verdict == EndoVerdict::rigid;
        });

        DichotomyReport report;
        for (size_t i = 0; i < instances.size(); ++i) {
            ++report.instances;
            ++(rigid[i] ? report.rigid : report.proper);
            if (problems[i] && report.pass) {
                report.pass = false;
                report.failure = DichotomyFailure{instances[i], *problems[i]};
            }
        }
        return report;
    }

    auto to_json(const EndoReport & r) -> Json
    {
        Json j;
        j["verdict"] = to_string(r.verdict);
        j["endo_count"] = r.endo_count;
        j["auto_count"] = r.auto_count;
        j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
        return j;
    }

    auto to_json(const BaseClassification & c, const Graph & g) -> Json
    {
        Json j;
        j["verdict"] = c.universal ? "Universal" : "NotUniversal";
        if (c.witness) {
            Json w;
            w["pattern"] = to_string(c.witness->pattern);
            w["vertices"] = named_list(g, c.witness->embedding.images());
            w["embedding"] = to_json(c.witness->embedding);
            j["witness"] = w;
        }
        else {
            Json parts = Json::array();
            for (auto & path : c.decomposition)
                parts.push_back(named_list(g, path));
            j["decomposition"] = parts;
        }
        return j;
    }

    auto to_json(const ConeClassification & c, const Graph & g) -> Json
    {
        Json j;
        j["verdict"] = c.universal ? "Universal" : "NotUniversal";
        if (c.universal)
            j["odd_cycle"] = named_list(g, c.odd_cycle);
        else {
            Json sides = Json::object();
            for (VertexIndex v = 0; v < g.size(); ++v)
                sides[g.vertex(v)] = c.bipartition[v];
            j["bipartition"] = sides;
        }
        return j;
    }

    auto to_json(const PathRetraction & r, const SliceObject & x) -> Json
    {
        Json j;
        auto & path = path_of(r);
        auto tau = std::visit([](auto & p) { return p.tau; }, r);
        j["kind"] = std::holds_alternative<RigidPathCertificate>(r) ? "RigidPathCertificate" : "RetractionPlan";
        j["path"] = named_list(x.carrier(), path);
        j["length"] = path.size() - 1;
        Json t = Json::object();
        for (VertexIndex v = 0; v < x.carrier().size(); ++v)
            t[x.carrier().vertex(v)] = tau[v];
        j["tau"] = t;
        if (auto plan = std::get_if<RetractionPlan>(&r))
            j["retraction"] = to_json(plan->retraction.map());
        return j;
    }

    auto to_json(const SliceVerdict & v) -> Json
    {
        Json j;
        j["verdict"] = v.kind == SliceVerdictKind::rigid ? "Rigid" : "ProperEndo";
        if (v.witness) {
            j["reason"] = v.reason;
            j["witness"] = to_json(v.witness->map());
        }
        if (v.brute_force) {
            j["brute_force"] = to_json(*v.brute_force);
            j["agrees"] = *v.agrees_with_brute_force();
        }
        return j;
    }

    auto to_json(const EmbeddingReport & r) -> Json
    {
        Json j;
        j["verdict"] = r.pass ? "pass" : "fail";
        j["pairs_checked"] = r.pairs_checked;
        j["digraph_homs"] = r.digraph_homs;
        j["slice_homs"] = r.slice_homs;
        Json violations = Json::array();
        for (auto & v : r.violations) {
            Json vj;
            vj["from"] = to_json(v.from);
            vj["to"] = to_json(v.to);
            vj["digraph_homs"] = v.result.digraph_homs;
            vj["slice_homs"] = v.result.slice_homs;
            vj["detail"] = v.result.detail;
            violations.push_back(vj);
        }
        j["violations"] = violations;
        return j;
    }

    auto to_json(const DichotomyReport & r) -> Json
    {
        Json j;
        j["verdict"] = r.pass ? "pass" : "fail";
        j["instances"] = r.instances;
        j["rigid"] = r.rigid;
        j["proper_endomorphism"] = r.proper;
        if (r.failure) {
            Json f;
            f["instance"] = to_json(r.failure->instance);
            f["detail"] = r.failure->detail;
            j["counterexample"] = f;
        }
        else
            j["counterexample"] = nullptr;
        return j;
    }
}
