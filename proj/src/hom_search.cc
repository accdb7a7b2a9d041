#include <slicegra/hom_search.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::size_t;
using std::span;
using std::vector;

namespace slicegra
{
    namespace
    {
        struct Constraint
        {
            VertexIndex other;
            /// true: arc self -> other, false: arc other -> self.
            bool outgoing;
        };

        struct Problem
        {
            size_t source_size = 0;
            size_t target_size = 0;
            vector<vector<Constraint>> constraints;
            vector<const Bitset *> out_rows, in_rows;
            vector<Bitset> domains;
            bool injective = false;
        };

        class Searcher
        {
        public:
            Searcher(const Problem & p, const SolutionVisitor & v) :
                _problem(p),
                _visit(v),
                _assignment(p.source_size, Bitset::npos),
                _used(p.target_size)
            {
                _order.resize(p.source_size);
                std::iota(_order.begin(), _order.end(), VertexIndex{0});
                std::stable_sort(_order.begin(), _order.end(), [&](VertexIndex a, VertexIndex b) {
                    return p.constraints[a].size() > p.constraints[b].size();
                });
            }

            auto run() -> SearchResult
            {
                for (auto & d : _problem.domains)
                    if (d.none())
                        return SearchResult{0, true};
                bool finished = search(0, _problem.domains);
                return SearchResult{_solutions, finished};
            }

        private:
            /// Returns false when the visitor asked to stop.
            auto search(size_t depth, const vector<Bitset> & domains) -> bool
            {
                if (depth == _order.size()) {
                    ++_solutions;
                    return _visit(_assignment);
                }

                auto var = _order[depth];
                auto & domain = domains[var];
                for (auto value = domain.find_first(); value != Bitset::npos; value = domain.find_next(value + 1)) {
                    if (_problem.injective && _used.test(value))
                        continue;

                    vector<Bitset> next = domains;
                    bool wiped = false;
                    for (auto & c : _problem.constraints[var]) {
                        if (_assignment[c.other] != Bitset::npos)
                            continue;
                        next[c.other] &= c.outgoing ? *_problem.out_rows[value] : *_problem.in_rows[value];
                        if (next[c.other].none()) {
                            wiped = true;
                            break;
                        }
                    }
                    if (wiped)
                        continue;

                    _assignment[var] = value;
                    if (_problem.injective)
                        _used.set(value);
                    bool keep_going = search(depth + 1, next);
                    if (_problem.injective)
                        _used.reset(value);
                    _assignment[var] = Bitset::npos;
                    if (! keep_going)
                        return false;
                }
                return true;
            }

            const Problem & _problem;
            const SolutionVisitor & _visit;
            vector<VertexIndex> _order;
            vector<VertexIndex> _assignment;
            Bitset _used;
            size_t _solutions = 0;
        };

        auto graph_problem(const Graph & a, const Graph & b) -> Problem
        {
            Problem p;
            p.source_size = a.size();
            p.target_size = b.size();
            p.constraints.resize(a.size());
            for (VertexIndex v = 0; v < a.size(); ++v)
                for (auto w : a.neighbours(v))
                    p.constraints[v].push_back(Constraint{w, true});
            for (VertexIndex y = 0; y < b.size(); ++y) {
                p.out_rows.push_back(&b.adjacency_row(y));
                p.in_rows.push_back(&b.adjacency_row(y));
            }
            p.domains.assign(a.size(), Bitset(b.size(), true));
            return p;
        }

        auto apply_pins(Problem & p, const Graph & a, const Graph & b, const Pins & pins) -> void
        {
            for (auto & [from, to] : pins) {
                auto v = a.index_of(from);
                auto y = b.index_of(to);
                if (! v)
                    throw InvalidMap("pin on '" + from + "', which is not a source vertex");
                if (! y)
                    throw InvalidMap("pin to '" + to + "', which is not a target vertex");
                bool allowed = p.domains[*v].test(*y);
                p.domains[*v] = Bitset(b.size());
                if (allowed)
                    p.domains[*v].set(*y);
            }
        }

        auto solve(const Problem & p, const SolutionVisitor & visit) -> SearchResult
        {
            return Searcher{p, visit}.run();
        }

        /// Wraps a visitor so that it stops once the budget is spent.
        auto budgeted(const SearchBudget & budget, const SolutionVisitor & inner) -> SolutionVisitor
        {
            auto limit = budget.limit();
            return [limit, &inner, seen = size_t{0}](span<const VertexIndex> s) mutable -> bool {
                ++seen;
                if (! inner(s))
                    return false;
                return ! limit || seen < *limit;
            };
        }

        auto slice_problem(const SliceObject & x, const SliceObject & y) -> Problem
        {
            if (! same_graph(x.base_ptr(), y.base_ptr()))
                throw BaseMismatch("slice objects live over different base graphs");
            auto p = graph_problem(x.carrier(), y.carrier());
            vector<Bitset> fibres(x.base().size(), Bitset(y.carrier().size()));
            for (VertexIndex w = 0; w < y.carrier().size(); ++w)
                fibres[y.colour(w)].set(w);
            for (VertexIndex v = 0; v < x.carrier().size(); ++v)
                p.domains[v] &= fibres[x.colour(v)];
            return p;
        }

        auto digraph_problem(const Digraph & a, const Digraph & b) -> Problem
        {
            Problem p;
            p.source_size = a.size();
            p.target_size = b.size();
            p.constraints.resize(a.size());
            p.domains.assign(a.size(), Bitset(b.size(), true));
            Bitset loops(b.size());
            for (VertexIndex y = 0; y < b.size(); ++y) {
                p.out_rows.push_back(&b.out_row(y));
                p.in_rows.push_back(&b.in_row(y));
                if (b.has_loop(y))
                    loops.set(y);
            }
            for (auto [u, v] : a.arcs()) {
                if (u == v) {
                    p.domains[u] &= loops;
                    continue;
                }
                p.constraints[u].push_back(Constraint{v, true});
                p.constraints[v].push_back(Constraint{u, false});
            }
            return p;
        }

        auto endo_report(const GraphPtr & g, const std::function<SearchResult(const SolutionVisitor &)> & run) -> EndoReport
        {
            EndoReport report;
            vector<bool> hit;
            run([&](span<const VertexIndex> s) {
                ++report.endo_count;
                hit.assign(g->size(), false);
                bool bijective = true;
                for (auto img : s) {
                    if (hit[img]) {
                        bijective = false;
                        break;
                    }
                    hit[img] = true;
                }
                if (bijective)
                    ++report.auto_count;
                else if (! report.witness)
                    report.witness.emplace(g, g, vector<VertexIndex>(s.begin(), s.end()));
                return true;
            });
            if (report.endo_count == 1)
                report.verdict = EndoVerdict::rigid;
            else if (report.endo_count > report.auto_count)
                report.verdict = EndoVerdict::has_proper_endomorphism;
            else
                report.verdict = EndoVerdict::automorphisms_only;
            return report;
        }
    }

    auto SearchBudget::limit() const -> optional<size_t>
    {
        if (mode == SearchMode::exists)
            return 1;
        return max_solutions;
    }

    auto for_each_hom(const Graph & a, const Graph & b, const Pins & pins, const SolutionVisitor & visit) -> SearchResult
    {
        auto p = graph_problem(a, b);
        apply_pins(p, a, b, pins);
        return solve(p, visit);
    }

    auto enumerate_homs(const GraphPtr & a, const GraphPtr & b, const Pins & pins, const SearchBudget & budget) -> vector<Morphism>
    {
        vector<Morphism> result;
        SolutionVisitor collect = [&](span<const VertexIndex> s) {
            result.emplace_back(a, b, vector<VertexIndex>(s.begin(), s.end()));
            return true;
        };
        for_each_hom(*a, *b, pins, budgeted(budget, collect));
        return result;
    }

    auto count_homs(const Graph & a, const Graph & b, const Pins & pins) -> size_t
    {
        return for_each_hom(a, b, pins, [](span<const VertexIndex>) { return true; }).solutions;
    }

    auto find_hom(const GraphPtr & a, const GraphPtr & b, const Pins & pins) -> optional<Morphism>
    {
        auto found = enumerate_homs(a, b, pins, SearchBudget{SearchMode::exists});
        if (found.empty())
            return std::nullopt;
        return found.front();
    }

    auto for_each_slice_hom(const SliceObject & x, const SliceObject & y, const SolutionVisitor & visit) -> SearchResult
    {
        return solve(slice_problem(x, y), visit);
    }

    auto enumerate_slice_homs(const SliceObject & x, const SliceObject & y, const SearchBudget & budget) -> vector<SliceMorphism>
    {
        vector<SliceMorphism> result;
        SolutionVisitor collect = [&](span<const VertexIndex> s) {
            result.emplace_back(x, y, Morphism{x.carrier_ptr(), y.carrier_ptr(), vector<VertexIndex>(s.begin(), s.end())});
            return true;
        };
        for_each_slice_hom(x, y, budgeted(budget, collect));
        return result;
    }

    auto count_slice_homs(const SliceObject & x, const SliceObject & y) -> size_t
    {
        return for_each_slice_hom(x, y, [](span<const VertexIndex>) { return true; }).solutions;
    }

    auto to_string(EndoVerdict v) -> const char *
    {
        switch (v) {
            case EndoVerdict::rigid: return "Rigid";
            case EndoVerdict::automorphisms_only: return "AutomorphismsOnly";
            case EndoVerdict::has_proper_endomorphism: return "HasProperEndomorphism";
        }
        return "?";
    }

    auto classify_endomorphisms(const SliceObject & x) -> EndoReport
    {
        return endo_report(x.carrier_ptr(), [&](const SolutionVisitor & v) { return for_each_slice_hom(x, x, v); });
    }

    auto classify_graph_endomorphisms(const GraphPtr & g) -> EndoReport
    {
        return endo_report(g, [&](const SolutionVisitor & v) { return for_each_hom(*g, *g, {}, v); });
    }

    auto contains_subgraph(const GraphPtr & pattern, const GraphPtr & host) -> optional<Morphism>
    {
        if (pattern->size() > host->size())
            return std::nullopt;
        auto p = graph_problem(*pattern, *host);
        p.injective = true;
        optional<Morphism> found;
        solve(p, [&](span<const VertexIndex> s) {
            found.emplace(pattern, host, vector<VertexIndex>(s.begin(), s.end()));
            return false;
        });
        return found;
    }

    auto for_each_digraph(size_t n, const DigraphEnumeration & options, const std::function<bool(const Digraph &)> & visit) -> size_t
    {
        if (n > options.cap)
            throw CapExceeded("digraph enumeration is capped at " + std::to_string(options.cap) + " vertices, asked for " +
                std::to_string(n));
        vector<VertexId> names;
        for (size_t i = 0; i < n; ++i)
            names.push_back("v" + std::to_string(i));

        vector<vector<size_t>> permutations;
        if (options.canonical_only) {
            vector<size_t> perm(n);
            std::iota(perm.begin(), perm.end(), size_t{0});
            do
                permutations.push_back(perm);
            while (std::next_permutation(perm.begin(), perm.end()));
        }

        const size_t bits = n * n;
        const std::uint64_t total = std::uint64_t{1} << bits;
        size_t emitted = 0;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (options.require_no_isolated) {
                bool isolated = false;
                for (size_t v = 0; v < n && ! isolated; ++v) {
                    bool touched = false;
                    for (size_t w = 0; w < n && ! touched; ++w)
                        touched = ((mask >> (v * n + w)) & 1) || ((mask >> (w * n + v)) & 1);
                    isolated = ! touched;
                }
                if (isolated)
                    continue;
            }
            if (options.canonical_only) {
                bool least = true;
                for (auto & perm : permutations) {
                    std::uint64_t image = 0;
                    for (size_t i = 0; i < n; ++i)
                        for (size_t j = 0; j < n; ++j)
                            if ((mask >> (i * n + j)) & 1)
                                image |= std::uint64_t{1} << (perm[i] * n + perm[j]);
                    if (image < mask) {
                        least = false;
                        break;
                    }
                }
                if (! least)
                    continue;
            }
            vector<IndexEdge> arcs;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if ((mask >> (i * n + j)) & 1)
                        arcs.emplace_back(i, j);
            ++emitted;
            if (! visit(Digraph::from_indices(names, arcs)))
                break;
        }
        return emitted;
    }

    auto enumerate_digraphs(size_t n, const DigraphEnumeration & options) -> vector<Digraph>
    {
        vector<Digraph> result;
        for_each_digraph(n, options, [&](const Digraph & d) {
            result.push_back(d);
            return true;
        });
        return result;
    }

    auto enumerate_digraphs(size_t n, bool require_no_isolated, size_t cap) -> vector<Digraph>
    {
        return enumerate_digraphs(n, DigraphEnumeration{require_no_isolated, false, cap});
    }

    auto for_each_digraph_hom(const Digraph & a, const Digraph & b, const SolutionVisitor & visit) -> SearchResult
    {
        return solve(digraph_problem(a, b), visit);
    }

    auto enumerate_digraph_homs(const Digraph & a, const Digraph & b, const SearchBudget & budget) -> vector<DigraphMap>
    {
        vector<DigraphMap> result;
        SolutionVisitor collect = [&](span<const VertexIndex> s) {
            result.emplace_back(s.begin(), s.end());
            return true;
        };
        for_each_digraph_hom(a, b, budgeted(budget, collect));
        return result;
    }
}
