#ifndef SLICEGRA_HOM_SEARCH_HH
#define SLICEGRA_HOM_SEARCH_HH

#include <slicegra/graph.hh>
#include <slicegra/morphism.hh>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace slicegra
{
    enum class SearchMode
    {
        exists,
        count,
        enumerate
    };

    struct SearchBudget
    {
        SearchMode mode = SearchMode::enumerate;
        std::optional<std::size_t> max_solutions = std::nullopt;

        /// Number of solutions after which the search stops, if any.
        auto limit() const -> std::optional<std::size_t>;
    };

    /// Called once per solution with the images indexed by source vertex.
    /// Returning false stops the search.
    using SolutionVisitor = std::function<bool(std::span<const VertexIndex>)>;
    using Pins = std::map<VertexId, VertexId>;

    struct SearchResult
    {
        std::size_t solutions = 0;
        /// False when the search stopped early because of the budget or visitor.
        bool complete = true;
    };

    /**
     * Backtracking homomorphism search.
     *
     * Variables are the source vertices, visited in a fixed order (descending
     * degree, then vertex order); values are tried in ascending target order,
     * and each assignment filters the domains of unassigned neighbours to the
     * matching adjacency row. Solutions therefore arrive in a deterministic
     * order. The engine holds no state between calls and is reentrant.
     */
    auto for_each_hom(const Graph & a, const Graph & b, const Pins & pins, const SolutionVisitor & visit) -> SearchResult;

    auto enumerate_homs(const GraphPtr & a, const GraphPtr & b, const Pins & pins = {}, const SearchBudget & budget = {})
        -> std::vector<Morphism>;
    auto count_homs(const Graph & a, const Graph & b, const Pins & pins = {}) -> std::size_t;
    auto find_hom(const GraphPtr & a, const GraphPtr & b, const Pins & pins = {}) -> std::optional<Morphism>;

    /// Homomorphisms of the carriers that commute with the structure maps.
    /// Fibres of the structure maps act as vertex colours. Throws BaseMismatch.
    auto for_each_slice_hom(const SliceObject & x, const SliceObject & y, const SolutionVisitor & visit) -> SearchResult;
    auto enumerate_slice_homs(const SliceObject & x, const SliceObject & y, const SearchBudget & budget = {})
        -> std::vector<SliceMorphism>;
    auto count_slice_homs(const SliceObject & x, const SliceObject & y) -> std::size_t;

    enum class EndoVerdict
    {
        rigid,
        automorphisms_only,
        has_proper_endomorphism
    };

    auto to_string(EndoVerdict v) -> const char *;

    struct EndoReport
    {
        EndoVerdict verdict = EndoVerdict::rigid;
        /// First non-bijective endomorphism in search order, when one exists.
        std::optional<Morphism> witness;
        std::size_t endo_count = 0;
        std::size_t auto_count = 0;
    };

    /// Full enumeration of End(X) in the slice category. A proper endomorphism
    /// is one that is not an automorphism, i.e. a non-bijective vertex map.
    auto classify_endomorphisms(const SliceObject & x) -> EndoReport;
    /// The same classification for a plain graph.
    auto classify_graph_endomorphisms(const GraphPtr & g) -> EndoReport;

    /// Ordinary (non-induced) subgraph containment: an injective homomorphism.
    auto contains_subgraph(const GraphPtr & pattern, const GraphPtr & host) -> std::optional<Morphism>;

    inline constexpr std::size_t default_digraph_cap = 4;

    class CapExceeded : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct DigraphEnumeration
    {
        bool require_no_isolated = true;
        /// Keep only the lexicographically least relation in each isomorphism class.
        bool canonical_only = false;
        std::size_t cap = default_digraph_cap;
    };

    /// All labelled digraphs on v0..v(n-1), in order of the relation bitmask
    /// (bit i*n + j is the arc (vi, vj)). Throws CapExceeded when n > cap.
    auto for_each_digraph(std::size_t n, const DigraphEnumeration & options, const std::function<bool(const Digraph &)> & visit)
        -> std::size_t;
    auto enumerate_digraphs(std::size_t n, bool require_no_isolated, std::size_t cap = default_digraph_cap) -> std::vector<Digraph>;
    auto enumerate_digraphs(std::size_t n, const DigraphEnumeration & options) -> std::vector<Digraph>;

    using DigraphMap = std::vector<VertexIndex>;

    auto for_each_digraph_hom(const Digraph & a, const Digraph & b, const SolutionVisitor & visit) -> SearchResult;
    auto enumerate_digraph_homs(const Digraph & a, const Digraph & b, const SearchBudget & budget = {}) -> std::vector<DigraphMap>;
}

#endif
