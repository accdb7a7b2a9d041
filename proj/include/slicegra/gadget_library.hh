#ifndef SLICEGRA_GADGET_LIBRARY_HH
#define SLICEGRA_GADGET_LIBRARY_HH

#include <slicegra/arrow.hh>
#include <slicegra/gadget.hh>
#include <slicegra/hom_search.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace slicegra
{
    class UnknownGadget : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class IsolatedPoint : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /**
     * The four path gadgets, by base name (case-insensitive):
     *   c3: P3 a..d over C3,  colours 0,1,2,0,                     ends (a, d)
     *   c4: P4 a..e over C4,  colours 0,1,2,3,0,                   ends (a, e)
     *   p4: P12 a..m over P4, colours 0,1,2,1,2,3,4,3,2,3,2,1,0,   ends (a, m)
     *   y:  P6 a..g over Y,   colours 0,1,2,1,3,1,0,               ends (a, g)
     * Base vertices are "0", "1", ...; Y has centre "1" and leaves "0", "2", "3".
     */
    auto builtin_gadget(const std::string & name) -> Gadget;
    auto builtin_gadget_names() -> std::vector<std::string>;
    /// The base graph a built-in gadget lives over.
    auto builtin_base(const std::string & name) -> Graph;

    struct GkGraph
    {
        GraphPtr graph;
        VertexIndex a = 0, b = 0;
        /// Labelled homomorphism onto C_{2k-1} (vertices "0".."2k-2"), with a, b -> k.
        Morphism hom_to_odd_cycle;
    };

    /**
     * G_k: anchors A B C D E F H I K L M N P, where K is a and M is b. The
     * pairs A-B, B-C, I-K, K-L, L-M, M-N are joined by paths of length k with
     * interior vertices "XY1".."XY(k-1)"; the remaining anchor edges are single
     * edges. Throws InvalidStructure for k < 2.
     */
    auto build_gk(std::size_t k) -> GkGraph;

    enum class CounterexampleKind
    {
        gadget_defect,
        extra_hom,
        missing_phi
    };

    auto to_string(CounterexampleKind k) -> const char *;

    struct GadgetCounterexample
    {
        CounterexampleKind kind = CounterexampleKind::gadget_defect;
        std::optional<Digraph> digraph;
        /// The offending slice hom (extra_hom) or the missing phi (missing_phi), by vertex name.
        std::map<VertexId, VertexId> map;
        std::optional<NamedEdge> arc;
        std::optional<GadgetDefect> defect;
    };

    struct GadgetReport
    {
        std::size_t digraphs_checked = 0;
        std::size_t max_size = 0;
        bool pass = true;
        /// Total slice homs (H, f) -> (D * H, f_D) seen across checked digraphs.
        std::size_t homs_found = 0;
        /// Number of checked digraphs per vertex count, index 0 unused.
        std::vector<std::size_t> digraphs_per_size;
        std::optional<GadgetCounterexample> counterexample;
    };

    /// Passes iff the slice homs from the gadget into its arrow slice over `d`
    /// are exactly the phi maps. Throws IsolatedPoint when d has one.
    auto verify_gadget(const Gadget & g, const DigraphPtr & d) -> GadgetReport;
    /// As above, but a structurally defective spec yields a failing report.
    auto verify_gadget(const GadgetSpec & spec, const DigraphPtr & d) -> GadgetReport;

    /// verify_gadget over every labelled digraph without isolated points on
    /// 1..max_n vertices. Throws CapExceeded. `jobs` workers split the sweep;
    /// the merged report does not depend on `jobs`.
    auto verify_gadget_exhaustive(const GadgetSpec & spec, std::size_t max_n, unsigned jobs = 1,
        std::size_t cap = default_digraph_cap) -> GadgetReport;

    /// Every single-vertex recolouring of the structure map, valid or not.
    auto single_vertex_mutations(const Gadget & g) -> std::vector<GadgetSpec>;

    enum class ReplacementRegime
    {
        /// Loop-free digraphs, as in the strong-replacement definition.
        irreflexive,
        /// Digraphs without isolated points; loops allowed.
        no_isolated_points
    };

    struct StrongReplacementResult
    {
        bool holds = true;
        /// A hom H -> D * H whose image lies in no single copy of H.
        std::optional<Morphism> witness;
        std::size_t homs_checked = 0;
    };

    /// Throws InvalidStructure when `d` is outside the chosen regime.
    auto check_strong_replacement(const GraphPtr & h, VertexIndex a, VertexIndex b, const DigraphPtr & d,
        ReplacementRegime regime = ReplacementRegime::irreflexive) -> StrongReplacementResult;

    auto to_json(const GadgetReport & r) -> Json;
}

#endif
