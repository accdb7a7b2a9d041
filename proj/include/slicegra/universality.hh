#ifndef SLICEGRA_UNIVERSALITY_HH
#define SLICEGRA_UNIVERSALITY_HH

#include <slicegra/arrow.hh>
#include <slicegra/gadget.hh>
#include <slicegra/hom_search.hh>
#include <slicegra/serialization.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace slicegra
{
    enum class Pattern
    {
        c3,
        c4,
        p4,
        y
    };

    auto to_string(Pattern p) -> const char *;
    /// C3 and C4 as cycles, P4 as the 5-vertex path, Y as K_{1,3}.
    auto pattern_graph(Pattern p) -> Graph;
    inline constexpr Pattern all_patterns[] = {Pattern::c3, Pattern::c4, Pattern::p4, Pattern::y};

    struct PatternWitness
    {
        Pattern pattern;
        /// Injective homomorphism from pattern_graph(pattern) into the base.
        Morphism embedding;
    };

    /// Universal iff the slice over the graph is algebraically universal.
    struct BaseClassification
    {
        bool universal = false;
        std::optional<PatternWitness> witness;
        /// NotUniversal only: each component as a path u0..uk (k <= 3), listed
        /// from its lexicographically smaller end, components ordered by least vertex.
        std::vector<std::vector<VertexIndex>> decomposition;
    };

    /// Structural scan: a vertex of degree >= 3, a cycle component, or a path
    /// component with >= 5 vertices makes the base universal.
    auto classify_slice_base(const GraphPtr & g) -> BaseClassification;
    /// Independent route: subgraph search for each of C3, C4, P4, Y.
    auto classify_slice_base_by_patterns(const GraphPtr & g) -> BaseClassification;

    struct ConeClassification
    {
        bool universal = false;
        /// Universal: an odd cycle, consecutive vertices adjacent (and last to first).
        std::vector<VertexIndex> odd_cycle;
        /// NotUniversal: side (0 or 1) per vertex.
        std::vector<int> bipartition;
    };

    /// The cone over G (graphs admitting a map to G) is universal iff G has an odd cycle.
    auto classify_cone_base(const Graph & g) -> ConeClassification;

    /// The vertices of a path graph from its lexicographically smaller end, or nothing.
    auto path_order(const Graph & g) -> std::optional<std::vector<VertexIndex>>;

    class RetractionError : public InvalidStructure
    {
    public:
        using InvalidStructure::InvalidStructure;
    };

    /// Retraction of a connected slice object onto a path inside its carrier.
    struct RetractionPlan
    {
        /// u0..uk. Over a full P3 image, k = 2c + 3 and the colours read
        /// 0, 1, 2, 1, 2, ..., 1, 2, 3 in path positions.
        std::vector<VertexIndex> path_vertices;
        /// Distance to the nearest vertex over the first path position.
        std::vector<std::size_t> tau;
        /// Idempotent proper slice endomorphism with image the path.
        SliceMorphism retraction;
    };

    /// The carrier is itself the selected path, so the object is rigid.
    struct RigidPathCertificate
    {
        std::vector<VertexIndex> path_vertices;
        std::vector<std::size_t> tau;
    };

    using PathRetraction = std::variant<RetractionPlan, RigidPathCertificate>;

    auto path_of(const PathRetraction & r) -> const std::vector<VertexIndex> &;

    /**
     * X must be connected with a structure map onto a path base P_n, n <= 3.
     * For n = 3 a shortest 0-to-3 path is retracted onto via the tau rule; for
     * n <= 2 an isomorphic copy of the base is used. Throws RetractionError on
     * a disconnected carrier, a non-surjective map, or a tie in the tau rule.
     */
    auto retract_slice_to_path(const SliceObject & x) -> PathRetraction;

    /// As retract_slice_to_path, for a connected object whose image is the
    /// path `image_path` (base vertices in order, at most 4).
    auto retract_onto_image(const SliceObject & x, std::span<const VertexIndex> image_path) -> PathRetraction;

    enum class Direction
    {
        forward,
        backward
    };

    struct ComponentComparison
    {
        /// forward: X -> Y, backward: Y -> X.
        Direction direction;
        SliceMorphism morphism;
    };

    /// For connected X, Y over a common base with f[X] inside g[Y], both images
    /// paths of at most 4 vertices: a slice morphism in one direction.
    auto compare_components(const SliceObject & x, const SliceObject & y) -> ComponentComparison;

    class UniversalBase : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class SliceVerdictKind
    {
        rigid,
        proper_endomorphism
    };

    struct SliceVerdict
    {
        SliceVerdictKind kind = SliceVerdictKind::rigid;
        std::optional<SliceMorphism> witness;
        /// "component retraction" or "comparable components", empty when rigid.
        std::string reason;
        /// Set when the carrier was small enough for a brute-force cross-check.
        std::optional<EndoReport> brute_force;

        auto agrees_with_brute_force() const -> std::optional<bool>;
    };

    /// Constructive rigid-or-proper-endomorphism verdict over a base that is
    /// not universal. Throws UniversalBase otherwise.
    auto classify_slice_object(const SliceObject & x, std::size_t cross_check_limit = 10) -> SliceVerdict;

    struct EmbeddingPairResult
    {
        std::size_t digraph_homs = 0;
        std::size_t slice_homs = 0;
        bool ok = true;
        std::string detail;
    };

    /// Checks that h -> h * H is a bijection Hom(D1, D2) -> Hom(F D1, F D2).
    auto check_embedding_pair(const ArrowSlice & f1, const ArrowSlice & f2) -> EmbeddingPairResult;

    struct EmbeddingViolation
    {
        Digraph from, to;
        EmbeddingPairResult result;
    };

    struct EmbeddingReport
    {
        std::size_t pairs_checked = 0;
        std::size_t digraph_homs = 0;
        std::size_t slice_homs = 0;
        bool pass = true;
        std::vector<EmbeddingViolation> violations;
    };

    /// All ordered pairs of isolated-point-free digraphs on 1..max_n vertices.
    auto full_embedding_check(const Gadget & g, std::size_t max_n, unsigned jobs = 1, std::size_t cap = default_digraph_cap)
        -> EmbeddingReport;
    /// `samples` random ordered pairs of isolated-point-free digraphs on n vertices.
    auto embedding_spot_check(const Gadget & g, std::size_t n, std::size_t samples, std::uint64_t seed, unsigned jobs = 1)
        -> EmbeddingReport;

    struct DichotomyFailure
    {
        SliceObject instance;
        std::string detail;
    };

    struct DichotomyReport
    {
        std::size_t instances = 0;
        std::size_t rigid = 0;
        std::size_t proper = 0;
        bool pass = true;
        std::optional<DichotomyFailure> failure;
    };

    /// Brute force and constructive verdicts on one slice object; returns a
    /// description of the problem or nothing.
    auto check_dichotomy_instance(const SliceObject & x) -> std::optional<std::string>;
    /// Every labelled carrier on 1..max_carrier vertices (optionally only
    /// connected ones) with every structure map to `base`.
    auto dichotomy_sweep(const GraphPtr & base, std::size_t max_carrier, bool connected_only, unsigned jobs = 1)
        -> DichotomyReport;

    auto to_json(const EndoReport & r) -> Json;
    auto to_json(const BaseClassification & c, const Graph & g) -> Json;
    auto to_json(const ConeClassification & c, const Graph & g) -> Json;
    auto to_json(const PathRetraction & r, const SliceObject & x) -> Json;
    auto to_json(const SliceVerdict & v) -> Json;
    auto to_json(const EmbeddingReport & r) -> Json;
    auto to_json(const DichotomyReport & r) -> Json;
}

#endif
