#pragma once

#include <vecchoose/graph.hh>
#include <vecchoose/linalg.hh>
#include <vecchoose/polynomial.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vecchoose
{
    /// A graph together with one subspace of F^t per vertex.
    struct SubspaceAssignment
    {
        Graph graph;
        Field field;
        std::size_t ambient = 0;
        std::vector<Subspace> spaces;

        /// Throws AmbientMismatch / FieldMismatch / InvalidParameter when the
        /// parts disagree.
        auto validate() const -> void;

        auto dimensions() const -> DimensionMap;

        auto operator== (const SubspaceAssignment & other) const -> bool = default;
    };

    /// One vector per vertex.
    using Choice = std::vector<Vector>;

    struct VerifyReport
    {
        bool valid = true;
        std::optional<std::size_t> bad_vertex;
        std::optional<Edge> bad_edge;
        std::string reason;
    };

    auto verify_choice(const SubspaceAssignment & a, const Choice & c) -> VerifyReport;

    /// A choice under construction; empty entries are undecided.
    using PartialChoice = std::vector<std::optional<Vector>>;

    /// W_v intersected with the orthogonal complement of every decided neighbour.
    auto available_space(const SubspaceAssignment & a, const PartialChoice & c, std::size_t v) -> Subspace;

    /// Decides the given vertices in order, each getting the first canonical
    /// nonzero vector of its available space. Throws InternalError when an
    /// available space is zero.
    auto extend_greedily(const SubspaceAssignment & a, PartialChoice & c, const std::vector<std::size_t> & order) -> void;

    /// Throws InternalError if a vertex is undecided.
    auto completed(const PartialChoice & c) -> Choice;

    enum class Verdict
    {
        choosable,
        no_choice,
        inconclusive
    };

    auto verdict_name(Verdict v) -> std::string;

    struct SearchOptions
    {
        /// Vertex priority; earlier means preferred among equally constrained vertices.
        std::optional<std::vector<std::size_t>> order_hint;

        /// Zero means unlimited.
        std::uint64_t node_budget = 0;
        double time_budget_seconds = 0.0;

        /// Recorded in the certificate only; the search itself is deterministic.
        std::uint64_t seed = 0;

        bool split_components = true;
        bool memoize = true;

        /// Upper bound on words held by the memo table before it is flushed.
        std::size_t memo_words = std::size_t{1} << 26;
    };

    struct SearchCertificate
    {
        Verdict verdict = Verdict::inconclusive;
        std::optional<Choice> witness;
        std::uint64_t nodes = 0;
        std::string order;
        std::uint64_t seed = 0;
        double seconds = 0.0;
    };

    /// Exhaustive backtracking with orthogonality propagation over canonical
    /// projective points. Exact unless a budget runs out, in which case the
    /// verdict is inconclusive. Throws InfiniteField over Q.
    auto find_choice(const SubspaceAssignment & a, const SearchOptions & options = {}) -> SearchCertificate;

    /// Calls visit on every valid choice, one representative per vertex up to
    /// scaling, in DFS order; stops early when visit returns false. Returns
    /// the number visited.
    auto enumerate_choices(const SubspaceAssignment & a, const std::function<auto (const Choice &) -> bool> & visit) -> std::uint64_t;

    /// Vertex order of a cycle graph, starting at 0 and continuing to its
    /// smaller neighbour. Throws PreconditionViolated if g is not a cycle.
    auto cycle_order(const Graph & g) -> std::vector<std::size_t>;

    struct CycleObstruction
    {
        /// <x_l(z), x_1(z)> where x_1 = a + z b over the canonical basis (a, b) of W_1.
        Polynomial polynomial;
        bool has_rational_root = false;
        bool has_real_root = false;

        /// Whether x_1 = b (the point z = infinity) extends to a valid choice.
        bool infinity_valid = false;

        /// A valid choice exists over the reals.
        auto real_choice_exists() const -> bool { return has_real_root || infinity_valid; }
    };

    /// Symbolic propagation around a cycle with 2-dimensional rational
    /// subspaces. Throws DegenerateStep when some step is identically free.
    auto cycle_obstruction(const SubspaceAssignment & a) -> CycleObstruction;

    struct RealCycleVerdict
    {
        bool exists = false;

        /// Rational witness, when one is available.
        std::optional<Choice> witness;
        std::optional<CycleObstruction> obstruction;
        std::optional<int> degenerate_step;
    };

    /// Decides real choosability of a 2-dimensional cycle assignment over Q,
    /// branch-splitting on a degenerate step.
    auto real_cycle_choice(const SubspaceAssignment & a) -> RealCycleVerdict;
}
