#pragma once

#include <vecchoose/engine.hh>
#include <vecchoose/graph.hh>
#include <vecchoose/linalg.hh>
#include <vecchoose/polynomial.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vecchoose
{
    /// For every edge e = {u, v} (u = e.first), the part of E_u and the part
    /// of E_v that e belongs to.
    struct EdgePartition
    {
        Graph graph;
        std::size_t k = 1;
        std::vector<std::array<std::size_t, 2>> parts;

        /// Part of edge e at its endpoint v.
        auto part(std::size_t e, std::size_t v) const -> std::size_t;

        /// Throws InvalidParameter on size or range mismatches.
        auto validate() const -> void;

        auto operator== (const EdgePartition & other) const -> bool = default;
    };

    /// g(v) for every vertex.
    using PartLabeling = std::vector<std::size_t>;

    /// Indicator vectors of the parts, padded by private coordinates so that
    /// every subspace has dimension k, in ambient |E| + k|V|.
    auto partition_assignment(const EdgePartition & p, const Field & field) -> SubspaceAssignment;

    enum class PartitionVerdict
    {
        certified_yes,
        refuted,
        inconclusive
    };

    auto partition_verdict_name(PartitionVerdict v) -> std::string;

    struct PartitionCheck
    {
        PartitionVerdict verdict = PartitionVerdict::inconclusive;

        /// A labeling under which no edge lies in both endpoints' chosen parts.
        std::optional<PartLabeling> refutation;

        /// Labelings (or partial labelings) examined.
        std::uint64_t examined = 0;
    };

    /// Whether a labeling leaves some edge in both endpoints' chosen parts.
    auto labeling_hits_edge(const EdgePartition & p, const PartLabeling & g) -> bool;

    /// Exact; throws BudgetExceeded when k^|V| exceeds the budget.
    auto check_k_partitioned_exhaustive(const EdgePartition & p, std::uint64_t budget = 10'000'000) -> PartitionCheck;

    /// Tries uniformly random labelings; refuted on the first violating one.
    auto check_k_partitioned_randomized(const EdgePartition & p, std::uint64_t seed, std::uint64_t trials) -> PartitionCheck;

    auto random_edge_partition(const Graph & g, std::size_t k, std::uint64_t seed) -> EdgePartition;

    /// PG(2, q) over a prime field: points are the canonical projective points
    /// of F_q^3, line i is the set of points orthogonal to point i.
    struct ProjectivePlane
    {
        std::uint32_t q = 0;
        std::vector<Vector> points;
        std::vector<std::vector<std::size_t>> lines;
    };

    auto projective_plane(std::uint32_t q) -> ProjectivePlane;

    struct ProjectivePartition
    {
        ProjectivePlane plane;

        /// Point 0; H lives on the other points of the lines through it.
        std::size_t distinguished = 0;

        /// The plane point of every vertex of the (possibly shrunk) graph.
        std::vector<std::size_t> point_of_vertex;

        /// The line each edge was assigned to.
        std::vector<std::size_t> line_of_edge;

        EdgePartition partition;

        std::size_t lines_used = 0;

        /// lines_used < |V|, which forces every labeling to hit an edge.
        bool certified = false;
    };

    /// H on the q(q+1) points other than the distinguished one, vertices
    /// grouped by the line through the distinguished point; removed lists up
    /// to q-1 vertex ids of H to delete first.
    auto projective_plane_partition(std::uint32_t q, const std::vector<std::size_t> & removed = {}) -> ProjectivePartition;

    /// Nonzero x1 in U1, x2 in U2 with <x1,x2> = 0 and
    /// dim(U3 cap x1^perp cap x2^perp) >= dim U3 - 1.
    auto choice_3sub(const Subspace & u1, const Subspace & u2, const Subspace & u3) -> std::pair<Vector, Vector>;

    /// The K_n procedure with parts A, B, C. Accepts n = k^2+2k+3, or
    /// n = k^2+2k+2 over GF(2).
    auto complete_graph_choice(const SubspaceAssignment & a, std::size_t k) -> Choice;

    /// Bad 2-dimensional assignment on C_l; vertices follow cycle_graph order.
    auto cycle_bad_assignment(std::size_t l, const Field & field) -> SubspaceAssignment;

    /// sum_{i<k} floor((n-1)/(k-i)).
    auto bipartite_bound(std::size_t n, std::size_t k) -> std::size_t;

    /// Choice on K_{k,m} (left block first) with left dims n and right dims k.
    auto bipartite_choice(const SubspaceAssignment & a, std::size_t n) -> Choice;

    struct VectorFamily
    {
        Field field;
        std::size_t n = 0;
        std::vector<Vector> vectors;

        /// Every t of the vectors span F^n.
        std::size_t t = 0;
    };

    /// b_i = (1, g, ..., g^{n-1}) for g = 0..m-1.
    auto vandermonde_family(const Field & field, std::size_t n, std::size_t m) -> VectorFamily;

    /// One canonical vector per projective point of F^n.
    auto projective_family(const Field & field, std::size_t n) -> VectorFamily;

    /// Checks every t-subset when there are at most max_subsets of them,
    /// otherwise samples that many subsets.
    auto spans_every_subset(const VectorFamily & family, std::uint64_t max_subsets = 200'000, std::uint64_t seed = 0) -> bool;

    enum class AdversarialKind
    {
        coordinate_blocks,
        tensor,
        vandermonde,
        projective_reps,
        ksubsets,
        even_block
    };

    auto adversarial_kind_name(AdversarialKind kind) -> std::string;
    auto parse_adversarial_kind(const std::string & name) -> AdversarialKind;

    /// K_{k,n^k}: coordinate blocks on the left, one coordinate per block on
    /// the right, tuples in lexicographic order.
    auto coordinate_blocks_assignment(const Field & field, std::size_t n, std::size_t k) -> SubspaceAssignment;

    /// K_{k,m} in F^{kn}: block i on the left, span(e_i (x) b_j) on the right.
    auto tensor_assignment(const VectorFamily & family, std::size_t k) -> SubspaceAssignment;

    auto vandermonde_assignment(const Field & field, std::size_t n, std::size_t k) -> SubspaceAssignment;
    auto projective_reps_assignment(const Field & field, std::size_t n, std::size_t k) -> SubspaceAssignment;

    /// K_{m,m}, m = C(2k-1, k), coordinate spans of the k-subsets of [2k-1].
    auto ksubsets_assignment(const Field & field, std::size_t k) -> SubspaceAssignment;

    /// K_{2,n} with dims (n; 2, 2) built from k = n/2 copies of the bad C_4
    /// data; vertex 0 is the n-dimensional side.
    auto even_block_assignment(const Field & field, std::size_t n) -> SubspaceAssignment;

    /// Dispatch by kind; params are (n, k) except ksubsets (k), even_block (n)
    /// and tensor (n, k, m), which uses the m-vector Vandermonde family.
    auto adversarial_assignment(AdversarialKind kind, const Field & field, const std::vector<std::size_t> & params) -> SubspaceAssignment;

    /// n - 2 + (q+1)(t-n+1).
    auto ball_bound(std::int64_t n, std::int64_t t, std::int64_t q) -> std::int64_t;

    /// One-pass greedy on K_{l1,l2} (left block of size left first).
    auto greedy_asymmetric_choice(const SubspaceAssignment & a, std::size_t left) -> Choice;

    /// K_{2,m} with vertex 0 of dim n, vertex 1 of dim 2, right dims 2, m <= n-1.
    auto k2_choice(const SubspaceAssignment & a) -> Choice;

    struct HaynesBases
    {
        Vector u1, u2, v1, v2;

        /// <v1,v2> = 0. The cross pattern fixes v up to scaling, so this
        /// holds only for some pairs.
        bool v_orthogonal = false;
    };

    /// u is an orthogonal basis of U with nonzero norms; v1 spans V cap u1^perp
    /// and v2 spans V cap u2^perp, scaled so <u1,v2> = <u2,v1> = 1.
    auto haynes_bases(const Subspace & u, const Subspace & v) -> HaynesBases;

    struct OddOutcome
    {
        std::optional<Choice> choice;

        /// det(alpha I + N) when no rational root was available.
        std::optional<Polynomial> polynomial;

        /// "orthogonal-subspace", "singular", "rational-root" or "irrational-root".
        std::string branch;

        auto existence_only() const -> bool { return ! choice.has_value(); }
    };

    /// K_{2,n} over Q for odd n, vertex 0 of dim n, vertex 1 of dim 2.
    auto k2n_choice_odd(const SubspaceAssignment & a) -> OddOutcome;

    /// Over Q the even block has no choice because any choice restricts to
    /// one of the embedded C_4; this returns that C_4's obstruction.
    auto even_block_rational_certificate() -> CycleObstruction;
}
