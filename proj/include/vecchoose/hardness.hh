#pragma once

#include <vecchoose/engine.hh>
#include <vecchoose/graph.hh>
#include <vecchoose/linalg.hh>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vecchoose
{
    struct Literal
    {
        /// 1-based, as in DIMACS.
        std::size_t variable = 0;
        bool positive = true;

        auto operator== (const Literal & other) const -> bool = default;
    };

    using Clause = std::array<Literal, 3>;

    struct Cnf
    {
        std::size_t num_vars = 0;
        std::vector<Clause> clauses;

        /// Throws ClauseArityError / RepeatedVariableError / ParseError.
        auto validate() const -> void;

        /// truth[v - 1] is the value of variable v.
        auto satisfied_by(const std::vector<bool> & truth) const -> bool;

        auto operator== (const Cnf & other) const -> bool = default;
    };

    auto parse_dimacs(std::string_view text) -> Cnf;
    auto print_dimacs(const Cnf & cnf) -> std::string;

    /// Entry vertex next to in (or the previous cycle), two middle vertices
    /// and the far vertex opposite the entry.
    struct FourCycle
    {
        std::size_t entry = 0, upper = 0, lower = 0, far = 0;
    };

    /// cycles[0] has no out; cycle c >= 1 carries outs[c-1] on its far vertex,
    /// and separators[c-1] joins that far vertex to the next entry.
    struct Branch
    {
        std::vector<FourCycle> cycles;
        std::vector<std::size_t> outs;
        std::vector<std::size_t> separators;
    };

    struct GadgetLayout
    {
        std::size_t in_vertex = 0;
        Branch top, bottom;

        auto branch(bool top_branch) const -> const Branch & { return top_branch ? top : bottom; }
    };

    struct ExistsGraph
    {
        Graph graph;
        DimensionMap f;
        GadgetLayout layout;
    };

    /// Appends an exists-graph to g (and its dimensions to f); label_prefix
    /// is prepended to every vertex label.
    auto add_exists_graph(Graph & g, DimensionMap & f, std::size_t n1, std::size_t n2, const std::string & label_prefix = "") -> GadgetLayout;

    auto build_exists_graph(std::size_t n1, std::size_t n2) -> ExistsGraph;

    /// Cycles in order, each followed by its out and separator.
    auto branch_outward_order(const Branch & b) -> std::vector<std::size_t>;

    /// From the last cycle back to the first, skipping the upper vertex of
    /// the first cycle when skip_first_upper is set.
    auto branch_backward_order(const Branch & b, bool skip_first_upper) -> std::vector<std::size_t>;

    /// x_in in W_in and x_B in W_B, nonzero, leaving dim(W_A cap x_in^perp cap x_B^perp) >= 2.
    auto claim3_choice(const Subspace & w_in, const Subspace & w_a, const Subspace & w_b) -> std::pair<Vector, Vector>;

    /// The bad C_4 data padded to F^7 with e_x (x in {6, 7}, 1-based) added
    /// to the first subspace.
    auto claim4_assignment(const Field & field, std::size_t x) -> SubspaceAssignment;

    /// Writes the forcing subspaces of one gadget into spaces (ambient t, j
    /// the 1-based index of the forced direction).
    auto place_forcing(const GadgetLayout & layout, std::vector<Subspace> & spaces, const Field & field, std::size_t t, std::size_t j) -> void;

    auto gadget_forcing_assignment(const ExistsGraph & h, const Field & field, std::size_t t, std::size_t j) -> SubspaceAssignment;

    struct ForcingReport
    {
        /// Every choice has a branch whose outs are all proportional to e_j.
        bool some_branch_forced = true;

        /// Stronger: a nonzero e_6 (e_7) coefficient at in forces the top
        /// (bottom) outs.
        bool activated_branch_forced = true;

        std::uint64_t choices = 0;
    };

    /// Enumerates every valid choice of a forcing assignment.
    auto check_gadget_forcing(const ExistsGraph & h, const SubspaceAssignment & a, std::size_t j) -> ForcingReport;

    struct ReductionOutput
    {
        Cnf cnf;
        Graph graph;
        DimensionMap f;
        std::vector<GadgetLayout> gadgets;
        std::vector<std::size_t> clause_vertices;

        /// The out vertex wired to each literal.
        std::vector<std::array<std::size_t, 3>> clause_outs;
    };

    auto build_reduction(const Cnf & cnf) -> ReductionOutput;

    /// Forcing gadgets with variable v pointing at e_{v+7} in F^{n+7}.
    auto reduction_unsat_assignment(const ReductionOutput & r, const Field & field) -> SubspaceAssignment;

    auto sat_choice_strategy(const ReductionOutput & r, const SubspaceAssignment & a, const std::vector<bool> & truth) -> Choice;

    /// Nine copies plus v1, v2 for k = 3, then k^2 copies per further level.
    auto amplify_to_k(const Graph & g, const DimensionMap & f, std::size_t k) -> Graph;

    /// Lifts an f-assignment to a 3-assignment of amplify_to_k(g, f, 3) in F^{t+3}.
    auto amplify_assignment(const SubspaceAssignment & a) -> SubspaceAssignment;
}
