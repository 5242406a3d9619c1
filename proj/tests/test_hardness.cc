#include <doctest.h>

#include "support.hh"

#include <vecchoose/constructions.hh>
#include <vecchoose/errors.hh>
#include <vecchoose/hardness.hh>

#include <chrono>

using namespace vecchoose;
using namespace testing;

namespace
{
    const char * all_patterns =
        "c every sign pattern on three variables\n"
        "p cnf 3 8\n"
        "1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n"
        "-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n";

    auto truth_table_satisfiable(const Cnf & cnf) -> bool
    {
        for (std::size_t bits = 0 ; bits < (std::size_t(1) << cnf.num_vars) ; ++bits) {
            std::vector<bool> truth;
            for (std::size_t v = 0 ; v < cnf.num_vars ; ++v)
                truth.push_back((bits >> v) & 1);
            if (cnf.satisfied_by(truth))
                return true;
        }
        return false;
    }

    auto random_cnf(std::size_t n, std::size_t m, std::mt19937_64 & rng) -> Cnf
    {
        Cnf cnf{ n, {} };
        std::uniform_int_distribution<std::size_t> var(1, n);
        for (std::size_t i = 0 ; i < m ; ++i) {
            Clause c;
            for (std::size_t s = 0 ; s < 3 ; ++s) {
                std::size_t v;
                do
                    v = var(rng);
                while ((s > 0 && c[0].variable == v) || (s > 1 && c[1].variable == v));
                c[s] = { v, bool(rng() & 1) };
            }
            cnf.clauses.push_back(c);
        }
        return cnf;
    }

    auto random_f_assignment(const ReductionOutput & r, const Field & f, std::mt19937_64 & rng) -> SubspaceAssignment
    {
        return random_assignment(r.graph, f, r.cnf.num_vars + 7, r.f, rng);
    }
}

TEST_CASE("dimacs parsing")
{
    auto cnf = parse_dimacs(all_patterns);
    CHECK(cnf.num_vars == 3);
    CHECK(cnf.clauses.size() == 8);
    CHECK(! truth_table_satisfiable(cnf));
    CHECK(parse_dimacs(print_dimacs(cnf)) == cnf);

    auto single = parse_dimacs("p cnf 3 1\n1 2\n 3 0\n");
    CHECK(single.clauses[0][2] == Literal{ 3, true });
    CHECK(truth_table_satisfiable(single));

    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), ClauseArityError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 -1 2 0\n"), RepeatedVariableError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 x 0\n"), ParseError);
}

TEST_CASE("exists graph shape")
{
    auto h = build_exists_graph(1, 1);
    CHECK(h.graph.size() == 19);
    CHECK(build_exists_graph(0, 0).graph.size() == 9);
    CHECK(build_exists_graph(4, 4).graph.size() == 55);
    auto parts = bipartition(h.graph);
    REQUIRE(parts.bipartite);
    int side = parts.side[h.layout.top.outs[0]];
    CHECK(parts.side[h.layout.bottom.outs[0]] == side);
    CHECK(h.graph.label(h.layout.in_vertex) == "in");

    auto big = build_exists_graph(3, 2);
    CHECK(big.layout.top.separators.size() == 2);
    CHECK(big.layout.bottom.separators.size() == 1);
    for (std::size_t v = 0 ; v < big.graph.size() ; ++v)
        CHECK((big.f[v] == 2 || big.f[v] == 3));

    auto order = branch_outward_order(big.layout.top);
    auto back = branch_backward_order(big.layout.top, false);
    CHECK(order.size() == back.size() + big.layout.top.outs.size());
    CHECK(branch_backward_order(big.layout.top, true).size() == back.size() - 1);
}

TEST_CASE("claim3_choice leaves two dimensions")
{
    std::mt19937_64 rng(3);
    for (auto f : { gf(3), gf(2), Field::rationals() })
        for (int trial = 0 ; trial < 200 ; ++trial) {
            auto w_in = random_subspace(f, 6, 2, rng);
            auto w_a = random_subspace(f, 6, 3, rng);
            auto w_b = random_subspace(f, 6, 2, rng);
            auto [x, y] = claim3_choice(w_in, w_a, w_b);
            CHECK(w_in.contains(x));
            CHECK(w_b.contains(y));
            CHECK(! x.is_zero());
            CHECK(! y.is_zero());
            CHECK(restrict_orthogonal(restrict_orthogonal(w_a, x), y).dim() >= 2);
        }
    auto f = gf(3);
    auto shared = span_of(f, 4, { { 1, 0, 0, 0 }, { 0, 1, 0, 0 } });
    auto [x, y] = claim3_choice(shared, span_of(f, 4, { { 1, 0, 0, 0 }, { 0, 1, 0, 0 }, { 0, 0, 1, 0 } }), shared);
    CHECK(x == y);
    CHECK_THROWS_AS(claim3_choice(shared, shared, shared), PreconditionViolated);
}

TEST_CASE("claim4 forces the first vector onto e_x")
{
    for (auto [p, x] : { std::pair{ 2, 6 }, std::pair{ 3, 7 }, std::pair{ 3, 6 } }) {
        auto a = claim4_assignment(gf(p), x);
        CHECK(a.ambient == 7);
        auto ex = Vector::unit(a.field, 7, x - 1);
        std::uint64_t seen = 0;
        enumerate_choices(a, [&] (const Choice & c) {
            ++seen;
            CHECK(proportional(c[0], ex));
            return true;
        });
        CHECK(seen > 0);
    }
    // over Q a choice with u_1 off e_x restricts to a real choice of the bad C_4 data
    auto q = Field::rationals();
    auto a = claim4_assignment(q, 6);
    auto bare = cycle_bad_assignment(4, q);
    CHECK(! real_cycle_choice(bare).exists);
    for (std::size_t v = 0 ; v < 4 ; ++v)
        CHECK(a.spaces[v].dim() == bare.spaces[v].dim() + (v == 0));
}

TEST_CASE("gadget forcing by enumeration")
{
    for (auto p : { 2, 3 })
        for (auto [n1, n2] : { std::pair{ 1, 1 }, std::pair{ 1, 0 } }) {
            auto h = build_exists_graph(n1, n2);
            auto a = gadget_forcing_assignment(h, gf(p), 8, 8);
            a.validate();
            CHECK(a.dimensions() == h.f);
            auto report = check_gadget_forcing(h, a, 8);
            CHECK(report.choices > 0);
            CHECK(report.some_branch_forced);
            CHECK(report.activated_branch_forced);
        }
    auto h = build_exists_graph(1, 1);
    CHECK_THROWS_AS(gadget_forcing_assignment(h, gf(2), 7, 7), PreconditionViolated);
    CHECK_THROWS_AS(gadget_forcing_assignment(h, gf(2), 9, 10), PreconditionViolated);
}

TEST_CASE("gadget choices exist with either branch activated")
{
    // pinning in to e_6 or e_7 still leaves a choice
    for (auto p : { 2, 3 }) {
        auto h = build_exists_graph(1, 1);
        auto a = gadget_forcing_assignment(h, gf(p), 8, 8);
        for (bool top : { true, false }) {
            auto restricted = a;
            restricted.spaces[h.layout.in_vertex] = Subspace::span(a.field, 8,
                    std::vector<Vector>{ Vector::unit(a.field, 8, top ? 5 : 6) });
            auto cert = find_choice(restricted);
            REQUIRE(cert.verdict == Verdict::choosable);
            auto ej = Vector::unit(a.field, 8, 7);
            for (auto o : h.layout.branch(top).outs)
                CHECK(proportional((*cert.witness)[o], ej));
        }
    }
}

TEST_CASE("reduction sizes")
{
    auto one = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    CHECK(one.graph.size() == 43);
    CHECK(one.clause_vertices.size() == 1);
    CHECK(one.graph.label(one.clause_vertices[0]) == "C1");
    CHECK(one.graph.label(one.gadgets[1].in_vertex) == "x2.in");

    auto all = build_reduction(parse_dimacs(all_patterns));
    CHECK(all.graph.size() == 173);
    CHECK(bipartition(all.graph).bipartite);

    std::mt19937_64 rng(11);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto cnf = random_cnf(3 + trial % 4, 1 + trial % 6, rng);
        auto r = build_reduction(cnf);
        CHECK(bipartition(r.graph).bipartite);
        CHECK(r.f.size() == r.graph.size());
        for (std::size_t i = 0 ; i < cnf.clauses.size() ; ++i)
            for (std::size_t s = 0 ; s < 3 ; ++s) {
                auto out = r.clause_outs[i][s];
                CHECK(r.graph.adjacent(out, r.clause_vertices[i]));
                auto & g = r.gadgets[cnf.clauses[i][s].variable - 1];
                auto & outs = g.branch(cnf.clauses[i][s].positive).outs;
                CHECK(std::find(outs.begin(), outs.end(), out) != outs.end());
            }
    }
}

TEST_CASE("unsatisfiable formula gives no choice")
{
    auto r = build_reduction(parse_dimacs(all_patterns));
    auto a = reduction_unsat_assignment(r, gf(2));
    CHECK(a.ambient == 10);
    CHECK(a.dimensions() == r.f);
    auto start = std::chrono::steady_clock::now();
    auto cert = find_choice(a);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(cert.verdict == Verdict::no_choice);
    CHECK(seconds < 300);
    MESSAGE("unsat reduction search took " << seconds << " s");
}

TEST_CASE("satisfying assignments give verified choices")
{
    auto r = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    std::mt19937_64 rng(5);
    for (auto f : { gf(2), gf(3), Field::rationals() }) {
        auto forcing = reduction_unsat_assignment(r, f);
        for (auto truth : { std::vector<bool>{ true, false, false }, std::vector<bool>{ false, true, true } })
            CHECK(verify_choice(forcing, sat_choice_strategy(r, forcing, truth)).valid);
        CHECK_THROWS_AS(sat_choice_strategy(r, forcing, { false, false, false }), NotSatisfying);
    }
    for (auto f : { gf(3), Field::rationals() })
        for (int trial = 0 ; trial < 50 ; ++trial) {
            auto a = random_f_assignment(r, f, rng);
            CHECK(verify_choice(a, sat_choice_strategy(r, a, { false, false, true })).valid);
        }

    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto cnf = random_cnf(5, 4, rng);
        auto rr = build_reduction(cnf);
        for (std::size_t bits = 0 ; bits < 32 ; ++bits) {
            std::vector<bool> truth;
            for (std::size_t v = 0 ; v < 5 ; ++v)
                truth.push_back((bits >> v) & 1);
            if (! cnf.satisfied_by(truth))
                continue;
            auto forcing = reduction_unsat_assignment(rr, gf(3));
            CHECK(verify_choice(forcing, sat_choice_strategy(rr, forcing, truth)).valid);
            auto a = random_f_assignment(rr, gf(3), rng);
            CHECK(verify_choice(a, sat_choice_strategy(rr, a, truth)).valid);
            break;
        }
    }
}

TEST_CASE("amplification")
{
    auto r = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    auto g3 = amplify_to_k(r.graph, r.f, 3);
    CHECK(g3.size() == 9 * 43 + 2);
    CHECK(bipartition(g3).bipartite);

    auto h = build_exists_graph(0, 0);
    CHECK(amplify_to_k(h.graph, h.f, 3).size() == 83);
    auto p4 = path_graph(3);
    DimensionMap f4{ 2, 3, 3, 2 };
    auto g4 = amplify_to_k(p4, f4, 3);
    CHECK(g4.size() == 38);
    auto g5 = amplify_to_k(p4, f4, 4);
    CHECK(g5.size() == 16 * 38 + 2);
    CHECK(bipartition(g5).bipartite);
    // v1, v2 of the last level see every vertex of their side
    CHECK(g5.degree(16 * 38) + g5.degree(16 * 38 + 1) == 16 * 38);

    CHECK_THROWS_AS(amplify_to_k(cycle_graph(3), DimensionMap(3, 2), 3), NotBipartite);
    CHECK_THROWS_AS(amplify_to_k(p4, f4, 2), InvalidParameter);
    CHECK_THROWS_AS(amplify_to_k(p4, DimensionMap{ 2, 4, 3, 2 }, 3), InvalidParameter);

    // lifted assignments are 3-assignments, and choices restrict back to
    // choices of the original after dropping the head coordinates
    std::mt19937_64 rng(2);
    for (auto p : { 2, 3 }) {
        auto a = random_assignment(p4, gf(p), 3, f4, rng);
        auto lifted = amplify_assignment(a);
        CHECK(lifted.ambient == 6);
        CHECK(lifted.graph == g4);
        for (auto & s : lifted.spaces)
            CHECK(s.dim() == 3);
        CHECK(naive_choosable(a) == (find_choice(lifted).verdict == Verdict::choosable));
    }
}
