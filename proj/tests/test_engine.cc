#include <doctest.h>

#include "support.hh"

#include <vecchoose/errors.hh>

#include <algorithm>

using namespace vecchoose;
using namespace testing;

TEST_CASE("verify_choice reports")
{
    Field q = Field::rationals();
    SubspaceAssignment a{ path_graph(1), q, 3, { span_of(q, 3, { { 1, 0, 0 } }), span_of(q, 3, { { 0, 1, 0 } }) } };
    CHECK(verify_choice(a, { vec(q, { 1, 0, 0 }), vec(q, { 0, 1, 0 }) }).valid);
    auto bad = verify_choice(a, { vec(q, { 1, 0, 0 }), vec(q, { 1, 0, 0 }) });
    CHECK(! bad.valid);
    CHECK(bad.bad_vertex == 1);

    Field f2 = gf(2);
    auto plane = span_of(f2, 3, { { 1, 1, 0 }, { 0, 0, 1 } });
    SubspaceAssignment b{ path_graph(1), f2, 3, { plane, plane } };
    CHECK(verify_choice(b, { vec(f2, { 1, 1, 0 }), vec(f2, { 1, 1, 0 }) }).valid);
    auto wrong = verify_choice(b, { vec(f2, { 0, 0, 1 }), vec(f2, { 0, 0, 1 }) });
    CHECK(! wrong.valid);
    CHECK(wrong.bad_edge == Edge{ 0, 1 });
}

TEST_CASE("find_choice basic cases")
{
    Field f2 = gf(2);
    auto full = Subspace::full(f2, 3);
    SubspaceAssignment tri{ complete_graph(3), f2, 3, { full, full, full } };
    auto c = find_choice(tri);
    REQUIRE(c.verdict == Verdict::choosable);
    CHECK(verify_choice(tri, *c.witness).valid);

    SubspaceAssignment edgeless{ Graph(4), f2, 2, std::vector<Subspace>(4, span_of(f2, 2, { { 1, 1 } })) };
    CHECK(find_choice(edgeless).verdict == Verdict::choosable);

    CHECK_THROWS_AS(find_choice(SubspaceAssignment{ Graph(1), Field::rationals(), 1, { Subspace::full(Field::rationals(), 1) } }), InfiniteField);
}

TEST_CASE("find_choice agrees with tuple enumeration on all small assignments")
{
    // every assignment of subspaces of dimension 1 or 2 in GF(2)^3 on K_2 and C_3
    Field f2 = gf(2);
    std::vector<Subspace> spaces;
    for (auto & x : all_vectors(f2, 3))
        for (auto & y : all_vectors(f2, 3)) {
            auto s = Subspace::span(f2, 3, std::vector<Vector>{ x, y });
            if (s.dim() >= 1 && std::find(spaces.begin(), spaces.end(), s) == spaces.end())
                spaces.push_back(s);
        }
    REQUIRE(spaces.size() == 14);
    for (auto & s : spaces)
        for (auto & t : spaces) {
            SubspaceAssignment a{ path_graph(1), f2, 3, { s, t } };
            CHECK((find_choice(a).verdict == Verdict::choosable) == naive_choosable(a));
        }
    size_t disagreements = 0, choosable = 0;
    for (auto & s : spaces)
        for (auto & t : spaces)
            for (auto & u : spaces) {
                SubspaceAssignment a{ cycle_graph(3), f2, 3, { s, t, u } };
                auto cert = find_choice(a);
                bool naive = naive_choosable(a);
                choosable += naive;
                disagreements += (cert.verdict == Verdict::choosable) != naive;
                if (cert.witness)
                    CHECK(verify_choice(a, *cert.witness).valid);
            }
    CHECK(disagreements == 0);
    CHECK(choosable > 0);
    CHECK(choosable < 14 * 14 * 14);
}

TEST_CASE("verdict does not depend on the order hint")
{
    std::mt19937_64 rng(29);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        Field f = gf(trial % 2 ? 3 : 2);
        Graph g(6);
        for (size_t u = 0 ; u < 6 ; ++u)
            for (size_t v = u + 1 ; v < 6 ; ++v)
                if (rng() % 2)
                    g.add_edge(u, v);
        auto a = random_assignment(g, f, 4, uniform_dims(g, 2), rng);
        auto reference = find_choice(a);
        CHECK(reference.verdict == (naive_choosable(a) ? Verdict::choosable : Verdict::no_choice));
        for (int k = 0 ; k < 10 ; ++k) {
            std::vector<size_t> order(6);
            for (size_t i = 0 ; i < 6 ; ++i)
                order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            SearchOptions options;
            options.order_hint = order;
            options.memoize = k % 2;
            options.split_components = k % 3;
            CHECK(find_choice(a, options).verdict == reference.verdict);
        }
    }
}

TEST_CASE("budgets yield inconclusive, never no_choice")
{
    Field f3 = gf(3);
    auto g = complete_graph(6);
    std::mt19937_64 rng(31);
    auto a = random_assignment(g, f3, 6, uniform_dims(g, 4), rng);
    SearchOptions options;
    options.node_budget = 1;
    CHECK(find_choice(a, options).verdict == Verdict::inconclusive);
}

TEST_CASE("enumerate_choices counts projective classes")
{
    Field f3 = gf(3);
    // an edge with both ends the full plane: x any of 4 points, y the unique perpendicular
    auto plane = Subspace::full(f3, 2);
    SubspaceAssignment a{ path_graph(1), f3, 2, { plane, plane } };
    uint64_t seen = 0;
    CHECK(enumerate_choices(a, [&] (const Choice & c) { ++seen; return verify_choice(a, c).valid; }) == 4);
    CHECK(seen == 4);
    CHECK(enumerate_choices(a, [] (const Choice &) { return false; }) == 1);
}

TEST_CASE("cycle obstruction polynomials")
{
    Field q = Field::rationals();
    // C_3 with the whole plane at every vertex: no three pairwise orthogonal real vectors
    auto plane = Subspace::full(q, 2);
    SubspaceAssignment c3{ cycle_graph(3), q, 2, { plane, plane, plane } };
    auto o = cycle_obstruction(c3);
    CHECK(o.polynomial.degree() == 2);
    CHECK(o.polynomial(Rational(0)) != 0);
    CHECK(! o.has_real_root);
    CHECK(! o.infinity_valid);
    CHECK(! real_cycle_choice(c3).exists);

    // W_1 orthogonal to W_2: degenerate first step, always choosable
    SubspaceAssignment split{ cycle_graph(3), q, 4,
        { span_of(q, 4, { { 1, 0, 0, 0 }, { 0, 1, 0, 0 } }), span_of(q, 4, { { 0, 0, 1, 0 }, { 0, 0, 0, 1 } }),
          span_of(q, 4, { { 1, 0, 1, 0 }, { 0, 1, 0, 1 } }) } };
    CHECK_THROWS_AS(cycle_obstruction(split), DegenerateStep);
    auto verdict = real_cycle_choice(split);
    CHECK(verdict.exists);
    REQUIRE(verdict.witness);
    CHECK(verify_choice(split, *verdict.witness).valid);

    // C_4 in the plane: x, x^perp, x, x^perp works
    SubspaceAssignment c4{ cycle_graph(4), q, 2, { plane, plane, plane, plane } };
    auto even = real_cycle_choice(c4);
    CHECK(even.exists);
    REQUIRE(even.witness);
    CHECK(verify_choice(c4, *even.witness).valid);
}

TEST_CASE("rational cycle roots give choices modulo p")
{
    std::mt19937_64 rng(37);
    Field q = Field::rationals();
    int checked = 0;
    for (int trial = 0 ; trial < 200 && checked < 20 ; ++trial) {
        auto g = cycle_graph(3 + trial % 3);
        SubspaceAssignment a{ g, q, 3, {} };
        for (size_t v = 0 ; v < g.size() ; ++v)
            a.spaces.push_back(random_subspace(q, 3, 2, rng));
        RealCycleVerdict verdict;
        try {
            verdict = real_cycle_choice(a);
        }
        catch (const DegenerateStep &) {
            continue;
        }
        if (verdict.witness)
            CHECK(verify_choice(a, *verdict.witness).valid);
        if (! verdict.obstruction || ! verdict.obstruction->has_rational_root)
            continue;
        // reduce an integral basis modulo 101
        Field f = gf(101);
        SubspaceAssignment m{ g, f, 3, {} };
        bool ok = true;
        for (auto & s : a.spaces) {
            std::vector<Vector> rows;
            for (auto & b : s.basis()) {
                Integer common = 1;
                for (auto & e : b.entries())
                    common = lcm(common, denominator(e.rational()));
                std::vector<Scalar> entries;
                for (auto & e : b.entries())
                    entries.push_back(Scalar::from_rational(f, e.rational() * common));
                rows.emplace_back(f, entries);
            }
            m.spaces.push_back(Subspace::span(f, 3, rows));
            ok = ok && m.spaces.back().dim() == 2;
        }
        if (! ok)
            continue;
        ++checked;
        CHECK(find_choice(m).verdict == Verdict::choosable);
    }
    CHECK(checked > 0);
}
