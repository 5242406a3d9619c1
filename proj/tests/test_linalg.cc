#include <doctest.h>

#include "support.hh"

#include <vecchoose/errors.hh>

#include <algorithm>

using namespace vecchoose;
using namespace testing;

TEST_CASE("span is canonical")
{
    Field f2 = gf(2);
    auto s = span_of(f2, 2, { { 1, 1 }, { 0, 1 } });
    CHECK(s.dim() == 2);
    CHECK(s.basis()[0] == vec(f2, { 1, 0 }));
    CHECK(s.basis()[1] == vec(f2, { 0, 1 }));

    Field q = Field::rationals();
    auto r = span_of(q, 2, { { 2, 4 } });
    REQUIRE(r.dim() == 1);
    CHECK(r.basis()[0] == vec(q, { 1, 2 }));

    CHECK(Subspace::span(q, 3, std::vector<Vector>{}).dim() == 0);
}

TEST_CASE("sum and intersection examples")
{
    Field q = Field::rationals();
    CHECK(subspace_sum(span_of(q, 3, { { 1, 0, 0 } }), span_of(q, 3, { { 0, 1, 0 } })) == span_of(q, 3, { { 1, 0, 0 }, { 0, 1, 0 } }));
    auto u = span_of(q, 3, { { 1, 0, 0 }, { 0, 1, 0 } });
    auto v = span_of(q, 3, { { 0, 1, 0 }, { 0, 0, 1 } });
    CHECK(subspace_intersect(u, v) == span_of(q, 3, { { 0, 1, 0 } }));
    CHECK(subspace_intersect(u, u) == u);
    CHECK(subspace_sum(u, u) == u);
    CHECK(subspace_intersect(span_of(q, 3, { { 1, 0, 0 } }), span_of(q, 3, { { 0, 1, 0 } })).dim() == 0);
    Field f2 = gf(2);
    CHECK(subspace_sum(span_of(f2, 2, { { 1, 0 } }), span_of(f2, 2, { { 1, 1 } })).dim() == 2);
    CHECK_THROWS_AS(subspace_sum(span_of(q, 3, { { 1, 0, 0 } }), span_of(q, 2, { { 1, 0 } })), AmbientMismatch);
}

TEST_CASE("orthogonal complement examples")
{
    Field f3 = gf(3), f2 = gf(2);
    CHECK(orthogonal_complement(span_of(f3, 3, { { 1, 0, 0 } })) == span_of(f3, 3, { { 0, 1, 0 }, { 0, 0, 1 } }));
    auto diag = span_of(f2, 2, { { 1, 1 } });
    CHECK(orthogonal_complement(diag) == diag);
    CHECK(orthogonal_complement(Subspace::full(f3, 4)).dim() == 0);
}

TEST_CASE("intersection and complement agree with brute force membership")
{
    std::mt19937_64 rng(3);
    for (uint64_t p : { 2, 3 })
        for (int trial = 0 ; trial < 40 ; ++trial) {
            Field f = gf(p);
            size_t t = 2 + trial % 3;
            auto u = random_subspace(f, t, rng() % (t + 1), rng);
            auto v = random_subspace(f, t, rng() % (t + 1), rng);
            auto meet = subspace_intersect(u, v);
            auto perp = orthogonal_complement(u);
            size_t in_both = 0, in_meet = 0, orth = 0, in_perp = 0;
            for (auto & x : all_vectors(f, t)) {
                in_both += u.contains(x) && v.contains(x);
                in_meet += meet.contains(x);
                bool o = std::all_of(u.basis().begin(), u.basis().end(), [&] (const Vector & b) { return dot(b, x).is_zero(); });
                orth += o;
                in_perp += perp.contains(x);
                CHECK(o == perp.contains(x));
                CHECK((u.contains(x) && v.contains(x)) == meet.contains(x));
            }
            CHECK(in_both == in_meet);
            CHECK(orth == in_perp);
        }
}

TEST_CASE("projective points")
{
    Field f2 = gf(2), f5 = gf(5);
    CHECK(projective_points(span_of(f2, 3, { { 1, 0, 0 }, { 0, 1, 0 } })).size() == 3);
    CHECK(projective_points(Subspace::full(f2, 3)).size() == 7);
    CHECK(projective_points(span_of(f5, 2, { { 1, 2 } })).size() == 1);
    CHECK_THROWS_AS(projective_points(Subspace::full(Field::rationals(), 2)), InfiniteField);

    std::mt19937_64 rng(5);
    for (uint64_t p : { 2, 3, 5 }) {
        Field f = gf(p);
        auto u = random_subspace(f, 5, 3, rng);
        auto pts = projective_points(u);
        CHECK(pts.size() == (p * p * p - 1) / (p - 1));
        for (size_t i = 0 ; i < pts.size() ; ++i) {
            CHECK(u.contains(pts[i]));
            CHECK(! pts[i].is_zero());
            for (size_t j = 0 ; j < i ; ++j)
                CHECK(! proportional(pts[i], pts[j]));
        }
        CHECK(pts.front() == u.first_nonzero());
    }
}

TEST_CASE("isotropic combinations")
{
    Field f2 = gf(2), f3 = gf(3);
    std::array<Vector, 3> e2{ Vector::unit(f2, 3, 0), Vector::unit(f2, 3, 1), Vector::unit(f2, 3, 2) };
    auto a = find_isotropic_combination(e2, e2);
    CHECK(a[0].residue() == 1);
    CHECK(a[1].residue() == 1);
    CHECK(a[2].residue() == 0);

    std::array<Vector, 3> w{ Vector::unit(f3, 3, 0), Vector::unit(f3, 3, 1), Vector::unit(f3, 3, 2) };
    std::array<Vector, 3> z{ Vector::unit(f3, 3, 1), Vector::unit(f3, 3, 0), Vector::unit(f3, 3, 2) };
    auto b = find_isotropic_combination(w, z);
    CHECK((Scalar::from_int(f3, 2) * b[0] * b[1] + b[2] * b[2]).is_zero());

    std::array<Vector, 3> degenerate{ Vector(f3, 3), Vector::unit(f3, 3, 1), Vector::unit(f3, 3, 2) };
    auto c = find_isotropic_combination(degenerate, degenerate);
    CHECK(c[0].is_one());
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
}

TEST_CASE("random subspaces")
{
    CHECK(random_subspace(gf(2), 4, 0, 1).dim() == 0);
    CHECK(random_subspace(gf(3), 3, 3, 1) == Subspace::full(gf(3), 3));
    CHECK(random_subspace(gf(2), 8, 2, 7).dim() == 2);
    CHECK(random_subspace(gf(5), 6, 3, 9) == random_subspace(gf(5), 6, 3, 9));
    CHECK(random_subspace(Field::rationals(), 4, 2, 1).dim() == 2);
}

TEST_CASE("matrices")
{
    Field q = Field::rationals();
    std::vector<Vector> rows{ vec(q, { 2, 1 }), vec(q, { 1, 1 }) };
    auto m = Matrix::from_rows(q, 2, rows);
    CHECK(m.determinant().to_string() == "1");
    auto inv = m.inverse();
    auto id = m * inv;
    CHECK(id.row(0) == vec(q, { 1, 0 }));
    CHECK(id.row(1) == vec(q, { 0, 1 }));
    std::vector<Vector> singular{ vec(q, { 1, 2 }), vec(q, { 2, 4 }) };
    auto s = Matrix::from_rows(q, 2, singular);
    CHECK(s.determinant().is_zero());
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), DivisionByZero);
    auto k = s.kernel();
    REQUIRE(k.size() == 1);
    CHECK((s * k[0]).is_zero());
}
