#pragma once

#include <vecchoose/engine.hh>
#include <vecchoose/linalg.hh>

#include <cstdint>
#include <random>
#include <vector>

namespace testing
{
    using namespace vecchoose;

    inline auto gf(std::uint64_t p) -> Field
    {
        return Field::prime(p);
    }

    inline auto vec(const Field & f, std::vector<std::int64_t> v) -> Vector
    {
        return Vector::from_ints(f, v);
    }

    inline auto span_of(const Field & f, std::size_t t, std::vector<std::vector<std::int64_t>> rows) -> Subspace
    {
        std::vector<Vector> vs;
        for (auto & r : rows)
            vs.push_back(Vector::from_ints(f, r));
        return Subspace::span(f, t, vs);
    }

    /// Every vector of GF(p)^t, as integer residues.
    inline auto all_vectors(const Field & f, std::size_t t) -> std::vector<Vector>
    {
        std::vector<Vector> result;
        std::vector<std::int64_t> digits(t, 0);
        std::int64_t p = f.order();
        while (true) {
            result.push_back(Vector::from_ints(f, digits));
            std::size_t i = 0;
            while (i < t && ++digits[i] == p)
                digits[i++] = 0;
            if (i == t)
                break;
        }
        return result;
    }

    /// Tuple-enumeration oracle: is there a nonzero member per vertex with
    /// adjacent members orthogonal?
    inline auto naive_choosable(const SubspaceAssignment & a) -> bool
    {
        auto universe = all_vectors(a.field, a.ambient);
        std::vector<std::vector<Vector>> members(a.graph.size());
        for (std::size_t v = 0 ; v < a.graph.size() ; ++v)
            for (auto & x : universe)
                if (! x.is_zero() && a.spaces[v].contains(x))
                    members[v].push_back(x);
        std::vector<std::size_t> index(a.graph.size(), 0);
        for (auto & m : members)
            if (m.empty())
                return false;
        while (true) {
            bool ok = true;
            for (auto & [u, v] : a.graph.edges())
                if (! dot(members[u][index[u]], members[v][index[v]]).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
            std::size_t i = 0;
            while (i < index.size() && ++index[i] == members[i].size())
                index[i++] = 0;
            if (i == index.size())
                return false;
        }
    }

    inline auto random_assignment(const Graph & g, const Field & f, std::size_t t, const DimensionMap & dims, std::mt19937_64 & rng) -> SubspaceAssignment
    {
        SubspaceAssignment a{ g, f, t, {} };
        for (std::size_t v = 0 ; v < g.size() ; ++v)
            a.spaces.push_back(random_subspace(f, t, dims[v], rng));
        return a;
    }

    inline auto uniform_dims(const Graph & g, std::size_t d) -> DimensionMap
    {
        return DimensionMap(g.size(), d);
    }
}
