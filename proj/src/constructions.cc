#include <vecchoose/constructions.hh>
#include <vecchoose/errors.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace vecchoose;

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto unit(const Field & f, size_t t, size_t i) -> Vector
    {
        return Vector::unit(f, t, i);
    }

    auto span_of(const Field & f, size_t t, const vector<Vector> & vs) -> Subspace
    {
        return Subspace::span(f, t, vs);
    }

    auto require_finite(const Field & f, const string & what) -> void
    {
        if (! f.is_prime())
            throw PreconditionViolated(what + " needs a finite prime field");
    }

    /// Whether g is K_{a,b} with the left block 0..a-1.
    auto is_complete_bipartite(const Graph & g, size_t a) -> bool
    {
        if (a > g.size())
            return false;
        size_t b = g.size() - a;
        if (g.edges().size() != a * b)
            return false;
        for (size_t u = 0 ; u < a ; ++u)
            for (size_t v = a ; v < g.size() ; ++v)
                if (! g.adjacent(u, v))
                    return false;
        return true;
    }

    auto postconditions_hold(const Subspace & u1, const Subspace & u2, const Subspace & u3, const Vector & x1, const Vector & x2) -> bool
    {
        return ! x1.is_zero() && ! x2.is_zero() && u1.contains(x1) && u2.contains(x2)
            && dot(x1, x2).is_zero()
            && restrict_orthogonal(restrict_orthogonal(u3, x1), x2).dim() + 1 >= u3.dim();
    }

    auto combine(const std::array<Scalar, 3> & c, const vector<Vector> & vs) -> Vector
    {
        Vector r = vs[0] * c[0];
        for (size_t i = 1 ; i < 3 ; ++i)
            r = r + vs[i] * c[i];
        return r;
    }

    auto proof_choice_3sub(const Subspace & u1, const Subspace & u2, const Subspace & u3) -> optional<pair<Vector, Vector>>
    {
        auto common = subspace_intersect(u1, u2);
        if (common.dim() >= 3) {
            std::array<Vector, 3> w{ common.basis()[0], common.basis()[1], common.basis()[2] };
            auto x = combine(find_isotropic_combination(w, w), common.basis());
            return pair{ x, x };
        }

        auto perp3 = orthogonal_complement(u3);
        auto s1 = subspace_intersect(u1, perp3);
        if (s1.dim() > 0) {
            auto x1 = s1.first_nonzero();
            return pair{ x1, restrict_orthogonal(u2, x1).first_nonzero() };
        }
        auto s2 = subspace_intersect(u2, perp3);
        if (s2.dim() > 0) {
            auto x2 = s2.first_nonzero();
            return pair{ restrict_orthogonal(u1, x2).first_nonzero(), x2 };
        }

        auto s = subspace_intersect(subspace_sum(u1, u2), perp3);
        if (s.dim() < 3)
            return std::nullopt;
        vector<Vector> generators = u1.basis();
        generators.insert(generators.end(), u2.basis().begin(), u2.basis().end());
        std::array<Vector, 3> w{ s.basis()[0], s.basis()[1], s.basis()[2] }, z = w;
        for (size_t i = 0 ; i < 3 ; ++i) {
            auto c = solve_combination(generators, s.basis()[i]);
            if (! c)
                throw InternalError("a member of U1 + U2 has no decomposition");
            Vector part(u1.field(), u1.ambient());
            for (size_t r = 0 ; r < u1.dim() ; ++r)
                part = part + u1.basis()[r] * (*c)[r];
            w[i] = part;
            z[i] = s.basis()[i] - part;
        }
        auto alpha = find_isotropic_combination(w, z);
        return pair{ combine(alpha, { w.begin(), w.end() }), combine(alpha, { z.begin(), z.end() }) };
    }
}

auto EdgePartition::part(size_t e, size_t v) const -> size_t
{
    auto & edge = graph.edges().at(e);
    if (edge.first == v)
        return parts.at(e)[0];
    if (edge.second == v)
        return parts.at(e)[1];
    throw InvalidParameter("vertex " + std::to_string(v) + " is not on edge " + std::to_string(e));
}

auto EdgePartition::validate() const -> void
{
    if (k == 0)
        throw InvalidParameter("a partition needs at least one part");
    if (parts.size() != graph.edges().size())
        throw InvalidParameter("partition covers " + std::to_string(parts.size()) + " edges, graph has "
                + std::to_string(graph.edges().size()));
    for (size_t e = 0 ; e < parts.size() ; ++e)
        for (auto i : parts[e])
            if (i >= k)
                throw InvalidParameter("edge " + std::to_string(e) + " uses part " + std::to_string(i)
                        + " of " + std::to_string(k));
}

auto vecchoose::partition_assignment(const EdgePartition & p, const Field & field) -> SubspaceAssignment
{
    p.validate();
    size_t m = p.graph.edges().size(), n = p.graph.size(), t = m + p.k * n;
    SubspaceAssignment a{ p.graph, field, t, {} };
    Scalar one = Scalar::from_int(field, 1);
    for (size_t v = 0 ; v < n ; ++v) {
        vector<Vector> rows;
        for (size_t i = 0 ; i < p.k ; ++i) {
            Vector w = unit(field, t, m + v * p.k + i);
            for (auto e : p.graph.incident(v))
                if (p.part(e, v) == i)
                    w[e] = one;
            rows.push_back(w);
        }
        a.spaces.push_back(span_of(field, t, rows));
    }
    return a;
}

auto vecchoose::partition_verdict_name(PartitionVerdict v) -> string
{
    switch (v) {
        case PartitionVerdict::certified_yes: return "certified_yes";
        case PartitionVerdict::refuted: return "refuted";
        case PartitionVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

auto vecchoose::labeling_hits_edge(const EdgePartition & p, const PartLabeling & g) -> bool
{
    if (g.size() != p.graph.size())
        throw InvalidParameter("labeling size differs from the graph");
    for (size_t e = 0 ; e < p.graph.edges().size() ; ++e) {
        auto [u, v] = p.graph.edges()[e];
        if (p.parts[e][0] == g[u] && p.parts[e][1] == g[v])
            return true;
    }
    return false;
}

auto vecchoose::check_k_partitioned_exhaustive(const EdgePartition & p, uint64_t budget) -> PartitionCheck
{
    p.validate();
    size_t n = p.graph.size();
    uint64_t total = 1;
    for (size_t i = 0 ; i < n ; ++i) {
        if (total > budget / p.k)
            throw BudgetExceeded(std::to_string(p.k) + "^" + std::to_string(n) + " labelings exceed the budget of "
                    + std::to_string(budget));
        total *= p.k;
    }

    // Look for a labeling that avoids every edge, pruning as soon as an edge
    // between decided vertices is hit.
    PartitionCheck result;
    PartLabeling g(n, 0);
    std::function<auto (size_t) -> bool> extend = [&] (size_t v) -> bool {
        if (v == n)
            return true;
        for (size_t i = 0 ; i < p.k ; ++i) {
            ++result.examined;
            bool hit = false;
            for (auto e : p.graph.incident(v)) {
                auto [a, b] = p.graph.edges()[e];
                size_t other = a == v ? b : a;
                if (other < v && p.part(e, v) == i && p.part(e, other) == g[other]) {
                    hit = true;
                    break;
                }
            }
            if (hit)
                continue;
            g[v] = i;
            if (extend(v + 1))
                return true;
        }
        return false;
    };
    if (extend(0)) {
        result.verdict = PartitionVerdict::refuted;
        result.refutation = g;
    }
    else
        result.verdict = PartitionVerdict::certified_yes;
    return result;
}

auto vecchoose::check_k_partitioned_randomized(const EdgePartition & p, uint64_t seed, uint64_t trials) -> PartitionCheck
{
    p.validate();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, p.k - 1);
    PartitionCheck result;
    PartLabeling g(p.graph.size());
    for (uint64_t trial = 0 ; trial < trials ; ++trial) {
        for (auto & x : g)
            x = pick(rng);
        ++result.examined;
        if (! labeling_hits_edge(p, g)) {
            result.verdict = PartitionVerdict::refuted;
            result.refutation = g;
            return result;
        }
    }
    return result;
}

auto vecchoose::random_edge_partition(const Graph & g, size_t k, uint64_t seed) -> EdgePartition
{
    if (k == 0)
        throw InvalidParameter("a partition needs at least one part");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, k - 1);
    EdgePartition p{ g, k, {} };
    for (size_t e = 0 ; e < g.edges().size() ; ++e) {
        size_t a = pick(rng);
        p.parts.push_back({ a, pick(rng) });
    }
    return p;
}

auto vecchoose::projective_plane(std::uint32_t q) -> ProjectivePlane
{
    Field f = Field::prime(q);
    ProjectivePlane plane{ q, projective_points(Subspace::full(f, 3)), {} };
    for (auto & a : plane.points) {
        vector<size_t> line;
        for (size_t j = 0 ; j < plane.points.size() ; ++j)
            if (dot(a, plane.points[j]).is_zero())
                line.push_back(j);
        plane.lines.push_back(line);
    }
    return plane;
}

auto vecchoose::projective_plane_partition(std::uint32_t q, const vector<size_t> & removed) -> ProjectivePartition
{
    ProjectivePartition result;
    result.plane = projective_plane(q);
    auto & plane = result.plane;
    size_t p = result.distinguished;

    // line containing each pair of points
    size_t np = plane.points.size();
    vector<vector<size_t>> line_through(np, vector<size_t>(np, 0));
    vector<vector<size_t>> lines_at(np);
    for (size_t l = 0 ; l < plane.lines.size() ; ++l)
        for (auto a : plane.lines[l]) {
            lines_at[a].push_back(l);
            for (auto b : plane.lines[l])
                line_through[a][b] = l;
        }

    vector<size_t> h_points;
    vector<size_t> group;
    for (auto l : lines_at[p])
        for (auto a : plane.lines[l])
            if (a != p) {
                h_points.push_back(a);
                group.push_back(l);
            }

    if (removed.size() > q - 1)
        throw InvalidParameter("at most q-1 vertices may be removed");
    vector<bool> drop(h_points.size(), false);
    for (auto r : removed) {
        if (r >= h_points.size() || drop[r])
            throw InvalidParameter("bad or repeated removed vertex " + std::to_string(r));
        drop[r] = true;
    }
    vector<size_t> kept_group;
    for (size_t i = 0 ; i < h_points.size() ; ++i)
        if (! drop[i]) {
            result.point_of_vertex.push_back(h_points[i]);
            kept_group.push_back(group[i]);
        }

    size_t n = result.point_of_vertex.size();
    Graph g(n);
    for (size_t u = 0 ; u < n ; ++u)
        for (size_t v = u + 1 ; v < n ; ++v)
            if (kept_group[u] != kept_group[v])
                g.add_edge(u, v);

    // the q lines at a vertex avoiding p, numbered in line order
    auto part_of = [&] (size_t point, size_t line) {
        size_t index = 0;
        for (auto l : lines_at[point]) {
            if (l == line)
                return index;
            if (std::find(plane.lines[l].begin(), plane.lines[l].end(), p) == plane.lines[l].end())
                ++index;
        }
        throw InternalError("line does not pass through the point");
    };

    result.partition = EdgePartition{ g, q, {} };
    vector<bool> used(plane.lines.size(), false);
    for (auto & [u, v] : g.edges()) {
        size_t a = result.point_of_vertex[u], b = result.point_of_vertex[v];
        size_t l = line_through[a][b];
        result.line_of_edge.push_back(l);
        result.partition.parts.push_back({ part_of(a, l), part_of(b, l) });
        if (! used[l]) {
            used[l] = true;
            ++result.lines_used;
        }
    }
    result.certified = result.lines_used < n;
    return result;
}

auto vecchoose::choice_3sub(const Subspace & u1, const Subspace & u2, const Subspace & u3) -> pair<Vector, Vector>
{
    require_finite(u1.field(), "choice_3sub");
    if (! (u1.field() == u2.field() && u2.field() == u3.field()))
        throw FieldMismatch("choice_3sub over mixed fields");
    if (u1.ambient() != u2.ambient() || u2.ambient() != u3.ambient())
        throw AmbientMismatch("choice_3sub over mixed ambients");
    bool binary = u1.field().characteristic() == 2;
    long slack = long(u1.dim()) + long(u2.dim()) - long(u3.dim());
    if (u1.dim() < 2 || u2.dim() < 2 || slack < (binary ? 4 : 5))
        throw PreconditionViolated("choice_3sub needs dims of U1, U2 at least 2 and dim U1 + dim U2 - dim U3 >= "
                + string(binary ? "4" : "5"));

    auto found = proof_choice_3sub(u1, u2, u3);
    if (found && postconditions_hold(u1, u2, u3, found->first, found->second))
        return *found;
    if (slack >= 5)
        throw InternalError("three-subspace choice failed its postconditions");

    // weakened binary bound: the case split may come up short, so search
    for (auto & x1 : projective_points(u1))
        for (auto & x2 : projective_points(restrict_orthogonal(u2, x1)))
            if (postconditions_hold(u1, u2, u3, x1, x2))
                return { x1, x2 };
    throw InternalError("no three-subspace choice exists for this binary instance");
}

auto vecchoose::complete_graph_choice(const SubspaceAssignment & a, size_t k) -> Choice
{
    a.validate();
    require_finite(a.field, "complete_graph_choice");
    size_t n = a.graph.size();
    size_t full = k * k + 2 * k + 3;
    bool shrunk = a.field.characteristic() == 2 && n + 1 == full;
    if (k == 0 || (n != full && ! shrunk))
        throw PreconditionViolated("complete_graph_choice needs n = k^2+2k+3 (or k^2+2k+2 over GF(2))");
    if (a.graph.edges().size() != n * (n - 1) / 2)
        throw PreconditionViolated("complete_graph_choice needs a complete graph");
    for (auto & s : a.spaces)
        if (s.dim() != n - k)
            throw PreconditionViolated("complete_graph_choice needs every dimension equal to n - k");

    PartialChoice chosen(n);
    vector<Subspace> avail = a.spaces;
    auto decide = [&] (size_t v, const Vector & x) {
        chosen[v] = x;
        for (size_t u = 0 ; u < n ; ++u)
            if (! chosen[u])
                avail[u] = restrict_orthogonal(avail[u], x);
    };

    size_t next = k, removed = 0;
    for (size_t i = 1 ; i <= k ; ++i) {
        size_t v = i - 1;
        for (size_t j = 1 ; j <= k - i + 1 ; ++j) {
            size_t target = (n - k) - removed - (j - 1);
            if (avail[v].dim() < target)
                throw InternalError("available space of an A vertex shrank below its bound");
            auto u3 = avail[v].truncated(target);
            auto [x1, x2] = choice_3sub(avail[next], avail[next + 1], u3);
            decide(next, x1);
            decide(next + 1, x2);
            next += 2;
        }
        removed += 2 * (k - i + 1);
    }

    vector<size_t> rest;
    for (size_t c = next ; c < n ; ++c)
        rest.push_back(c);
    for (size_t i = k ; i-- > 0 ;)
        rest.push_back(i);
    for (auto v : rest) {
        if (avail[v].dim() == 0)
            throw InternalError("no vector left for vertex " + std::to_string(v));
        decide(v, avail[v].first_nonzero());
    }

    auto c = completed(chosen);
    if (! verify_choice(a, c).valid)
        throw InternalError("complete_graph_choice produced an invalid choice");
    return c;
}

auto vecchoose::cycle_bad_assignment(size_t l, const Field & field) -> SubspaceAssignment
{
    if (l < 3)
        throw InvalidParameter("cycles need at least 3 vertices");
    Scalar one = Scalar::from_int(field, 1);
    vector<vector<Vector>> rows;
    size_t t = 0;
    auto e = [&] (size_t i) { return unit(field, t, i - 1); };
    if (l % 2 == 1) {
        t = 3;
        Scalar alpha = find_special_alpha(field, SpecialAlpha::quadratic_no_root);
        rows = {
            { e(1), e(2) },
            { e(1), e(2) + e(3) },
            { e(1) + e(3) * alpha, e(2) },
        };
    }
    else if (field.characteristic() != 2) {
        t = 4;
        Scalar alpha = find_special_alpha(field, SpecialAlpha::nonsquare);
        rows = {
            { e(1), e(2) },
            { e(1), e(2) },
            { e(1) + e(4), e(2) + e(3) },
            { e(1) + e(3) * alpha, e(2) + e(4) },
        };
    }
    else {
        t = 5;
        Scalar alpha = find_special_alpha(field, SpecialAlpha::artin_schreier);
        rows = {
            { e(1), e(2) },
            { e(1), e(2) },
            { e(1) + e(4), e(2) + e(3) + e(5) },
            { e(1) + e(3), e(2) + e(4) * alpha + e(5) },
        };
    }
    size_t padding = l - rows.size();
    rows.insert(rows.begin() + 1, padding, vector<Vector>{ e(1), e(2) });

    SubspaceAssignment a{ cycle_graph(l), field, t, {} };
    for (auto & r : rows)
        a.spaces.push_back(span_of(field, t, r));
    return a;
}

auto vecchoose::bipartite_bound(size_t n, size_t k) -> size_t
{
    if (n == 0)
        return 0;
    size_t m = 0;
    for (size_t i = 0 ; i < k ; ++i)
        m += (n - 1) / (k - i);
    return m;
}

auto vecchoose::bipartite_choice(const SubspaceAssignment & a, size_t n) -> Choice
{
    a.validate();
    if (a.graph.size() == 0)
        throw PreconditionViolated("bipartite_choice needs a nonempty graph");
    size_t k = a.spaces.back().dim();
    if (k == 0 || k > a.graph.size() || ! is_complete_bipartite(a.graph, k))
        throw PreconditionViolated("bipartite_choice needs K_{k,m} with right dims k");
    size_t m = a.graph.size() - k;
    for (size_t v = 0 ; v < a.graph.size() ; ++v)
        if (a.spaces[v].dim() != (v < k ? n : k))
            throw PreconditionViolated("bipartite_choice needs left dims n and right dims k");
    if (m > bipartite_bound(n, k))
        throw PreconditionViolated("K_{k,m} has more right vertices than the bound allows");

    size_t t = a.ambient;
    vector<Subspace> l;
    for (size_t j = 0 ; j < m ; ++j)
        l.push_back(orthogonal_complement(a.spaces[k + j]));
    size_t front = 0;
    Choice choice;
    for (size_t i = 1 ; i <= k ; ++i) {
        size_t take = std::min((n - 1) / (k - i + 1), m - front);
        Subspace w = a.spaces[i - 1];
        for (size_t j = front ; j < front + take ; ++j)
            if (l[j].dim() == t - k + (i - 1))
                w = subspace_intersect(w, l[j]);
        if (w.dim() == 0)
            throw InternalError("no left vector in the intersection of step " + std::to_string(i));
        Vector x = w.first_nonzero();
        for (auto & s : l)
            s = subspace_sum(s, span_of(a.field, t, { x }));
        choice.push_back(x);
        front += take;
    }
    for (size_t j = 0 ; j < m ; ++j) {
        auto y = orthogonal_complement(l[j]);
        if (y.dim() == 0)
            throw InternalError("L_j filled the whole space for right vertex " + std::to_string(j));
        choice.push_back(y.first_nonzero());
    }
    if (! verify_choice(a, choice).valid)
        throw InternalError("bipartite_choice produced an invalid choice");
    return choice;
}

auto vecchoose::vandermonde_family(const Field & field, size_t n, size_t m) -> VectorFamily
{
    if (n == 0)
        throw InvalidParameter("vector length must be positive");
    if (field.is_prime() && field.order() < m)
        throw FieldTooSmall("GF(" + std::to_string(field.order()) + ") has fewer than " + std::to_string(m)
                + " distinct evaluation points");
    VectorFamily family{ field, n, {}, n };
    for (size_t g = 0 ; g < m ; ++g) {
        Scalar gamma = Scalar::from_int(field, std::int64_t(g));
        Vector b(field, n);
        for (size_t i = 0 ; i < n ; ++i)
            b[i] = pow(gamma, i);
        family.vectors.push_back(b);
    }
    return family;
}

auto vecchoose::projective_family(const Field & field, size_t n) -> VectorFamily
{
    require_finite(field, "projective_family");
    if (n == 0)
        throw InvalidParameter("vector length must be positive");
    uint64_t q = field.order(), hyperplane = 0, power = 1;
    for (size_t i = 0 ; i + 1 < n ; ++i) {
        hyperplane += power;
        power *= q;
    }
    return VectorFamily{ field, n, projective_points(Subspace::full(field, n)), size_t(hyperplane + 1) };
}

auto vecchoose::spans_every_subset(const VectorFamily & family, uint64_t max_subsets, uint64_t seed) -> bool
{
    size_t m = family.vectors.size(), t = family.t;
    if (t > m)
        return true;
    auto spans = [&] (const vector<size_t> & pick) {
        vector<Vector> rows;
        for (auto i : pick)
            rows.push_back(family.vectors[i]);
        return Matrix::from_rows(family.field, family.n, rows).rank() == family.n;
    };

    // C(m, t) with early exit once it passes the limit
    double count = 1;
    for (size_t i = 0 ; i < t ; ++i)
        count = count * double(m - i) / double(i + 1);
    if (count <= double(max_subsets)) {
        vector<size_t> pick(t);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (! spans(pick))
                return false;
            size_t i = t;
            while (i > 0 && pick[i - 1] == m - t + i - 1)
                --i;
            if (i == 0)
                return true;
            ++pick[i - 1];
            for (size_t j = i ; j < t ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    std::mt19937_64 rng(seed);
    vector<size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    for (uint64_t s = 0 ; s < max_subsets ; ++s) {
        std::shuffle(all.begin(), all.end(), rng);
        if (! spans({ all.begin(), all.begin() + t }))
            return false;
    }
    return true;
}

auto vecchoose::adversarial_kind_name(AdversarialKind kind) -> string
{
    switch (kind) {
        case AdversarialKind::coordinate_blocks: return "coordinate_blocks";
        case AdversarialKind::tensor: return "tensor";
        case AdversarialKind::vandermonde: return "vandermonde";
        case AdversarialKind::projective_reps: return "projective_reps";
        case AdversarialKind::ksubsets: return "ksubsets";
        case AdversarialKind::even_block: return "even_block";
    }
    return "?";
}

auto vecchoose::parse_adversarial_kind(const string & name) -> AdversarialKind
{
    for (auto kind : { AdversarialKind::coordinate_blocks, AdversarialKind::tensor, AdversarialKind::vandermonde,
            AdversarialKind::projective_reps, AdversarialKind::ksubsets, AdversarialKind::even_block })
        if (adversarial_kind_name(kind) == name)
            return kind;
    throw InvalidParameter("unknown construction '" + name + "'");
}

auto vecchoose::coordinate_blocks_assignment(const Field & field, size_t n, size_t k) -> SubspaceAssignment
{
    if (n == 0 || k == 0)
        throw InvalidParameter("coordinate_blocks needs n, k >= 1");
    size_t m = 1;
    for (size_t i = 0 ; i < k ; ++i)
        m *= n;
    size_t t = n * k;
    SubspaceAssignment a{ complete_bipartite_graph(k, m), field, t, {} };
    for (size_t i = 0 ; i < k ; ++i) {
        vector<size_t> block(n);
        std::iota(block.begin(), block.end(), i * n);
        a.spaces.push_back(Subspace::coordinate(field, t, block));
    }
    for (size_t idx = 0 ; idx < m ; ++idx) {
        vector<size_t> coords(k);
        size_t rest = idx;
        for (size_t i = k ; i-- > 0 ;) {
            coords[i] = i * n + rest % n;
            rest /= n;
        }
        a.spaces.push_back(Subspace::coordinate(field, t, coords));
    }
    return a;
}

auto vecchoose::tensor_assignment(const VectorFamily & family, size_t k) -> SubspaceAssignment
{
    if (k == 0 || family.n == 0)
        throw InvalidParameter("tensor needs k, n >= 1");
    size_t n = family.n, t = k * n, m = family.vectors.size();
    SubspaceAssignment a{ complete_bipartite_graph(k, m), family.field, t, {} };
    for (size_t i = 0 ; i < k ; ++i) {
        vector<size_t> block(n);
        std::iota(block.begin(), block.end(), i * n);
        a.spaces.push_back(Subspace::coordinate(family.field, t, block));
    }
    for (auto & b : family.vectors) {
        vector<Vector> rows;
        for (size_t i = 0 ; i < k ; ++i)
            rows.push_back(tensor_unit(k, i, b));
        a.spaces.push_back(span_of(family.field, t, rows));
    }
    return a;
}

auto vecchoose::vandermonde_assignment(const Field & field, size_t n, size_t k) -> SubspaceAssignment
{
    if (n == 0 || k == 0)
        throw InvalidParameter("vandermonde needs n, k >= 1");
    return tensor_assignment(vandermonde_family(field, n, k * (n - 1) + 1), k);
}

auto vecchoose::projective_reps_assignment(const Field & field, size_t n, size_t k) -> SubspaceAssignment
{
    if (! field.is_prime())
        throw InvalidParameter("projective_reps needs a finite prime field");
    if (n == 0 || k == 0)
        throw InvalidParameter("projective_reps needs n, k >= 1");
    if (field.order() < k)
        throw FieldTooSmall("projective_reps needs q >= k");
    auto family = projective_family(field, n);
    size_t m = k * (family.t - 1) + 1;
    if (m > family.vectors.size())
        throw InternalError("not enough projective points");
    family.vectors.erase(family.vectors.begin() + m, family.vectors.end());
    return tensor_assignment(family, k);
}

auto vecchoose::ksubsets_assignment(const Field & field, size_t k) -> SubspaceAssignment
{
    if (k == 0)
        throw InvalidParameter("ksubsets needs k >= 1");
    size_t t = 2 * k - 1;
    vector<Subspace> subsets;
    vector<size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        subsets.push_back(Subspace::coordinate(field, t, pick));
        size_t i = k;
        while (i > 0 && pick[i - 1] == t - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (size_t j = i ; j < k ; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    size_t m = subsets.size();
    SubspaceAssignment a{ complete_bipartite_graph(m, m), field, t, subsets };
    a.spaces.insert(a.spaces.end(), subsets.begin(), subsets.end());
    return a;
}

auto vecchoose::even_block_assignment(const Field & field, size_t n) -> SubspaceAssignment
{
    if (n == 0 || n % 2 != 0)
        throw InvalidParameter("even_block needs a positive even n");
    auto c4 = cycle_bad_assignment(4, field);
    size_t k = n / 2, t = c4.ambient * k;
    auto & l1 = c4.spaces[0];
    auto & r1 = c4.spaces[1];
    auto & l2 = c4.spaces[2];
    auto & r2 = c4.spaces[3];

    SubspaceAssignment a{ complete_bipartite_graph(2, n), field, t, {} };
    vector<Vector> rows;
    for (size_t i = 0 ; i < k ; ++i)
        for (auto & b : l1.basis())
            rows.push_back(tensor_unit(k, i, b));
    a.spaces.push_back(span_of(field, t, rows));
    rows.clear();
    for (auto & b : l2.basis()) {
        Vector sum(field, t);
        for (size_t i = 0 ; i < k ; ++i)
            sum = sum + tensor_unit(k, i, b);
        rows.push_back(sum);
    }
    a.spaces.push_back(span_of(field, t, rows));
    for (size_t j = 0 ; j < k ; ++j)
        for (auto * r : { &r1, &r2 }) {
            rows.clear();
            for (auto & b : r->basis())
                rows.push_back(tensor_unit(k, j, b));
            a.spaces.push_back(span_of(field, t, rows));
        }
    return a;
}

auto vecchoose::adversarial_assignment(AdversarialKind kind, const Field & field, const vector<size_t> & params) -> SubspaceAssignment
{
    auto need = [&] (size_t count) {
        if (params.size() != count)
            throw InvalidParameter(adversarial_kind_name(kind) + " takes " + std::to_string(count) + " parameters");
    };
    switch (kind) {
        case AdversarialKind::coordinate_blocks:
            need(2);
            return coordinate_blocks_assignment(field, params[0], params[1]);
        case AdversarialKind::tensor:
            // without an explicit family, use the Vandermonde one
            need(3);
            return tensor_assignment(vandermonde_family(field, params[0], params[2]), params[1]);
        case AdversarialKind::vandermonde:
            need(2);
            return vandermonde_assignment(field, params[0], params[1]);
        case AdversarialKind::projective_reps:
            need(2);
            return projective_reps_assignment(field, params[0], params[1]);
        case AdversarialKind::ksubsets:
            need(1);
            return ksubsets_assignment(field, params[0]);
        case AdversarialKind::even_block:
            need(1);
            return even_block_assignment(field, params[0]);
    }
    throw InvalidParameter("unknown construction");
}

auto vecchoose::ball_bound(std::int64_t n, std::int64_t t, std::int64_t q) -> std::int64_t
{
    return n - 2 + (q + 1) * (t - n + 1);
}

auto vecchoose::greedy_asymmetric_choice(const SubspaceAssignment & a, size_t left) -> Choice
{
    a.validate();
    if (! is_complete_bipartite(a.graph, left) || left == 0 || left == a.graph.size())
        throw PreconditionViolated("greedy_asymmetric_choice needs K_{l1,l2} with the left block first");
    size_t right = a.graph.size() - left;
    size_t k1 = a.spaces[0].dim(), k2 = a.spaces[left].dim();
    for (size_t v = 0 ; v < left ; ++v)
        k1 = std::min(k1, a.spaces[v].dim());
    for (size_t v = left ; v < a.graph.size() ; ++v)
        k2 = std::min(k2, a.spaces[v].dim());

    vector<size_t> order(a.graph.size());
    std::iota(order.begin(), order.end(), 0);
    if (left < k2)
        ;
    else if (right < k1)
        std::rotate(order.begin(), order.begin() + left, order.end());
    else
        throw PreconditionViolated("greedy_asymmetric_choice needs l1 < k2 or l2 < k1");
    PartialChoice c(a.graph.size());
    extend_greedily(a, c, order);
    return completed(c);
}

auto vecchoose::k2_choice(const SubspaceAssignment & a) -> Choice
{
    a.validate();
    if (a.graph.size() < 2 || ! is_complete_bipartite(a.graph, 2))
        throw PreconditionViolated("k2_choice needs K_{2,m}");
    size_t n = a.spaces[0].dim(), m = a.graph.size() - 2;
    for (size_t v = 1 ; v < a.graph.size() ; ++v)
        if (a.spaces[v].dim() != 2)
            throw PreconditionViolated("k2_choice needs dims (n; 2, 2)");
    if (m + 1 > n)
        throw PreconditionViolated("k2_choice needs m <= n - 1");
    vector<size_t> order{ 1 };
    for (size_t j = 2 ; j < a.graph.size() ; ++j)
        order.push_back(j);
    order.push_back(0);
    PartialChoice c(a.graph.size());
    extend_greedily(a, c, order);
    return completed(c);
}

auto vecchoose::haynes_bases(const Subspace & u, const Subspace & v) -> HaynesBases
{
    if (! u.field().is_rationals() || ! (u.field() == v.field()))
        throw PreconditionViolated("haynes_bases works over Q");
    if (u.dim() != 2 || v.dim() != 2 || u.ambient() != v.ambient())
        throw PreconditionViolated("haynes_bases needs two 2-dimensional subspaces of one space");
    if (subspace_intersect(u, orthogonal_complement(v)).dim() > 0)
        throw NotApplicable("some nonzero vector of U is orthogonal to all of V");

    // Gram-Schmidt: norms are positive over Q
    auto & b = u.basis();
    Vector u1 = b[0];
    Vector u2 = b[1] - u1 * (dot(b[1], u1) / dot(u1, u1));
    auto s1 = restrict_orthogonal(v, u1), s2 = restrict_orthogonal(v, u2);
    if (s1.dim() != 1 || s2.dim() != 1)
        throw InternalError("Gram matrix of U and V is singular despite the hypothesis");
    Vector v1 = s1.first_nonzero(), v2 = s2.first_nonzero();
    v1 = v1 * dot(u2, v1).inv();
    v2 = v2 * dot(u1, v2).inv();
    return HaynesBases{ u1, u2, v1, v2, dot(v1, v2).is_zero() };
}

auto vecchoose::k2n_choice_odd(const SubspaceAssignment & a) -> OddOutcome
{
    a.validate();
    if (! a.field.is_rationals())
        throw PreconditionViolated("k2n_choice_odd works over Q");
    if (a.graph.size() < 3 || ! is_complete_bipartite(a.graph, 2))
        throw PreconditionViolated("k2n_choice_odd needs K_{2,n}");
    size_t n = a.graph.size() - 2;
    if (n % 2 == 0)
        throw PreconditionViolated("k2n_choice_odd needs odd n");
    if (a.spaces[0].dim() != n)
        throw PreconditionViolated("vertex 0 must have dimension n");
    for (size_t v = 1 ; v < a.graph.size() ; ++v)
        if (a.spaces[v].dim() != 2)
            throw PreconditionViolated("k2n_choice_odd needs dims (n; 2, 2)");

    OddOutcome outcome;
    auto finish = [&] (Choice c, const string & branch) {
        if (! verify_choice(a, c).valid)
            throw InternalError("k2n_choice_odd produced an invalid choice in branch " + branch);
        outcome.choice = std::move(c);
        outcome.branch = branch;
        return outcome;
    };

    auto & small = a.spaces[1];
    for (size_t j = 0 ; j < n ; ++j) {
        auto s = subspace_intersect(small, orthogonal_complement(a.spaces[2 + j]));
        if (s.dim() == 0)
            continue;
        PartialChoice c(a.graph.size());
        c[1] = s.first_nonzero();
        vector<size_t> order;
        for (size_t i = 0 ; i < n ; ++i)
            if (i != j)
                order.push_back(2 + i);
        order.push_back(0);
        order.push_back(2 + j);
        extend_greedily(a, c, order);
        return finish(completed(c), "orthogonal-subspace");
    }

    vector<HaynesBases> bases;
    for (size_t j = 0 ; j < n ; ++j)
        bases.push_back(haynes_bases(small, a.spaces[2 + j]));
    auto & u1 = bases[0].u1;
    auto & u2 = bases[0].u2;

    size_t t = a.ambient;
    Matrix basis(a.field, t, n);
    for (size_t c = 0 ; c < n ; ++c)
        for (size_t r = 0 ; r < t ; ++r)
            basis(r, c) = a.spaces[0].basis()[c][r];
    vector<Vector> rows1, rows2;
    for (auto & hb : bases) {
        rows1.push_back(hb.v1);
        rows2.push_back(hb.v2);
    }
    Matrix m1 = Matrix::from_rows(a.field, t, rows1) * basis;
    Matrix m2 = Matrix::from_rows(a.field, t, rows2) * basis;

    auto assemble = [&] (const Vector & x1, const vector<Vector> & ys, const Matrix & system) {
        auto kernel = system.kernel();
        if (kernel.empty())
            throw InternalError("expected a singular system");
        Choice c{ basis * kernel[0], x1 };
        c.insert(c.end(), ys.begin(), ys.end());
        return c;
    };

    if (m1.determinant().is_zero())
        return finish(assemble(u1, rows1, m1), "singular");

    Matrix neg = m2 * m1.inverse() * Scalar::from_int(a.field, -1);
    vector<vector<Rational>> entries(n, vector<Rational>(n));
    for (size_t r = 0 ; r < n ; ++r)
        for (size_t c = 0 ; c < n ; ++c)
            entries[r][c] = neg(r, c).rational();
    auto poly = characteristic_polynomial(entries);
    auto roots = rational_roots(poly);
    if (! roots.empty()) {
        Scalar alpha = Scalar::from_rational(a.field, roots.front());
        vector<Vector> ys;
        for (auto & hb : bases)
            ys.push_back(hb.v1 * alpha + hb.v2);
        return finish(assemble(u1 * alpha - u2, ys, m1 * alpha + m2), "rational-root");
    }
    if (count_real_roots(poly) == 0)
        throw InternalError("odd-degree polynomial without a real root");
    outcome.polynomial = poly;
    outcome.branch = "irrational-root";
    return outcome;
}

auto vecchoose::even_block_rational_certificate() -> CycleObstruction
{
    return cycle_obstruction(cycle_bad_assignment(4, Field::rationals()));
}
