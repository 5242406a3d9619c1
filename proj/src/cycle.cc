#include <vecchoose/engine.hh>
#include <vecchoose/errors.hh>

using namespace vecchoose;

using std::optional;
using std::size_t;
using std::vector;

namespace
{
    using PolyVector = vector<Polynomial>;

    auto constant(const Vector & v) -> PolyVector
    {
        PolyVector result;
        for (auto & e : v.entries())
            result.push_back(Polynomial::constant(e.rational()));
        return result;
    }

    auto pdot(const PolyVector & x, const PolyVector & y) -> Polynomial
    {
        Polynomial sum;
        for (size_t i = 0 ; i < x.size() ; ++i)
            if (! x[i].is_zero() && ! y[i].is_zero())
                sum = sum + x[i] * y[i];
        return sum;
    }

    /// The vector of span(a, b) orthogonal to x, or zero when the whole plane is.
    auto step(const Vector & x, const Vector & a, const Vector & b) -> Vector
    {
        return a * dot(x, b) - b * dot(x, a);
    }

    auto check_cycle(const SubspaceAssignment & a) -> vector<size_t>
    {
        a.validate();
        if (! a.field.is_rationals())
            throw PreconditionViolated("cycle obstruction works over Q; use find_choice over finite fields");
        for (auto & s : a.spaces)
            if (s.dim() != 2)
                throw PreconditionViolated("cycle obstruction needs 2-dimensional subspaces");
        return cycle_order(a.graph);
    }

    /// Completes a valid choice whose first i vectors (in cycle order) are
    /// fixed and whose (i+1)-th subspace is orthogonal to the i-th vector:
    /// the remaining vectors are chosen backwards from the first.
    auto fill_backwards(const SubspaceAssignment & a, const vector<size_t> & order, vector<Vector> forward) -> Choice
    {
        size_t l = order.size(), i = forward.size();
        vector<optional<Vector>> along(l);
        for (size_t j = 0 ; j < i ; ++j)
            along[j] = forward[j];
        for (size_t j = l ; j-- > i ; ) {
            const Vector & next = *along[(j + 1) % l];
            along[j] = restrict_orthogonal(a.spaces[order[j]], next).first_nonzero();
        }
        Choice result(a.graph.size(), Vector(a.field, a.ambient));
        for (size_t j = 0 ; j < l ; ++j)
            result[order[j]] = *along[j];
        return result;
    }

    /// Propagates a concrete first vector; returns a valid choice when one
    /// extends it.
    auto propagate(const SubspaceAssignment & a, const vector<size_t> & order, const Vector & first) -> optional<Choice>
    {
        vector<Vector> forward{ first };
        for (size_t j = 1 ; j < order.size() ; ++j) {
            const auto & basis = a.spaces[order[j]].basis();
            Vector next = step(forward.back(), basis[0], basis[1]);
            if (next.is_zero())
                return fill_backwards(a, order, forward);
            forward.push_back(next);
        }
        if (! dot(forward.back(), forward.front()).is_zero())
            return std::nullopt;
        Choice result(a.graph.size(), Vector(a.field, a.ambient));
        for (size_t j = 0 ; j < order.size() ; ++j)
            result[order[j]] = forward[j];
        return result;
    }
}

auto vecchoose::cycle_order(const Graph & g) -> vector<size_t>
{
    size_t n = g.size();
    if (n < 3 || g.edges().size() != n)
        throw PreconditionViolated("graph is not a cycle");
    for (size_t v = 0 ; v < n ; ++v)
        if (g.degree(v) != 2)
            throw PreconditionViolated("graph is not a cycle");
    vector<size_t> order{ 0 };
    size_t previous = 0, current = std::min(g.neighbours(0)[0], g.neighbours(0)[1]);
    while (current != 0) {
        order.push_back(current);
        const auto & nb = g.neighbours(current);
        size_t next = nb[0] == previous ? nb[1] : nb[0];
        previous = current;
        current = next;
    }
    if (order.size() != n)
        throw PreconditionViolated("graph is not a cycle");
    return order;
}

auto vecchoose::cycle_obstruction(const SubspaceAssignment & a) -> CycleObstruction
{
    auto order = check_cycle(a);
    const auto & w1 = a.spaces[order[0]].basis();
    PolyVector x = constant(w1[0]);
    PolyVector b1 = constant(w1[1]);
    for (size_t i = 0 ; i < x.size() ; ++i)
        x[i] = x[i] + b1[i] * Polynomial::monomial(1, 1);
    PolyVector first = x;

    for (size_t j = 1 ; j < order.size() ; ++j) {
        const auto & basis = a.spaces[order[j]].basis();
        PolyVector pa = constant(basis[0]), pb = constant(basis[1]);
        Polynomial ca = pdot(x, pa), cb = pdot(x, pb);
        if (ca.is_zero() && cb.is_zero())
            throw DegenerateStep(static_cast<int>(j), "subspace at cycle position " + std::to_string(j)
                    + " is orthogonal to the propagated vector for every z");
        PolyVector next(x.size());
        for (size_t i = 0 ; i < x.size() ; ++i)
            next[i] = cb * pa[i] - ca * pb[i];
        x = std::move(next);
    }

    CycleObstruction result;
    result.polynomial = pdot(x, first);
    if (result.polynomial.is_zero()) {
        result.has_rational_root = result.has_real_root = true;
    }
    else {
        result.has_rational_root = ! rational_roots(result.polynomial).empty();
        result.has_real_root = count_real_roots(result.polynomial) > 0;
    }
    result.infinity_valid = propagate(a, order, w1[1]).has_value();
    return result;
}

auto vecchoose::real_cycle_choice(const SubspaceAssignment & a) -> RealCycleVerdict
{
    auto order = check_cycle(a);
    RealCycleVerdict result;
    const auto & w1 = a.spaces[order[0]].basis();
    try {
        result.obstruction = cycle_obstruction(a);
    }
    catch (const DegenerateStep & e) {
        // Any z keeping the forward vectors nonzero lets the rest be filled in;
        // each forward vector vanishes for finitely many z, so a small integer works.
        result.degenerate_step = e.step();
        Field q = Field::rationals();
        for (long z = 0 ; ; ++z) {
            Vector first = w1[0] + w1[1] * Scalar::from_int(q, z);
            vector<Vector> forward{ first };
            bool nonzero = true;
            for (int j = 1 ; j < e.step() ; ++j) {
                const auto & basis = a.spaces[order[j]].basis();
                forward.push_back(step(forward.back(), basis[0], basis[1]));
                if (forward.back().is_zero()) {
                    nonzero = false;
                    break;
                }
            }
            if (nonzero) {
                result.exists = true;
                result.witness = fill_backwards(a, order, forward);
                return result;
            }
        }
    }
    result.exists = result.obstruction->real_choice_exists();
    if (result.obstruction->infinity_valid)
        result.witness = propagate(a, order, w1[1]);
    else if (result.obstruction->has_rational_root) {
        Rational z = result.obstruction->polynomial.is_zero() ? Rational(0) : rational_roots(result.obstruction->polynomial).front();
        Field q = Field::rationals();
        result.witness = propagate(a, order, w1[0] + w1[1] * Scalar::from_rational(q, z));
        if (! result.witness)
            throw InternalError("rational root of the cycle polynomial did not yield a choice");
    }
    return result;
}
