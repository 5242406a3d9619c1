#include <vecchoose/hardness.hh>
#include <vecchoose/constructions.hh>
#include <vecchoose/errors.hh>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

using namespace vecchoose;

using std::array;
using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto at_line(size_t line, const string & message) -> string
    {
        return "line " + std::to_string(line) + ": " + message;
    }

    auto split_words(string_view line) -> vector<string_view>
    {
        vector<string_view> words;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            size_t start = i;
            while (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i > start)
                words.push_back(line.substr(start, i - start));
        }
        return words;
    }

    auto parse_integer(string_view word, size_t line) -> long long
    {
        long long value = 0;
        auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || end != word.data() + word.size())
            throw ParseError(at_line(line, "expected an integer, got '" + string(word) + "'"));
        return value;
    }

    auto check_clause(const vector<Literal> & literals, size_t line) -> Clause
    {
        if (literals.size() != 3)
            throw ClauseArityError(at_line(line, "clause has " + std::to_string(literals.size()) + " literals, expected 3"));
        if (literals[0].variable == literals[1].variable || literals[0].variable == literals[2].variable
                || literals[1].variable == literals[2].variable)
            throw RepeatedVariableError(at_line(line, "clause repeats a variable"));
        return { literals[0], literals[1], literals[2] };
    }

    auto unit(const Field & f, size_t t, size_t one_based) -> Vector
    {
        return Vector::unit(f, t, one_based - 1);
    }

    /// s + span(extra), s padded into ambient t first.
    auto padded(const Subspace & s, size_t t, const vector<Vector> & extra = {}) -> Subspace
    {
        vector<Vector> rows;
        for (auto & b : s.basis())
            rows.push_back(embed(b, t));
        rows.insert(rows.end(), extra.begin(), extra.end());
        return Subspace::span(s.field(), t, rows);
    }
}

auto Cnf::validate() const -> void
{
    for (size_t i = 0 ; i < clauses.size() ; ++i) {
        auto & c = clauses[i];
        for (auto & l : c)
            if (l.variable == 0 || l.variable > num_vars)
                throw ParseError("clause " + std::to_string(i + 1) + " uses variable " + std::to_string(l.variable)
                        + " outside 1.." + std::to_string(num_vars));
        if (c[0].variable == c[1].variable || c[0].variable == c[2].variable || c[1].variable == c[2].variable)
            throw RepeatedVariableError("clause " + std::to_string(i + 1) + " repeats a variable");
    }
}

auto Cnf::satisfied_by(const vector<bool> & truth) const -> bool
{
    if (truth.size() != num_vars)
        throw InvalidParameter("truth assignment has " + std::to_string(truth.size()) + " values for "
                + std::to_string(num_vars) + " variables");
    for (auto & c : clauses) {
        bool any = false;
        for (auto & l : c)
            any = any || truth[l.variable - 1] == l.positive;
        if (! any)
            return false;
    }
    return true;
}

auto vecchoose::parse_dimacs(string_view text) -> Cnf
{
    Cnf cnf;
    bool header = false;
    size_t expected = 0, line_no = 0, clause_line = 0;
    vector<Literal> pending;
    std::istringstream in{ string(text) };
    string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto words = split_words(line);
        if (words.empty() || words[0][0] == 'c')
            continue;
        if (words[0] == "%")
            break;
        if (words[0] == "p") {
            if (header)
                throw ParseError(at_line(line_no, "second problem line"));
            if (words.size() != 4 || words[1] != "cnf")
                throw ParseError(at_line(line_no, "expected 'p cnf <vars> <clauses>'"));
            auto n = parse_integer(words[2], line_no), m = parse_integer(words[3], line_no);
            if (n < 0 || m < 0)
                throw ParseError(at_line(line_no, "negative counts"));
            cnf.num_vars = size_t(n);
            expected = size_t(m);
            header = true;
            continue;
        }
        if (! header)
            throw ParseError(at_line(line_no, "clause before the problem line"));
        for (auto w : words) {
            auto value = parse_integer(w, line_no);
            if (pending.empty())
                clause_line = line_no;
            if (value == 0) {
                cnf.clauses.push_back(check_clause(pending, clause_line));
                pending.clear();
                continue;
            }
            size_t variable = size_t(value < 0 ? -value : value);
            if (variable > cnf.num_vars)
                throw ParseError(at_line(line_no, "variable " + std::to_string(variable) + " exceeds the declared "
                            + std::to_string(cnf.num_vars)));
            pending.push_back({ variable, value > 0 });
        }
    }
    if (! header)
        throw ParseError("missing problem line");
    if (! pending.empty())
        throw ParseError(at_line(clause_line, "clause is not terminated by 0"));
    if (cnf.clauses.size() != expected)
        throw ParseError("declared " + std::to_string(expected) + " clauses, found " + std::to_string(cnf.clauses.size()));
    return cnf;
}

auto vecchoose::print_dimacs(const Cnf & cnf) -> string
{
    string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
    for (auto & c : cnf.clauses) {
        for (auto & l : c)
            out += (l.positive ? "" : "-") + std::to_string(l.variable) + " ";
        out += "0\n";
    }
    return out;
}

auto vecchoose::add_exists_graph(Graph & g, DimensionMap & f, size_t n1, size_t n2, const string & prefix) -> GadgetLayout
{
    auto vertex = [&] (size_t dim, const string & label) {
        size_t v = g.add_vertex();
        f.push_back(dim);
        g.set_label(v, prefix + label);
        return v;
    };
    GadgetLayout layout;
    layout.in_vertex = vertex(2, "in");

    auto build = [&] (Branch & b, size_t outs, const string & name) {
        size_t previous = layout.in_vertex;
        for (size_t c = 0 ; c <= outs ; ++c) {
            string tag = name + "." + std::to_string(c);
            FourCycle cycle;
            cycle.entry = vertex(3, tag + ".entry");
            cycle.upper = vertex(2, tag + ".upper");
            cycle.lower = vertex(2, tag + ".lower");
            cycle.far = vertex(3, tag + ".far");
            g.add_edge(previous, cycle.entry);
            g.add_edge(cycle.entry, cycle.upper);
            g.add_edge(cycle.entry, cycle.lower);
            g.add_edge(cycle.upper, cycle.far);
            g.add_edge(cycle.lower, cycle.far);
            b.cycles.push_back(cycle);
            previous = cycle.far;
            if (c == 0)
                continue;
            size_t out = vertex(2, tag + ".out");
            g.add_edge(cycle.far, out);
            b.outs.push_back(out);
            if (c < outs) {
                size_t sep = vertex(2, tag + ".sep");
                g.add_edge(cycle.far, sep);
                b.separators.push_back(sep);
                previous = sep;
            }
        }
    };
    build(layout.top, n1, "top");
    build(layout.bottom, n2, "bottom");
    return layout;
}

auto vecchoose::build_exists_graph(size_t n1, size_t n2) -> ExistsGraph
{
    ExistsGraph h;
    h.layout = add_exists_graph(h.graph, h.f, n1, n2);
    return h;
}

auto vecchoose::branch_outward_order(const Branch & b) -> vector<size_t>
{
    vector<size_t> order;
    for (size_t c = 0 ; c < b.cycles.size() ; ++c) {
        auto & cy = b.cycles[c];
        order.insert(order.end(), { cy.entry, cy.upper, cy.lower, cy.far });
        if (c >= 1)
            order.push_back(b.outs[c - 1]);
        if (c >= 1 && c - 1 < b.separators.size())
            order.push_back(b.separators[c - 1]);
    }
    return order;
}

auto vecchoose::branch_backward_order(const Branch & b, bool skip_first_upper) -> vector<size_t>
{
    vector<size_t> order;
    for (size_t c = b.cycles.size() ; c-- > 0 ;) {
        auto & cy = b.cycles[c];
        order.push_back(cy.far);
        if (! (c == 0 && skip_first_upper))
            order.push_back(cy.upper);
        order.push_back(cy.lower);
        order.push_back(cy.entry);
        if (c >= 2)
            order.push_back(b.separators[c - 2]);
    }
    return order;
}

auto vecchoose::claim3_choice(const Subspace & w_in, const Subspace & w_a, const Subspace & w_b) -> pair<Vector, Vector>
{
    if (w_in.dim() != 2 || w_a.dim() != 3 || w_b.dim() != 2)
        throw PreconditionViolated("claim3_choice needs dims 2, 3, 2");
    if (w_in.ambient() != w_a.ambient() || w_a.ambient() != w_b.ambient())
        throw AmbientMismatch("claim3_choice over mixed ambients");

    auto result = [&] () -> pair<Vector, Vector> {
        auto common = subspace_intersect(w_in, w_b);
        if (common.dim() > 0)
            return { common.first_nonzero(), common.first_nonzero() };
        auto s = subspace_intersect(subspace_sum(w_in, w_b), orthogonal_complement(w_a));
        if (s.dim() == 0)
            throw InternalError("(W_in + W_B) cap W_A^perp is zero");
        Vector x = s.first_nonzero();
        vector<Vector> generators = w_in.basis();
        generators.insert(generators.end(), w_b.basis().begin(), w_b.basis().end());
        auto c = solve_combination(generators, x);
        if (! c)
            throw InternalError("a member of W_in + W_B has no decomposition");
        Vector x1 = w_in.basis()[0] * (*c)[0] + w_in.basis()[1] * (*c)[1];
        Vector x2 = x - x1;
        if (x1.is_zero())
            return { w_in.first_nonzero(), x2 };
        if (x2.is_zero())
            return { x1, w_b.first_nonzero() };
        return { x1, x2 };
    }();
    if (restrict_orthogonal(restrict_orthogonal(w_a, result.first), result.second).dim() < 2)
        throw InternalError("claim3_choice left fewer than two dimensions");
    return result;
}

auto vecchoose::claim4_assignment(const Field & field, size_t x) -> SubspaceAssignment
{
    if (x != 6 && x != 7)
        throw InvalidParameter("claim4_assignment adds e_6 or e_7");
    auto c4 = cycle_bad_assignment(4, field);
    SubspaceAssignment a{ c4.graph, field, 7, {} };
    for (size_t v = 0 ; v < 4 ; ++v)
        a.spaces.push_back(padded(c4.spaces[v], 7, v == 0 ? vector<Vector>{ unit(field, 7, x) } : vector<Vector>{}));
    return a;
}

auto vecchoose::place_forcing(const GadgetLayout & layout, vector<Subspace> & spaces, const Field & field, size_t t, size_t j) -> void
{
    if (t < 8 || j < 8 || j > t)
        throw PreconditionViolated("forcing needs t >= 8 and 8 <= j <= t");
    auto c4 = cycle_bad_assignment(4, field);
    auto e = [&] (size_t i) { return unit(field, t, i); };
    auto pair_space = [&] (size_t a, size_t b) { return Subspace::span(field, t, vector<Vector>{ e(a), e(b) }); };

    spaces.at(layout.in_vertex) = pair_space(6, 7);
    for (bool top : { true, false }) {
        auto & b = layout.branch(top);
        for (size_t c = 0 ; c < b.cycles.size() ; ++c) {
            auto & cy = b.cycles[c];
            size_t x = c == 0 ? 6 : 7;
            size_t entry_extra = c == 0 ? (top ? 6 : 7) : 6;
            spaces.at(cy.far) = padded(c4.spaces[0], t, { e(x) });
            spaces.at(cy.upper) = padded(c4.spaces[1], t);
            spaces.at(cy.entry) = padded(c4.spaces[2], t, { e(entry_extra) });
            spaces.at(cy.lower) = padded(c4.spaces[3], t);
        }
        for (auto o : b.outs)
            spaces.at(o) = pair_space(7, j);
        for (auto s : b.separators)
            spaces.at(s) = pair_space(6, 7);
    }
}

auto vecchoose::gadget_forcing_assignment(const ExistsGraph & h, const Field & field, size_t t, size_t j) -> SubspaceAssignment
{
    SubspaceAssignment a{ h.graph, field, t, vector<Subspace>(h.graph.size(), Subspace(field, t)) };
    place_forcing(h.layout, a.spaces, field, t, j);
    return a;
}

auto vecchoose::check_gadget_forcing(const ExistsGraph & h, const SubspaceAssignment & a, size_t j) -> ForcingReport
{
    ForcingReport report;
    Vector ej = unit(a.field, a.ambient, j);
    auto forced = [&] (const Choice & c, const Branch & b) {
        return std::all_of(b.outs.begin(), b.outs.end(), [&] (size_t o) { return proportional(c[o], ej); });
    };
    report.choices = enumerate_choices(a, [&] (const Choice & c) {
        bool top = forced(c, h.layout.top), bottom = forced(c, h.layout.bottom);
        if (! top && ! bottom)
            report.some_branch_forced = false;
        auto & x = c[h.layout.in_vertex];
        if ((! x[5].is_zero() && ! top) || (! x[6].is_zero() && ! bottom))
            report.activated_branch_forced = false;
        return true;
    });
    return report;
}

auto vecchoose::build_reduction(const Cnf & cnf) -> ReductionOutput
{
    cnf.validate();
    ReductionOutput r;
    r.cnf = cnf;
    vector<size_t> positive(cnf.num_vars + 1, 0), negative(cnf.num_vars + 1, 0);
    for (auto & c : cnf.clauses)
        for (auto & l : c)
            ++(l.positive ? positive : negative)[l.variable];
    for (size_t v = 1 ; v <= cnf.num_vars ; ++v)
        r.gadgets.push_back(add_exists_graph(r.graph, r.f, positive[v], negative[v], "x" + std::to_string(v) + "."));

    vector<size_t> used_top(cnf.num_vars + 1, 0), used_bottom(cnf.num_vars + 1, 0);
    for (size_t i = 0 ; i < cnf.clauses.size() ; ++i) {
        size_t v = r.graph.add_vertex();
        r.f.push_back(3);
        r.graph.set_label(v, "C" + std::to_string(i + 1));
        r.clause_vertices.push_back(v);
        array<size_t, 3> outs{};
        for (size_t s = 0 ; s < 3 ; ++s) {
            auto & l = cnf.clauses[i][s];
            auto & gadget = r.gadgets[l.variable - 1];
            outs[s] = l.positive ? gadget.top.outs[used_top[l.variable]++] : gadget.bottom.outs[used_bottom[l.variable]++];
            r.graph.add_edge(v, outs[s]);
        }
        r.clause_outs.push_back(outs);
    }
    return r;
}

auto vecchoose::reduction_unsat_assignment(const ReductionOutput & r, const Field & field) -> SubspaceAssignment
{
    size_t t = r.cnf.num_vars + 7;
    SubspaceAssignment a{ r.graph, field, t, vector<Subspace>(r.graph.size(), Subspace(field, t)) };
    for (size_t v = 0 ; v < r.gadgets.size() ; ++v)
        place_forcing(r.gadgets[v], a.spaces, field, t, v + 8);
    for (size_t i = 0 ; i < r.clause_vertices.size() ; ++i) {
        vector<Vector> rows;
        for (auto & l : r.cnf.clauses[i])
            rows.push_back(unit(field, t, l.variable + 7));
        a.spaces[r.clause_vertices[i]] = Subspace::span(field, t, rows);
    }
    return a;
}

auto vecchoose::sat_choice_strategy(const ReductionOutput & r, const SubspaceAssignment & a, const vector<bool> & truth) -> Choice
{
    if (! r.cnf.satisfied_by(truth))
        throw NotSatisfying("the truth assignment does not satisfy the formula");
    a.validate();
    if (! (a.graph == r.graph))
        throw InvalidParameter("assignment is for a different graph");
    for (size_t v = 0 ; v < r.graph.size() ; ++v)
        if (a.spaces[v].dim() != r.f[v])
            throw InvalidParameter("assignment dimension differs from f at vertex " + std::to_string(v));

    PartialChoice c(r.graph.size());
    for (size_t v = 0 ; v < r.gadgets.size() ; ++v) {
        auto & g = r.gadgets[v];
        auto & first = g.branch(truth[v]).cycles[0];
        auto [x_in, x_b] = claim3_choice(a.spaces[g.in_vertex], a.spaces[first.entry], a.spaces[first.upper]);
        c[g.in_vertex] = x_in;
        c[first.upper] = x_b;
    }
    for (size_t v = 0 ; v < r.gadgets.size() ; ++v)
        extend_greedily(a, c, branch_outward_order(r.gadgets[v].branch(! truth[v])));
    extend_greedily(a, c, r.clause_vertices);
    for (size_t v = 0 ; v < r.gadgets.size() ; ++v)
        extend_greedily(a, c, r.gadgets[v].branch(truth[v]).outs);
    for (size_t v = 0 ; v < r.gadgets.size() ; ++v)
        extend_greedily(a, c, branch_backward_order(r.gadgets[v].branch(truth[v]), true));

    auto choice = completed(c);
    auto report = verify_choice(a, choice);
    if (! report.valid)
        throw InternalError("sat_choice_strategy produced an invalid choice: " + report.reason);
    return choice;
}

namespace
{
    /// copies of g plus v1, v2; v_l joins the copies of side l-1 vertices
    /// selected by joins.
    auto amplify_once(const Graph & g, size_t copies, const vector<bool> & joins) -> Graph
    {
        auto parts = bipartition(g);
        if (! parts.bipartite)
            throw NotBipartite("amplification needs a bipartite graph");
        size_t n = g.size();
        Graph result(copies * n + 2);
        size_t v1 = copies * n, v2 = v1 + 1;
        for (size_t c = 0 ; c < copies ; ++c) {
            for (auto & [u, v] : g.edges())
                result.add_edge(c * n + u, c * n + v);
            for (size_t u = 0 ; u < n ; ++u)
                if (joins[u])
                    result.add_edge(parts.side[u] == 0 ? v1 : v2, c * n + u);
            for (auto & [u, label] : g.labels())
                result.set_label(c * n + u, "copy" + std::to_string(c) + "." + label);
        }
        result.set_label(v1, "v1");
        result.set_label(v2, "v2");
        return result;
    }
}

auto vecchoose::amplify_to_k(const Graph & g, const DimensionMap & f, size_t k) -> Graph
{
    if (k < 3)
        throw InvalidParameter("amplification targets k >= 3");
    if (f.size() != g.size())
        throw InvalidParameter("f covers " + std::to_string(f.size()) + " vertices, graph has " + std::to_string(g.size()));
    vector<bool> joins;
    for (auto d : f) {
        if (d != 2 && d != 3)
            throw InvalidParameter("f values must be 2 or 3");
        joins.push_back(d == 2);
    }
    Graph current = amplify_once(g, 9, joins);
    for (size_t level = 4 ; level <= k ; ++level)
        current = amplify_once(current, level * level, vector<bool>(current.size(), true));
    return current;
}

auto vecchoose::amplify_assignment(const SubspaceAssignment & a) -> SubspaceAssignment
{
    a.validate();
    auto f = a.dimensions();
    Graph g = amplify_to_k(a.graph, f, 3);
    auto side = bipartition(a.graph).side;
    size_t n = a.graph.size(), t = a.ambient + 3;
    SubspaceAssignment result{ g, a.field, t, {} };
    for (size_t c = 0 ; c < 9 ; ++c) {
        size_t i = c / 3, j = c % 3;
        for (size_t u = 0 ; u < n ; ++u) {
            vector<Vector> rows;
            for (auto & b : a.spaces[u].basis())
                rows.push_back(embed(b, t, 3));
            if (f[u] == 2)
                rows.push_back(Vector::unit(a.field, t, side[u] == 0 ? i : j));
            result.spaces.push_back(Subspace::span(a.field, t, rows));
        }
    }
    auto head = Subspace::coordinate(a.field, t, { 0, 1, 2 });
    result.spaces.push_back(head);
    result.spaces.push_back(head);
    return result;
}
