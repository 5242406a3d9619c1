#include <vecchoose/graph.hh>
#include <vecchoose/errors.hh>

#include <algorithm>
#include <queue>
#include <set>

using namespace vecchoose;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

Graph::Graph(size_t n) :
    _neighbours(n),
    _incident(n)
{
}

auto Graph::add_vertex() -> size_t
{
    _neighbours.emplace_back();
    _incident.emplace_back();
    return _neighbours.size() - 1;
}

auto Graph::add_edge(size_t u, size_t v) -> size_t
{
    if (u >= size() || v >= size())
        throw InvalidParameter("edge " + std::to_string(u) + " " + std::to_string(v) + " outside "
                + std::to_string(size()) + " vertices");
    if (u == v)
        throw InvalidParameter("self-loop at " + std::to_string(u));
    if (adjacent(u, v))
        throw InvalidParameter("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    _edges.emplace_back(u, v);
    _neighbours[u].push_back(v);
    _neighbours[v].push_back(u);
    _incident[u].push_back(_edges.size() - 1);
    _incident[v].push_back(_edges.size() - 1);
    return _edges.size() - 1;
}

auto Graph::adjacent(size_t u, size_t v) const -> bool
{
    const auto & a = _neighbours[u].size() < _neighbours[v].size() ? _neighbours[u] : _neighbours[v];
    size_t other = _neighbours[u].size() < _neighbours[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

auto Graph::edge_index(size_t u, size_t v) const -> optional<size_t>
{
    for (auto e : _incident[u])
        if (_edges[e].first == v || _edges[e].second == v)
            return e;
    return std::nullopt;
}

auto Graph::set_label(size_t v, string label) -> void
{
    if (v >= size())
        throw InvalidParameter("label for missing vertex " + std::to_string(v));
    _labels[v] = std::move(label);
}

auto Graph::label(size_t v) const -> optional<string>
{
    auto i = _labels.find(v);
    if (i == _labels.end())
        return std::nullopt;
    return i->second;
}

auto Graph::operator== (const Graph & other) const -> bool
{
    return size() == other.size() && _edges == other._edges && _labels == other._labels;
}

auto vecchoose::complete_graph(size_t n) -> Graph
{
    if (n < 1)
        throw InvalidParameter("complete graph needs at least one vertex");
    Graph g(n);
    for (size_t u = 0 ; u < n ; ++u)
        for (size_t v = u + 1 ; v < n ; ++v)
            g.add_edge(u, v);
    return g;
}

auto vecchoose::complete_bipartite_graph(size_t a, size_t b) -> Graph
{
    if (a < 1 || b < 1)
        throw InvalidParameter("complete bipartite graph needs nonempty sides");
    Graph g(a + b);
    for (size_t u = 0 ; u < a ; ++u)
        for (size_t v = 0 ; v < b ; ++v)
            g.add_edge(u, a + v);
    return g;
}

auto vecchoose::cycle_graph(size_t l) -> Graph
{
    if (l < 3)
        throw InvalidParameter("cycle length must be at least 3");
    Graph g(l);
    for (size_t i = 0 ; i < l ; ++i)
        g.add_edge(i, (i + 1) % l);
    return g;
}

auto vecchoose::path_graph(size_t l) -> Graph
{
    if (l < 1)
        throw InvalidParameter("path needs at least one edge");
    Graph g(l + 1);
    for (size_t i = 0 ; i < l ; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto vecchoose::multipartite_graph(const vector<size_t> & sizes) -> Graph
{
    size_t n = 0;
    vector<size_t> part;
    for (size_t i = 0 ; i < sizes.size() ; ++i) {
        if (sizes[i] < 1)
            throw InvalidParameter("multipartite parts must be nonempty");
        n += sizes[i];
        part.insert(part.end(), sizes[i], i);
    }
    Graph g(n);
    for (size_t u = 0 ; u < n ; ++u)
        for (size_t v = u + 1 ; v < n ; ++v)
            if (part[u] != part[v])
                g.add_edge(u, v);
    return g;
}

auto vecchoose::graph_from_edges(size_t n, const vector<Edge> & edges) -> Graph
{
    Graph g(n);
    for (auto & [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto vecchoose::bipartition(const Graph & g) -> Bipartition
{
    Bipartition result;
    result.side.assign(g.size(), -1);
    vector<size_t> parent(g.size(), g.size());
    for (size_t root = 0 ; root < g.size() ; ++root) {
        if (result.side[root] != -1)
            continue;
        result.side[root] = 0;
        std::queue<size_t> queue;
        queue.push(root);
        while (! queue.empty()) {
            size_t u = queue.front();
            queue.pop();
            for (auto v : g.neighbours(u)) {
                if (result.side[v] == -1) {
                    result.side[v] = 1 - result.side[u];
                    parent[v] = u;
                    queue.push(v);
                }
                else if (result.side[v] == result.side[u]) {
                    // walk both ends up the BFS tree to their meeting point
                    vector<size_t> up_u{ u }, up_v{ v };
                    while (parent[up_u.back()] != g.size())
                        up_u.push_back(parent[up_u.back()]);
                    while (parent[up_v.back()] != g.size())
                        up_v.push_back(parent[up_v.back()]);
                    while (up_u.size() > 1 && up_v.size() > 1 && up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
                        up_u.pop_back();
                        up_v.pop_back();
                    }
                    vector<size_t> cycle(up_u.begin(), up_u.end());
                    for (size_t i = up_v.size() - 1 ; i-- > 0 ; )
                        cycle.push_back(up_v[i]);
                    cycle.push_back(u);
                    result.bipartite = false;
                    result.odd_cycle = std::move(cycle);
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

auto vecchoose::connected_components(const Graph & g) -> size_t
{
    vector<bool> seen(g.size(), false);
    size_t count = 0;
    for (size_t root = 0 ; root < g.size() ; ++root) {
        if (seen[root])
            continue;
        ++count;
        vector<size_t> stack{ root };
        seen[root] = true;
        while (! stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (auto v : g.neighbours(u))
                if (! seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
    }
    return count;
}

auto vecchoose::is_acyclic(const Graph & g) -> bool
{
    return g.edges().size() + connected_components(g) == g.size();
}

auto vecchoose::degeneracy(const Graph & g) -> size_t
{
    vector<size_t> deg(g.size());
    std::set<std::pair<size_t, size_t>> queue;
    for (size_t v = 0 ; v < g.size() ; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    vector<bool> removed(g.size(), false);
    size_t result = 0;
    while (! queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result = std::max(result, d);
        removed[v] = true;
        for (auto u : g.neighbours(v))
            if (! removed[u]) {
                queue.erase({ deg[u], u });
                queue.emplace(--deg[u], u);
            }
    }
    return result;
}

auto vecchoose::average_degree(const Graph & g) -> double
{
    if (g.size() == 0)
        return 0.0;
    return 2.0 * static_cast<double>(g.edges().size()) / static_cast<double>(g.size());
}
