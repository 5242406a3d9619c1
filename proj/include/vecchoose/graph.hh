#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vecchoose
{
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Simple undirected graph on vertices 0..n-1. Edges keep their insertion
    /// index, which partitions and assignments refer to.
    class Graph
    {
        private:
            std::vector<Edge> _edges;
            std::vector<std::vector<std::size_t>> _neighbours;
            std::vector<std::vector<std::size_t>> _incident;
            std::map<std::size_t, std::string> _labels;

        public:
            explicit Graph(std::size_t n = 0);

            /// Throws InvalidParameter on self-loops, duplicates or bad ids.
            auto add_edge(std::size_t u, std::size_t v) -> std::size_t;

            /// Appends a vertex, returning its id.
            auto add_vertex() -> std::size_t;

            auto size() const -> std::size_t { return _neighbours.size(); }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto neighbours(std::size_t v) const -> const std::vector<std::size_t> & { return _neighbours[v]; }

            /// Indices of the edges at v, in insertion order.
            auto incident(std::size_t v) const -> const std::vector<std::size_t> & { return _incident[v]; }
            auto degree(std::size_t v) const -> std::size_t { return _neighbours[v].size(); }
            auto adjacent(std::size_t u, std::size_t v) const -> bool;

            /// Index of edge uv, if present.
            auto edge_index(std::size_t u, std::size_t v) const -> std::optional<std::size_t>;

            auto set_label(std::size_t v, std::string label) -> void;
            auto label(std::size_t v) const -> std::optional<std::string>;
            auto labels() const -> const std::map<std::size_t, std::string> & { return _labels; }

            auto operator== (const Graph & other) const -> bool;
    };

    using DimensionMap = std::vector<std::size_t>;

    auto complete_graph(std::size_t n) -> Graph;

    /// Left block 0..a-1, right block a..a+b-1.
    auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph;

    /// Vertices 0..l-1 in cyclic order; l >= 3.
    auto cycle_graph(std::size_t l) -> Graph;

    /// A path with l edges on vertices 0..l in order.
    auto path_graph(std::size_t l) -> Graph;

    /// Parts laid out consecutively in the given order.
    auto multipartite_graph(const std::vector<std::size_t> & sizes) -> Graph;

    auto graph_from_edges(std::size_t n, const std::vector<Edge> & edges) -> Graph;

    struct Bipartition
    {
        bool bipartite = false;

        /// side[v] in {0, 1}; meaningful only when bipartite.
        std::vector<int> side;

        /// An odd cycle as a closed vertex walk v_0, ..., v_{2r}, when not bipartite.
        std::vector<std::size_t> odd_cycle;
    };

    auto bipartition(const Graph & g) -> Bipartition;
    auto is_acyclic(const Graph & g) -> bool;
    auto connected_components(const Graph & g) -> std::size_t;
    auto degeneracy(const Graph & g) -> std::size_t;
    auto average_degree(const Graph & g) -> double;
}
