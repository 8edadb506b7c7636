#ifndef MOD2_GRAPH_HPP
#define MOD2_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mod2/bitvec.hpp"

namespace mod2 {

/// Unordered vertex pair stored with u < v.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph, immutable after construction. Edges are indexed
/// 0..E-1 in lexicographic order of (min vertex, max vertex); every
/// deterministic construction downstream (forests, bases, JSON output)
/// derives from this order.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edge_pairs);

    std::size_t vertex_count() const { return vertices_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;
    bool adjacent(std::size_t u, std::size_t v) const { return edge_index(u, v).has_value(); }

    std::size_t degree(std::size_t v) const { return incident_[v].size(); }
    /// Edge indices incident to v, increasing.
    const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }
    std::vector<std::size_t> neighbors(std::size_t v) const;

    /// Component ids, dense 0..N-1, assigned in order of lowest contained vertex.
    const std::vector<std::size_t>& component_labels() const { return component_; }
    std::size_t component_count() const { return component_count_; }

    /// The other endpoint of edge e.
    std::size_t opposite(std::size_t e, std::size_t v) const;

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    std::size_t vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::size_t> component_;
    std::size_t component_count_ = 0;
};

// Standard families. Bipartite constructions place part [m] at indices
// 0..m-1 and the primed part at m..m+n-1.
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph path_graph(std::size_t n);   // n vertices, n-1 edges
/// Hub 0 joined to every rim vertex 1..n, rim closed into a cycle; 2n edges.
Graph wheel(std::size_t n);        // n >= 3
/// Three edges meeting at one vertex: complete_bipartite(3, 1).
Graph triod();
/// Complete bipartite K_{n,n} minus the perfect matching {i, i'}.
Graph tilde_complete(std::size_t n);

/// Reads `V <count>` then one `u v` pair per line; `#` starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Maximal spanning forest chosen greedily by lowest edge index. Each
/// component is rooted at its lowest vertex; parent pointers give the unique
/// tree paths used for fundamental cycles.
class SpanningForest {
public:
    explicit SpanningForest(const Graph& g);

    const Graph& graph() const { return *g_; }
    bool in_tree(std::size_t e) const { return in_tree_[e]; }
    const std::vector<std::size_t>& tree_edges() const { return tree_edges_; }
    const std::vector<std::size_t>& non_tree_edges() const { return non_tree_edges_; }

    /// Edge set of the unique tree path between two vertices of one component.
    BitVector tree_path(std::size_t u, std::size_t v) const;

    /// The simple cycle {e} + tree path between e's endpoints.
    BitVector fundamental_cycle(std::size_t e) const;

    /// Rows = fundamental cycles of the non-tree edges, in edge-index order.
    /// This is a basis of the cycle space; row r belongs to non_tree_edges()[r].
    BitMatrix cycle_space_basis() const;

    std::size_t root_of(std::size_t v) const;
    std::size_t parent_vertex(std::size_t v) const { return parent_vertex_[v]; }

private:
    const Graph* g_;
    std::vector<bool> in_tree_;
    std::vector<std::size_t> tree_edges_;
    std::vector<std::size_t> non_tree_edges_;
    std::vector<std::size_t> parent_vertex_;  // self at roots
    std::vector<std::size_t> parent_edge_;    // undefined at roots
};

/// Graph automorphism of order at most 2, e.g. the part swap of K_{n,n}.
class Involution {
public:
    Involution(const Graph& g, std::vector<std::size_t> image);

    /// The part swap i <-> i' of a graph built on parts of equal size n
    /// (complete_bipartite(n, n) or tilde_complete(n)).
    static Involution part_swap(const Graph& g, std::size_t n);

    const Graph& graph() const { return *g_; }
    std::size_t operator()(std::size_t v) const { return image_.at(v); }
    std::size_t edge_image(std::size_t e) const { return edge_image_.at(e); }

    /// Image of an edge set under the involution.
    BitVector apply_edges(const BitVector& edge_set) const;

private:
    const Graph* g_;
    std::vector<std::size_t> image_;
    std::vector<std::size_t> edge_image_;
};

} // namespace mod2

#endif
