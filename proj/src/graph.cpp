#include "mod2/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace mod2 {

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(u) << 32) | std::uint64_t(v);
}

} // namespace

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edge_pairs)
    : vertices_(vertices), incident_(vertices) {
    for (auto& [u, v] : edge_pairs) {
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u >= vertices || v >= vertices)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_pairs.begin(), edge_pairs.end());
    for (std::size_t i = 1; i < edge_pairs.size(); ++i)
        if (edge_pairs[i] == edge_pairs[i - 1])
            throw std::invalid_argument("Graph: duplicate edge");

    edges_.reserve(edge_pairs.size());
    for (auto& [u, v] : edge_pairs) {
        std::size_t idx = edges_.size();
        edges_.push_back(Edge{u, v});
        index_[pair_key(u, v)] = idx;
        incident_[u].push_back(idx);
        incident_[v].push_back(idx);
    }

    // Label components by BFS from each unvisited vertex, lowest first.
    component_.assign(vertices_, std::size_t(-1));
    for (std::size_t start = 0; start < vertices_; ++start) {
        if (component_[start] != std::size_t(-1)) continue;
        std::size_t label = component_count_++;
        std::queue<std::size_t> q;
        q.push(start);
        component_[start] = label;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t e : incident_[v]) {
                std::size_t w = opposite(e, v);
                if (component_[w] == std::size_t(-1)) {
                    component_[w] = label;
                    q.push(w);
                }
            }
        }
    }
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
    auto it = index_.find(pair_key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    out.reserve(incident_.at(v).size());
    for (std::size_t e : incident_[v]) out.push_back(opposite(e, v));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::opposite(std::size_t e, std::size_t v) const {
    const Edge& ed = edges_.at(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw std::invalid_argument("Graph: vertex not on edge");
}

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path_graph: need at least 1 vertex");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph wheel(std::size_t n) {
    if (n < 3) throw std::invalid_argument("wheel: need a rim of at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t j = 1; j <= n; ++j) e.emplace_back(0, j);
    for (std::size_t j = 1; j < n; ++j) e.emplace_back(j, j + 1);
    e.emplace_back(n, 1);
    return Graph(n + 1, std::move(e));
}

Graph triod() { return complete_bipartite(3, 1); }

Graph tilde_complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) e.emplace_back(i, n + j);
    return Graph(2 * n, std::move(e));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t vertices = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank line before header
            if (tag != "V")
                throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                            ": expected `V <count>` header");
            if (!(ls >> vertices))
                throw std::invalid_argument("edge list: missing vertex count");
            have_header = true;
            continue;
        }
        std::size_t u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected two vertex ids");
        edges.emplace_back(u, v);
    }
    if (!have_header) throw std::invalid_argument("edge list: missing `V <count>` header");
    return Graph(vertices, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

SpanningForest::SpanningForest(const Graph& g)
    : g_(&g),
      in_tree_(g.edge_count(), false),
      parent_vertex_(g.vertex_count()),
      parent_edge_(g.vertex_count(), std::size_t(-1)) {
    // Greedy by edge index: an edge enters iff it joins two different blocks.
    std::vector<std::size_t> find(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) find[v] = v;
    auto root = [&](std::size_t v) {
        while (find[v] != v) v = find[v] = find[find[v]];
        return v;
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = root(g.edge(e).u), b = root(g.edge(e).v);
        if (a == b) {
            non_tree_edges_.push_back(e);
            continue;
        }
        find[a] = b;
        in_tree_[e] = true;
        tree_edges_.push_back(e);
    }

    // Orient each component from its lowest vertex via BFS over tree edges.
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        parent_vertex_[start] = start;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t e : g.incident_edges(v)) {
                if (!in_tree_[e]) continue;
                std::size_t w = g.opposite(e, v);
                if (seen[w]) continue;
                seen[w] = true;
                parent_vertex_[w] = v;
                parent_edge_[w] = e;
                q.push(w);
            }
        }
    }
}

std::size_t SpanningForest::root_of(std::size_t v) const {
    while (parent_vertex_[v] != v) v = parent_vertex_[v];
    return v;
}

BitVector SpanningForest::tree_path(std::size_t u, std::size_t v) const {
    if (g_->component_labels()[u] != g_->component_labels()[v])
        throw std::invalid_argument("tree_path: vertices in different components");
    // XOR of both root paths; the shared part cancels.
    BitVector path(g_->edge_count());
    for (std::size_t x : {u, v})
        while (parent_vertex_[x] != x) {
            path.flip(parent_edge_[x]);
            x = parent_vertex_[x];
        }
    return path;
}

BitVector SpanningForest::fundamental_cycle(std::size_t e) const {
    if (in_tree_.at(e)) throw std::invalid_argument("fundamental_cycle: tree edge");
    BitVector c = tree_path(g_->edge(e).u, g_->edge(e).v);
    c.set(e);
    return c;
}

BitMatrix SpanningForest::cycle_space_basis() const {
    BitMatrix basis(g_->edge_count());
    for (std::size_t e : non_tree_edges_) basis.add_row(fundamental_cycle(e));
    return basis;
}

Involution::Involution(const Graph& g, std::vector<std::size_t> image)
    : g_(&g), image_(std::move(image)) {
    if (image_.size() != g.vertex_count())
        throw std::invalid_argument("Involution: image size mismatch");
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (image_[v] >= g.vertex_count() || image_[image_[v]] != v)
            throw std::invalid_argument("Involution: map is not self-inverse");
    }
    edge_image_.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto idx = g.edge_index(image_[g.edge(e).u], image_[g.edge(e).v]);
        if (!idx)
            throw std::invalid_argument("Involution: does not preserve the edge set");
        edge_image_.push_back(*idx);
    }
}

Involution Involution::part_swap(const Graph& g, std::size_t n) {
    if (g.vertex_count() != 2 * n)
        throw std::invalid_argument("part_swap: graph is not on two parts of size n");
    std::vector<std::size_t> image(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        image[i] = n + i;
        image[n + i] = i;
    }
    return Involution(g, std::move(image));
}

BitVector Involution::apply_edges(const BitVector& edge_set) const {
    if (edge_set.size() != g_->edge_count())
        throw std::invalid_argument("apply_edges: dimension mismatch");
    BitVector out(edge_set.size());
    for (std::size_t e : edge_set.set_bits()) out.set(edge_image_[e]);
    return out;
}

} // namespace mod2
