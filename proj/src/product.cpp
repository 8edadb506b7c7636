#include "mod2/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mod2/cycles.hpp"

namespace mod2 {

namespace {

constexpr std::size_t npos = std::size_t(-1);

/// Edge set traced by a closed walk through the listed pairs.
BitVector closed_pair_walk(const ProductGraph& pg, const std::vector<PairVertex>& seq) {
    BitVector out(pg.graph().edge_count());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const PairVertex& a = seq[i];
        const PairVertex& b = seq[(i + 1) % seq.size()];
        auto e = pg.graph().edge_index(pg.vertex(a.x, a.y), pg.vertex(b.x, b.y));
        if (!e) throw std::invalid_argument("closed_pair_walk: consecutive pairs not adjacent");
        out.flip(*e);
    }
    return out;
}

void require_equal_factors(const ProductGraph& pg, const char* what) {
    if (!(pg.left_factor() == pg.right_factor()))
        throw std::invalid_argument(std::string(what) + ": factors differ");
}

/// Validates that seq spells a simple cycle of g (distinct vertices, every
/// consecutive pair adjacent, closed).
void require_cycle_seq(const Graph& g, const std::vector<std::size_t>& seq, const char* what) {
    if (seq.size() < 3)
        throw std::invalid_argument(std::string(what) + ": cycle needs at least 3 vertices");
    std::vector<std::size_t> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument(std::string(what) + ": repeated vertex");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= g.vertex_count())
            throw std::invalid_argument(std::string(what) + ": vertex out of range");
        if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()]))
            throw std::invalid_argument(std::string(what) + ": consecutive vertices not adjacent");
    }
}

bool edges_share_vertex(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

} // namespace

ProductGraph ProductGraph::build(Graph k, Graph l, bool deleted) {
    ProductGraph pg;
    pg.left_ = std::move(k);
    pg.right_ = std::move(l);
    pg.deleted_ = deleted;
    const std::size_t nx = pg.left_.vertex_count();
    const std::size_t ny = pg.right_.vertex_count();

    pg.index_.assign(nx * ny, npos);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) {
            if (deleted && x == y) continue;
            pg.index_[x * ny + y] = pg.pairs_.size();
            pg.pairs_.push_back(PairVertex{x, y});
        }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < nx; ++a)
        for (const Edge& e : pg.right_.edges())
            if (pg.has_pair(a, e.u) && pg.has_pair(a, e.v))
                edges.emplace_back(pg.vertex(a, e.u), pg.vertex(a, e.v));
    for (const Edge& e : pg.left_.edges())
        for (std::size_t a = 0; a < ny; ++a)
            if (pg.has_pair(e.u, a) && pg.has_pair(e.v, a))
                edges.emplace_back(pg.vertex(e.u, a), pg.vertex(e.v, a));

    pg.graph_ = Graph(pg.pairs_.size(), std::move(edges));
    return pg;
}

ProductGraph ProductGraph::product(Graph k, Graph l) {
    return build(std::move(k), std::move(l), false);
}

ProductGraph ProductGraph::square(Graph k) {
    Graph copy = k;
    return build(std::move(copy), std::move(k), false);
}

ProductGraph ProductGraph::deleted_square(Graph k) {
    Graph copy = k;
    return build(std::move(copy), std::move(k), true);
}

bool ProductGraph::has_pair(std::size_t x, std::size_t y) const {
    if (x >= left_.vertex_count() || y >= right_.vertex_count())
        throw std::out_of_range("ProductGraph: pair coordinate out of range");
    return index_[x * right_.vertex_count() + y] != npos;
}

std::size_t ProductGraph::vertex(std::size_t x, std::size_t y) const {
    if (!has_pair(x, y))
        throw std::invalid_argument("ProductGraph: pair (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ") is not a vertex");
    return index_[x * right_.vertex_count() + y];
}

ProductGraph::EdgeLabel ProductGraph::edge_label(std::size_t e) const {
    const Edge& edge = graph_.edge(e);
    PairVertex p = pairs_[edge.u];
    PairVertex q = pairs_[edge.v];
    EdgeLabel label;
    if (p.x == q.x) {
        label.left_move = false;
        label.fixed = p.x;
        label.moving = *right_.edge_index(p.y, q.y);
    } else {
        label.left_move = true;
        label.fixed = p.y;
        label.moving = *left_.edge_index(p.x, q.x);
    }
    return label;
}

std::optional<std::size_t> ProductGraph::move_edge(bool left_move, std::size_t fixed,
                                                   std::size_t moving) const {
    const Edge& e = left_move ? left_.edge(moving) : right_.edge(moving);
    std::size_t ux = left_move ? e.u : fixed;
    std::size_t uy = left_move ? fixed : e.u;
    std::size_t vx = left_move ? e.v : fixed;
    std::size_t vy = left_move ? fixed : e.v;
    if (!has_pair(ux, uy) || !has_pair(vx, vy)) return std::nullopt;
    return graph_.edge_index(vertex(ux, uy), vertex(vx, vy));
}

std::array<std::size_t, 4> cell_boundary_edges(const ProductGraph& pg,
                                               std::size_t sigma, std::size_t tau) {
    const Edge& s = pg.left_factor().edge(sigma);
    auto e1 = pg.move_edge(false, s.u, tau);
    auto e2 = pg.move_edge(false, s.v, tau);
    auto e3 = pg.move_edge(true, pg.right_factor().edge(tau).u, sigma);
    auto e4 = pg.move_edge(true, pg.right_factor().edge(tau).v, sigma);
    if (!e1 || !e2 || !e3 || !e4)
        throw std::invalid_argument("cell_boundary_edges: cell boundary leaves the graph");
    return {*e1, *e2, *e3, *e4};
}

BitVector boundary_cycle(const ProductGraph& pg, std::size_t sigma, std::size_t tau) {
    BitVector out(pg.graph().edge_count());
    for (std::size_t e : cell_boundary_edges(pg, sigma, tau)) out.flip(e);
    return out;
}

BitVector left_cycle(const ProductGraph& pg, std::size_t a, const BitVector& c) {
    if (c.size() != pg.right_factor().edge_count())
        throw std::invalid_argument("left_cycle: edge set has wrong dimension");
    BitVector out(pg.graph().edge_count());
    for (std::size_t sigma : c.set_bits()) {
        auto e = pg.move_edge(false, a, sigma);
        if (!e) throw std::invalid_argument("left_cycle: vertex meets the edge set");
        out.flip(*e);
    }
    return out;
}

BitVector right_cycle(const ProductGraph& pg, const BitVector& c, std::size_t a) {
    if (c.size() != pg.left_factor().edge_count())
        throw std::invalid_argument("right_cycle: edge set has wrong dimension");
    BitVector out(pg.graph().edge_count());
    for (std::size_t sigma : c.set_bits()) {
        auto e = pg.move_edge(true, a, sigma);
        if (!e) throw std::invalid_argument("right_cycle: vertex meets the edge set");
        out.flip(*e);
    }
    return out;
}

BitVector diag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq) {
    require_equal_factors(pg, "diag_cycle");
    require_cycle_seq(pg.left_factor(), seq, "diag_cycle");
    const std::size_t k = seq.size();
    std::vector<PairVertex> walk;
    walk.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        walk.push_back(PairVertex{seq[i], seq[i]});
        walk.push_back(PairVertex{seq[i], seq[(i + 1) % k]});
    }
    return closed_pair_walk(pg, walk);
}

BitVector offdiag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq) {
    require_equal_factors(pg, "offdiag_cycle");
    require_cycle_seq(pg.left_factor(), seq, "offdiag_cycle");
    const std::size_t k = seq.size();
    std::vector<PairVertex> walk;
    walk.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        walk.push_back(PairVertex{seq[i], seq[(i + 1) % k]});
        walk.push_back(PairVertex{seq[i], seq[(i + 2) % k]});
    }
    return closed_pair_walk(pg, walk);
}

BitVector antidiag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq) {
    require_equal_factors(pg, "antidiag_cycle");
    require_cycle_seq(pg.left_factor(), seq, "antidiag_cycle");
    const std::size_t k = seq.size();
    std::vector<PairVertex> walk;
    walk.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t back = (k - i) % k;  // index of v_{1-i}
        walk.push_back(PairVertex{seq[i], seq[back]});
        walk.push_back(PairVertex{seq[(i + 1) % k], seq[back]});
    }
    return closed_pair_walk(pg, walk);
}

BitVector triodic_cycle(const ProductGraph& pg, std::size_t a, std::size_t b,
                        std::size_t c, std::size_t d) {
    require_equal_factors(pg, "triodic_cycle");
    const Graph& g = pg.left_factor();
    std::vector<std::size_t> leaves{a, b, c};
    std::vector<std::size_t> sorted{a, b, c, d};
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("triodic_cycle: star vertices must be distinct");
    for (std::size_t leaf : leaves)
        if (leaf >= g.vertex_count() || d >= g.vertex_count() || !g.adjacent(leaf, d))
            throw std::invalid_argument("triodic_cycle: leaves must be adjacent to the center");

    std::vector<PairVertex> half{{a, c}, {a, d}, {a, b}, {d, b}, {c, b}, {c, d}};
    std::vector<PairVertex> walk = half;
    for (const PairVertex& p : half) walk.push_back(PairVertex{p.y, p.x});
    BitVector out = closed_pair_walk(pg, walk);
    if (out.count() != 12 || !is_simple_cycle(pg.graph(), out))
        throw std::logic_error("triodic_cycle: walk did not close into a 12-edge cycle");
    return out;
}

std::pair<BitVector, BitVector> projections(const ProductGraph& pg, const BitVector& c) {
    if (c.size() != pg.graph().edge_count())
        throw std::invalid_argument("projections: edge set has wrong dimension");
    BitVector cx(pg.left_factor().edge_count());
    BitVector cy(pg.right_factor().edge_count());
    for (std::size_t e : c.set_bits()) {
        ProductGraph::EdgeLabel label = pg.edge_label(e);
        if (label.left_move)
            cx.flip(label.moving);
        else
            cy.flip(label.moving);
    }
    return {cx, cy};
}

Involution swap_involution(const ProductGraph& pg) {
    require_equal_factors(pg, "swap_involution");
    std::vector<std::size_t> image(pg.graph().vertex_count());
    for (std::size_t v = 0; v < image.size(); ++v) {
        PairVertex p = pg.pair(v);
        image[v] = pg.vertex(p.y, p.x);
    }
    return Involution(pg.graph(), std::move(image));
}

CellComplex CellComplex::build(Graph base, bool deleted) {
    CellComplex cc;
    cc.base_ = std::move(base);
    cc.deleted_ = deleted;
    const std::size_t m = cc.base_.edge_count();
    cc.index_.assign(m * m, npos);
    for (std::size_t sigma = 0; sigma < m; ++sigma)
        for (std::size_t tau = 0; tau < m; ++tau) {
            if (deleted && edges_share_vertex(cc.base_.edge(sigma), cc.base_.edge(tau)))
                continue;
            cc.index_[sigma * m + tau] = cc.cells_.size();
            cc.cells_.emplace_back(sigma, tau);
        }
    return cc;
}

CellComplex CellComplex::square(Graph base) { return build(std::move(base), false); }

CellComplex CellComplex::deleted(Graph base) { return build(std::move(base), true); }

std::optional<std::size_t> CellComplex::cell_index(std::size_t sigma, std::size_t tau) const {
    const std::size_t m = base_.edge_count();
    if (sigma >= m || tau >= m)
        throw std::out_of_range("CellComplex: edge index out of range");
    std::size_t idx = index_[sigma * m + tau];
    if (idx == npos) return std::nullopt;
    return idx;
}

BitVector CellComplex::row_section(const BitVector& c, std::size_t sigma) const {
    if (c.size() != cells_.size())
        throw std::invalid_argument("row_section: cell set has wrong dimension");
    const std::size_t m = base_.edge_count();
    BitVector out(m);
    for (std::size_t tau = 0; tau < m; ++tau) {
        auto idx = cell_index(sigma, tau);
        if (idx && c.test(*idx)) out.set(tau);
    }
    return out;
}

BitVector CellComplex::column_section(const BitVector& c, std::size_t tau) const {
    if (c.size() != cells_.size())
        throw std::invalid_argument("column_section: cell set has wrong dimension");
    const std::size_t m = base_.edge_count();
    BitVector out(m);
    for (std::size_t sigma = 0; sigma < m; ++sigma) {
        auto idx = cell_index(sigma, tau);
        if (idx && c.test(*idx)) out.set(sigma);
    }
    return out;
}

std::size_t CellComplex::swap_cell(std::size_t idx) const {
    auto [sigma, tau] = cells_.at(idx);
    return cell_index(tau, sigma).value();
}

BitVector CellComplex::swap_cells(const BitVector& c) const {
    if (c.size() != cells_.size())
        throw std::invalid_argument("swap_cells: cell set has wrong dimension");
    BitVector out(cells_.size());
    for (std::size_t idx : c.set_bits()) out.set(swap_cell(idx));
    return out;
}

bool CellComplex::cells_adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    auto [s1, t1] = cells_.at(i);
    auto [s2, t2] = cells_.at(j);
    if (s1 == s2 && edges_share_vertex(base_.edge(t1), base_.edge(t2))) return true;
    if (t1 == t2 && edges_share_vertex(base_.edge(s1), base_.edge(s2))) return true;
    return false;
}

BitVector KnnTildeCorrespondence::apply(const BitVector& source_cells) const {
    if (source_cells.size() != source.cell_count())
        throw std::invalid_argument("apply: cell set has wrong dimension");
    BitVector out(target.cell_count());
    for (std::size_t idx : source_cells.set_bits()) out.set(forward[idx]);
    return out;
}

BitVector KnnTildeCorrespondence::apply_inverse(const BitVector& target_cells) const {
    if (target_cells.size() != target.cell_count())
        throw std::invalid_argument("apply_inverse: cell set has wrong dimension");
    BitVector out(source.cell_count());
    for (std::size_t idx : target_cells.set_bits()) out.set(backward[idx]);
    return out;
}

std::size_t KnnTildeCorrespondence::part_swap_target_cell(std::size_t idx) const {
    auto [xi, zeta] = target.cell(idx);
    return target.cell_index(edge_swap_[xi], edge_swap_[zeta]).value();
}

KnnTildeCorrespondence knn_tilde_correspondence(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("knn_tilde_correspondence: n must be at least 3");
    KnnTildeCorrespondence corr;
    corr.n = n;
    corr.source = CellComplex::deleted(complete_bipartite(n, n));
    corr.target = CellComplex::square(tilde_complete(n));
    if (corr.source.cell_count() != corr.target.cell_count())
        throw std::logic_error("knn_tilde_correspondence: cell counts differ");

    const Graph& knn = corr.source.base();
    const Graph& tilde = corr.target.base();
    corr.forward.assign(corr.source.cell_count(), npos);
    corr.backward.assign(corr.target.cell_count(), npos);
    for (std::size_t idx = 0; idx < corr.source.cell_count(); ++idx) {
        auto [si, ti] = corr.source.cell(idx);
        const Edge& s = knn.edge(si);       // {σ₁, n + σ₂}
        const Edge& t = knn.edge(ti);       // {τ₁, n + τ₂}
        std::size_t s1 = s.u, s2 = s.v - n;
        std::size_t t1 = t.u, t2 = t.v - n;
        auto xi = tilde.edge_index(s1, n + t1);
        auto zeta = tilde.edge_index(s2, n + t2);
        if (!xi || !zeta)
            throw std::logic_error("knn_tilde_correspondence: image edge missing");
        std::size_t image = corr.target.cell_index(*xi, *zeta).value();
        if (corr.backward[image] != npos)
            throw std::logic_error("knn_tilde_correspondence: image cell repeated");
        corr.forward[idx] = image;
        corr.backward[image] = idx;
    }

    Involution t = Involution::part_swap(tilde, n);
    corr.edge_swap_.resize(tilde.edge_count());
    for (std::size_t e = 0; e < tilde.edge_count(); ++e)
        corr.edge_swap_[e] = t.edge_image(e);
    return corr;
}

} // namespace mod2
