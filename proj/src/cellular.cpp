#include "mod2/cellular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mod2/cycles.hpp"

namespace mod2 {

namespace {

void require_match(const ProductGraph& pg, const CellComplex& cc) {
    if (pg.is_deleted() != cc.is_deleted() || !(pg.left_factor() == cc.base()) ||
        !(pg.right_factor() == cc.base()))
        throw std::invalid_argument("product graph does not match the cell complex");
}

BitVector vertex_support(const Graph& g, const BitVector& edges) {
    BitVector s(g.vertex_count());
    for (std::size_t e : edges.set_bits()) {
        s.set(g.edge(e).u);
        s.set(g.edge(e).v);
    }
    return s;
}

} // namespace

bool is_cellular_2cycle(const CellComplex& cc, const BitVector& cells) {
    if (cells.size() != cc.cell_count())
        throw std::invalid_argument("cell set dimension mismatch");
    const Graph& k = cc.base();
    for (std::size_t e = 0; e < k.edge_count(); ++e) {
        if (!is_one_cycle(k, cc.row_section(cells, e))) return false;
        if (!is_one_cycle(k, cc.column_section(cells, e))) return false;
    }
    return true;
}

BitVector boundary_sum(const ProductGraph& pg, const CellComplex& cc, const BitVector& cells) {
    require_match(pg, cc);
    if (cells.size() != cc.cell_count())
        throw std::invalid_argument("cell set dimension mismatch");
    BitVector out(pg.graph().edge_count());
    for (std::size_t idx : cells.set_bits()) {
        auto [sigma, tau] = cc.cell(idx);
        for (std::size_t e : cell_boundary_edges(pg, sigma, tau)) out.flip(e);
    }
    return out;
}

BitVector torus(const CellComplex& cc, const BitVector& c1, const BitVector& c2) {
    if (c1.size() != cc.base().edge_count() || c2.size() != cc.base().edge_count())
        throw std::invalid_argument("torus factors must be edge sets of the base graph");
    BitVector out(cc.cell_count());
    for (std::size_t sigma : c1.set_bits())
        for (std::size_t tau : c2.set_bits()) {
            auto idx = cc.cell_index(sigma, tau);
            if (!idx)
                throw std::invalid_argument("torus cell (" + std::to_string(sigma) + ", " +
                                            std::to_string(tau) + ") missing from the complex");
            out.set(*idx);
        }
    return out;
}

TwoCycleSpace two_cycle_space(const Graph& k) {
    TwoCycleSpace out;
    out.complex = CellComplex::square(k);
    SpanningForest forest(k);
    out.non_tree = forest.non_tree_edges();
    out.fundamental = forest.cycle_space_basis();
    out.basis = BitMatrix(out.complex.cell_count());
    for (std::size_t i = 0; i < out.fundamental.row_count(); ++i)
        for (std::size_t j = 0; j < out.fundamental.row_count(); ++j)
            out.basis.add_row(torus(out.complex, out.fundamental.row(i), out.fundamental.row(j)));
    return out;
}

BitVector decompose_into_tori(const TwoCycleSpace& space, const BitVector& cells) {
    if (!is_cellular_2cycle(space.complex, cells))
        throw std::invalid_argument("decompose_into_tori needs a cellular 2-cycle");
    std::size_t q = space.non_tree.size();
    BitVector coords(q * q);
    BitVector sum(space.complex.cell_count());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            std::size_t cell = *space.complex.cell_index(space.non_tree[i], space.non_tree[j]);
            if (cells.test(cell)) {
                coords.set(i * q + j);
                sum ^= space.basis.row(i * q + j);
            }
        }
    if (sum != cells) throw std::logic_error("torus recombination failed to reproduce the cycle");
    return coords;
}

std::vector<BitVector> simple_cycles(const Graph& g, std::size_t max_cycles) {
    std::vector<BitVector> out;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<std::size_t> path;   // vertices
    std::vector<std::size_t> stack;  // edges along the path

    auto dfs = [&](auto&& self, std::size_t root, std::size_t u) -> void {
        for (std::size_t e : g.incident_edges(u)) {
            std::size_t w = g.opposite(e, u);
            if (w == root && stack.size() >= 2 && path[1] < u) {
                if (out.size() == max_cycles)
                    throw std::length_error("more than " + std::to_string(max_cycles) +
                                            " simple cycles");
                BitVector c(g.edge_count());
                for (std::size_t s : stack) c.set(s);
                c.set(e);
                out.push_back(std::move(c));
            } else if (w > root && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                stack.push_back(e);
                self(self, root, w);
                stack.pop_back();
                path.pop_back();
                on_path[w] = false;
            }
        }
    };

    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        path.assign(1, root);
        on_path.assign(g.vertex_count(), false);
        on_path[root] = true;
        dfs(dfs, root, root);
    }
    return out;
}

BitMatrix vertex_disjoint_tori(const CellComplex& deleted_cc, std::size_t max_cycles) {
    if (!deleted_cc.is_deleted())
        throw std::invalid_argument("vertex-disjoint tori live in a deleted complex");
    const Graph& k = deleted_cc.base();
    std::vector<BitVector> cycles = simple_cycles(k, max_cycles);
    std::vector<BitVector> supports;
    supports.reserve(cycles.size());
    for (const BitVector& c : cycles) supports.push_back(vertex_support(k, c));

    BitMatrix rows(deleted_cc.cell_count());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = 0; j < cycles.size(); ++j)
            if (i != j && (supports[i] & supports[j]).none())
                rows.add_row(torus(deleted_cc, cycles[i], cycles[j]));
    return rows;
}

TorusSpanReport vertex_disjoint_span_report(const Graph& g, std::size_t max_cycles) {
    BoundarySpace bs = BoundarySpace::deleted_square(g);
    TorusSpanReport out;
    out.two_cycle_dim = bs.complex().cell_count() - bs.rank();

    gf2::Span span(bs.complex().cell_count());
    BitMatrix tori = vertex_disjoint_tori(bs.complex(), max_cycles);
    for (std::size_t r = 0; r < tori.row_count(); ++r) span.add(tori.row(r));
    out.span_rank = span.rank();
    out.codimension = out.two_cycle_dim - out.span_rank;
    out.beyond_single_class = out.codimension >= 2;
    return out;
}

Graph bridged_complete_pair(std::size_t n) {
    if (n < 2) throw std::invalid_argument("bridged_complete_pair needs n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t copy = 0; copy < 2; ++copy)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                edges.push_back({copy * n + i, copy * n + j});
    edges.push_back({0, n});
    return Graph(2 * n, edges);
}

SymmetricTwoCycles symmetric_two_cycles(const BoundarySpace& bs) {
    SymmetricTwoCycles out;
    out.two_cycle_basis = gf2::left_kernel(bs.generators());
    out.two_cycle_dim = out.two_cycle_basis.row_count();
    out.symmetric_basis = gf2::fixed_subspace(
        out.two_cycle_basis, [&](const BitVector& v) { return bs.complex().swap_cells(v); });
    out.symmetric_dim = out.symmetric_basis.row_count();
    return out;
}

BitMatrix symmetrized_torus_span(const TwoCycleSpace& space) {
    std::size_t q = space.non_tree.size();
    BitMatrix rows(space.complex.cell_count());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            rows.add_row(space.basis.row(i * q + j) ^ space.basis.row(j * q + i));
    return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> symmetrized_torus_decomposition(
    const TwoCycleSpace& space, const CellComplex& deleted_cc, const BitVector& cells) {
    if (!deleted_cc.is_deleted() || !(deleted_cc.base() == space.complex.base()))
        throw std::invalid_argument("expected the deleted complex of the same base graph");
    if (!is_cellular_2cycle(deleted_cc, cells))
        throw std::invalid_argument("expected a cellular 2-cycle");
    if (deleted_cc.swap_cells(cells) != cells)
        throw std::invalid_argument("expected a swap-symmetric cell set");

    BitVector full = embed_cells(deleted_cc, space.complex, cells);
    BitVector coords = decompose_into_tori(space, full);

    std::size_t q = space.non_tree.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    BitVector sum(space.complex.cell_count());
    for (std::size_t i = 0; i < q; ++i) {
        // A deleted cell never has equal coordinates, so no diagonal terms;
        // symmetry of the cell set pairs the remaining coordinates up.
        if (coords.test(i * q + i))
            throw std::logic_error("deleted 2-cycle produced a diagonal torus coordinate");
        for (std::size_t j = i + 1; j < q; ++j) {
            if (coords.test(i * q + j) != coords.test(j * q + i))
                throw std::logic_error("asymmetric torus coordinates for a symmetric cycle");
            if (coords.test(i * q + j)) {
                pairs.emplace_back(space.non_tree[i], space.non_tree[j]);
                sum ^= space.basis.row(i * q + j);
                sum ^= space.basis.row(j * q + i);
            }
        }
    }
    if (sum != full)
        throw std::logic_error("symmetrized tori failed to reproduce the cycle");
    return pairs;
}

BitVector embed_cells(const CellComplex& from, const CellComplex& to, const BitVector& cells) {
    if (!(from.base() == to.base()))
        throw std::invalid_argument("cell embedding needs complexes over one base graph");
    if (cells.size() != from.cell_count())
        throw std::invalid_argument("cell set dimension mismatch");
    BitVector out(to.cell_count());
    for (std::size_t idx : cells.set_bits()) {
        auto [sigma, tau] = from.cell(idx);
        auto target = to.cell_index(sigma, tau);
        if (!target)
            throw std::invalid_argument("cell (" + std::to_string(sigma) + ", " +
                                        std::to_string(tau) + ") missing from the target complex");
        out.set(*target);
    }
    return out;
}

KnnSymmetricReport knn_symmetric_generators(std::size_t n) {
    if (n < 3 || n > 5) throw std::invalid_argument("generator survey supports n in {3, 4, 5}");
    Graph g = complete_bipartite(n, n);
    BoundarySpace bs = BoundarySpace::deleted_square(g);
    const CellComplex& cc = bs.complex();

    KnnSymmetricReport out;
    out.n = n;
    out.symmetric_dim = symmetric_two_cycles(bs).symmetric_dim;

    // Quadrilaterals a c' b d' with their vertex supports.
    std::vector<BitVector> quads, supports;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    BitVector q(g.edge_count());
                    q.set(*g.edge_index(a, n + c));
                    q.set(*g.edge_index(b, n + c));
                    q.set(*g.edge_index(b, n + d));
                    q.set(*g.edge_index(a, n + d));
                    quads.push_back(q);
                    supports.push_back(vertex_support(g, q));
                }

    gf2::Span span(cc.cell_count());
    for (std::size_t i = 0; i < quads.size(); ++i)
        for (std::size_t j = i + 1; j < quads.size(); ++j)
            if ((supports[i] & supports[j]).none()) {
                ++out.torus_generators;
                span.add(torus(cc, quads[i], quads[j]) ^ torus(cc, quads[j], quads[i]));
            }

    // Deleted products of the 3-by-3 complete bipartite subgraphs: all cells
    // whose four endpoints lie inside the chosen parts.
    std::vector<std::vector<std::size_t>> triples;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    auto inside = [](const std::vector<std::size_t>& t, std::size_t v) {
        return std::find(t.begin(), t.end(), v) != t.end();
    };
    for (const auto& left : triples)
        for (const auto& right : triples) {
            BitVector gen(cc.cell_count());
            for (std::size_t idx = 0; idx < cc.cell_count(); ++idx) {
                auto [sigma, tau] = cc.cell(idx);
                Edge s = g.edge(sigma), t = g.edge(tau);
                if (inside(left, s.u) && inside(left, t.u) && inside(right, s.v - n) &&
                    inside(right, t.v - n))
                    gen.set(idx);
            }
            ++out.subgraph_generators;
            span.add(gen);
        }

    out.rank = span.rank();
    out.redundancy = out.torus_generators + out.subgraph_generators - out.rank;
    out.spans = out.rank == out.symmetric_dim;
    return out;
}

} // namespace mod2
