#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "mod2/cycles.hpp"
#include "mod2/gf2.hpp"
#include "mod2/product.hpp"

using namespace mod2;

namespace {

// Edge set of a closed walk through explicit coordinate pairs.
BitVector pair_walk(const ProductGraph& pg, const std::vector<PairVertex>& seq) {
    std::vector<std::size_t> verts;
    for (const PairVertex& p : seq) verts.push_back(pg.vertex(p.x, p.y));
    return testutil::closed_walk(pg.graph(), verts);
}

BitVector all_edges(const Graph& g) {
    BitVector out(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) out.set(e);
    return out;
}

gf2::Span boundary_span(const ProductGraph& pg, const CellComplex& cc) {
    gf2::Span span(pg.graph().edge_count());
    for (std::size_t idx = 0; idx < cc.cell_count(); ++idx) {
        auto [sigma, tau] = cc.cell(idx);
        span.add(boundary_cycle(pg, sigma, tau));
    }
    return span;
}

} // namespace

TEST_CASE("square of the path on three vertices is the 3x3 grid") {
    ProductGraph pg = ProductGraph::square(path_graph(3));
    std::vector<std::pair<std::size_t, std::size_t>> grid_edges;
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            if (y + 1 < 3) grid_edges.emplace_back(3 * x + y, 3 * x + y + 1);
            if (x + 1 < 3) grid_edges.emplace_back(3 * x + y, 3 * (x + 1) + y);
        }
    CHECK(pg.graph() == Graph(9, grid_edges));
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) CHECK(pg.vertex(x, y) == 3 * x + y);
}

TEST_CASE("product of two different paths is the rectangular grid") {
    ProductGraph pg = ProductGraph::product(path_graph(2), path_graph(3));
    CHECK(pg.graph().vertex_count() == 6);
    CHECK(pg.graph().edge_count() == 7);
    CHECK(pg.graph().component_count() == 1);
    CHECK(pg.left_factor().vertex_count() == 2);
    CHECK(pg.right_factor().vertex_count() == 3);
}

TEST_CASE("deleted squares of small graphs have the classical shapes") {
    SUBCASE("path on three vertices: two disjoint paths") {
        ProductGraph pg = ProductGraph::deleted_square(complete_bipartite(2, 1));
        CHECK(pg.graph().vertex_count() == 6);
        CHECK(pg.graph().edge_count() == 4);
        CHECK(pg.graph().component_count() == 2);
        std::size_t leaves = 0;
        for (std::size_t v = 0; v < 6; ++v)
            if (pg.graph().degree(v) == 1) ++leaves;
        CHECK(leaves == 4);
    }
    SUBCASE("triangle: a hexagon") {
        ProductGraph pg = ProductGraph::deleted_square(complete(3));
        CHECK(pg.graph().vertex_count() == 6);
        CHECK(pg.graph().edge_count() == 6);
        CHECK(pg.graph().component_count() == 1);
        CHECK(is_simple_cycle(pg.graph(), all_edges(pg.graph())));
    }
    SUBCASE("triod: a twelve-vertex cycle") {
        ProductGraph pg = ProductGraph::deleted_square(triod());
        CHECK(pg.graph().vertex_count() == 12);
        CHECK(pg.graph().edge_count() == 12);
        CHECK(pg.graph().component_count() == 1);
        CHECK(is_simple_cycle(pg.graph(), all_edges(pg.graph())));
    }
    SUBCASE("complete graph on four vertices: the cuboctahedron skeleton") {
        ProductGraph pg = ProductGraph::deleted_square(complete(4));
        CHECK(pg.graph().vertex_count() == 12);
        CHECK(pg.graph().edge_count() == 24);
        CHECK(pg.graph().component_count() == 1);
        for (std::size_t v = 0; v < 12; ++v) CHECK(pg.graph().degree(v) == 4);
    }
    SUBCASE("vertex and edge counts feeding the cycle-space dimensions") {
        struct Row {
            Graph g;
            std::size_t verts, edges, dim;
        };
        std::vector<Row> rows;
        rows.push_back({complete(3), 6, 6, 1});
        rows.push_back({complete_bipartite(2, 2), 12, 16, 5});
        rows.push_back({complete_bipartite(2, 3), 20, 36, 17});
        rows.push_back({complete(4), 12, 24, 13});
        rows.push_back({complete_bipartite(3, 3), 30, 72, 43});
        rows.push_back({complete(5), 20, 60, 41});
        for (const Row& row : rows) {
            ProductGraph pg = ProductGraph::deleted_square(row.g);
            CHECK(pg.graph().vertex_count() == row.verts);
            CHECK(pg.graph().edge_count() == row.edges);
            CHECK(pg.graph().component_count() == 1);
            CHECK(CycleSpace(pg.graph()).dimension() == row.dim);
        }
    }
}

TEST_CASE("boundary cycle matches the displayed quadrilateral") {
    ProductGraph pg = ProductGraph::square(complete(4));
    std::size_t sigma = *pg.left_factor().edge_index(0, 1);
    std::size_t tau = *pg.right_factor().edge_index(2, 3);
    BitVector expected = pair_walk(pg, {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
    CHECK(boundary_cycle(pg, sigma, tau) == expected);

    auto edges = cell_boundary_edges(pg, sigma, tau);
    std::set<std::size_t> edge_set(edges.begin(), edges.end());
    CHECK(edge_set.size() == 4);
    CHECK(edge_set.count(*pg.move_edge(false, 0, tau)) == 1);
    CHECK(edge_set.count(*pg.move_edge(false, 1, tau)) == 1);
    CHECK(edge_set.count(*pg.move_edge(true, 2, sigma)) == 1);
    CHECK(edge_set.count(*pg.move_edge(true, 3, sigma)) == 1);
}

TEST_CASE("diagonal family on the triangle matches the displayed walks") {
    ProductGraph pg = ProductGraph::square(complete(3));
    std::vector<std::size_t> seq{0, 1, 2};
    CHECK(diag_cycle(pg, seq) ==
          pair_walk(pg, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}));
    CHECK(offdiag_cycle(pg, seq) ==
          pair_walk(pg, {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}));
    CHECK(antidiag_cycle(pg, seq) ==
          pair_walk(pg, {{0, 0}, {1, 0}, {1, 2}, {2, 2}, {2, 1}, {0, 1}}));
}

TEST_CASE("named cycles are 1-cycles of their ambient product") {
    SUBCASE("full square of the complete graph on five vertices") {
        ProductGraph pg = ProductGraph::square(complete(5));
        std::vector<std::size_t> five{0, 1, 2, 3, 4};
        std::vector<std::size_t> three{0, 2, 4};
        for (const auto& seq : {five, three}) {
            CHECK(is_one_cycle(pg.graph(), diag_cycle(pg, seq)));
            CHECK(diag_cycle(pg, seq).count() == 2 * seq.size());
            CHECK(is_one_cycle(pg.graph(), offdiag_cycle(pg, seq)));
            CHECK(offdiag_cycle(pg, seq).count() == 2 * seq.size());
            CHECK(is_one_cycle(pg.graph(), antidiag_cycle(pg, seq)));
            CHECK(antidiag_cycle(pg, seq).count() == 2 * seq.size());
        }
        BitVector c = testutil::closed_walk(complete(5), five);
        CHECK(is_one_cycle(pg.graph(), left_cycle(pg, 2, c)));
        CHECK(left_cycle(pg, 2, c).count() == 5);
        CHECK(is_one_cycle(pg.graph(), right_cycle(pg, c, 2)));
        CHECK(is_one_cycle(pg.graph(), boundary_cycle(pg, 0, 9)));
        CHECK(is_one_cycle(pg.graph(), triodic_cycle(pg, 1, 2, 3, 0)));
    }
    SUBCASE("deleted square keeps the off-diagonal and triodic constructions") {
        ProductGraph pg = ProductGraph::deleted_square(complete(5));
        std::vector<std::size_t> five{0, 1, 2, 3, 4};
        CHECK(is_one_cycle(pg.graph(), offdiag_cycle(pg, five)));
        CHECK(is_one_cycle(pg.graph(), triodic_cycle(pg, 1, 2, 3, 0)));
        CHECK_THROWS_AS(diag_cycle(pg, five), std::invalid_argument);
        BitVector c = testutil::closed_walk(complete(5), {0, 1, 2});
        CHECK(is_one_cycle(pg.graph(), left_cycle(pg, 4, c)));
        CHECK_THROWS_AS(left_cycle(pg, 0, c), std::invalid_argument);
    }
    SUBCASE("parameter validation") {
        ProductGraph pg = ProductGraph::square(complete(4));
        CHECK_THROWS_AS(diag_cycle(pg, {0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(diag_cycle(pg, {0, 1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(triodic_cycle(pg, 0, 1, 2, 2), std::invalid_argument);
        ProductGraph pl = ProductGraph::product(path_graph(4), complete(4));
        CHECK_THROWS_AS(diag_cycle(pl, {0, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(offdiag_cycle(pl, {0, 1, 2}), std::invalid_argument);
    }
}

TEST_CASE("triodic cycle of the triod is the sum of the six star boundaries") {
    Graph star = triod();  // leaves 0,1,2, center 3
    ProductGraph pg = ProductGraph::square(star);
    BitVector tri = triodic_cycle(pg, 0, 1, 2, 3);
    BitVector sum(pg.graph().edge_count());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            sum ^= boundary_cycle(pg, *star.edge_index(i, 3), *star.edge_index(j, 3));
        }
    CHECK(tri == sum);

    // In the deleted square the triodic cycle is the whole twelve-edge graph.
    ProductGraph del = ProductGraph::deleted_square(star);
    CHECK(triodic_cycle(del, 0, 1, 2, 3) == all_edges(del.graph()));
}

TEST_CASE("projections of the named cycles") {
    ProductGraph pg = ProductGraph::square(complete(3));
    Graph k3 = complete(3);
    BitVector c = all_edges(k3);  // the triangle 012

    auto [lx, ly] = projections(pg, left_cycle(pg, 1, c));
    CHECK(lx.none());
    CHECK(ly == c);
    auto [rx, ry] = projections(pg, right_cycle(pg, c, 1));
    CHECK(rx == c);
    CHECK(ry.none());

    auto [bx, by] = projections(pg, boundary_cycle(pg, 0, 2));
    CHECK(bx.none());
    CHECK(by.none());

    auto [dx, dy] = projections(pg, diag_cycle(pg, {0, 1, 2}));
    CHECK(dx == c);
    CHECK(dy == c);
}

TEST_CASE("projections are additive and send 1-cycles to 1-cycles") {
    ProductGraph pg = ProductGraph::square(complete(4));
    CycleSpace space(pg.graph());
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 25; ++trial) {
        BitVector a(pg.graph().edge_count()), b(pg.graph().edge_count());
        for (std::size_t e = 0; e < a.size(); ++e) {
            if (coin(rng)) a.set(e);
            if (coin(rng)) b.set(e);
        }
        auto [ax, ay] = projections(pg, a);
        auto [bx, by] = projections(pg, b);
        auto [sx, sy] = projections(pg, a ^ b);
        CHECK(sx == (ax ^ bx));
        CHECK(sy == (ay ^ by));

        BitVector z = testutil::random_cycle(space.basis, rng);
        auto [zx, zy] = projections(pg, z);
        CHECK(is_one_cycle(complete(4), zx));
        CHECK(is_one_cycle(complete(4), zy));
    }
}

TEST_CASE("factor swap of the product graph") {
    for (bool deleted : {false, true}) {
        ProductGraph pg = deleted ? ProductGraph::deleted_square(complete(4))
                                  : ProductGraph::square(complete(4));
        Involution swap = swap_involution(pg);
        for (std::size_t v = 0; v < pg.graph().vertex_count(); ++v) {
            PairVertex p = pg.pair(v);
            CHECK(swap(v) == pg.vertex(p.y, p.x));
            CHECK(swap(swap(v)) == v);
        }
    }

    ProductGraph pg = ProductGraph::square(complete(4));
    Involution swap = swap_involution(pg);
    Graph k4 = complete(4);
    BitVector c = testutil::closed_walk(k4, {0, 1, 2, 3});
    CHECK(swap.apply_edges(left_cycle(pg, 1, c)) == right_cycle(pg, c, 1));
    CHECK(swap.apply_edges(boundary_cycle(pg, 0, 5)) == boundary_cycle(pg, 5, 0));

    // The swap reverses a diagonal cycle's traversal rather than fixing it.
    BitVector diag = diag_cycle(pg, {0, 1, 2});
    CHECK(swap.apply_edges(diag) == diag_cycle(pg, {0, 2, 1}));
    CHECK(swap.apply_edges(diag) != diag);

    // It does fix the diagonal up to boundaries.
    gf2::Span boundaries = boundary_span(pg, CellComplex::square(k4));
    CHECK(boundaries.contains(diag ^ swap.apply_edges(diag)));
}

TEST_CASE("edge labels round-trip") {
    for (bool deleted : {false, true}) {
        ProductGraph pg = deleted ? ProductGraph::deleted_square(complete(5))
                                  : ProductGraph::square(complete_bipartite(2, 3));
        for (std::size_t e = 0; e < pg.graph().edge_count(); ++e) {
            auto label = pg.edge_label(e);
            auto back = pg.move_edge(label.left_move, label.fixed, label.moving);
            REQUIRE(back.has_value());
            CHECK(*back == e);
        }
    }
    ProductGraph del = ProductGraph::deleted_square(complete(4));
    // (0, 01) would touch the diagonal, so the move is absent.
    CHECK_FALSE(del.move_edge(false, 0, *complete(4).edge_index(0, 1)).has_value());
    CHECK_THROWS_AS(del.vertex(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(del.vertex(9, 0), std::out_of_range);
}

TEST_CASE("cell complexes count their cells") {
    CHECK(CellComplex::square(complete(3)).cell_count() == 9);
    CHECK(CellComplex::square(complete(4)).cell_count() == 36);
    CHECK(CellComplex::deleted(complete(2)).cell_count() == 0);
    CHECK(CellComplex::deleted(complete(3)).cell_count() == 0);
    CHECK(CellComplex::deleted(triod()).cell_count() == 0);
    CHECK(CellComplex::deleted(complete_bipartite(4, 1)).cell_count() == 0);
    CHECK(CellComplex::deleted(complete(4)).cell_count() == 6);
    CHECK(CellComplex::deleted(complete(5)).cell_count() == 30);
    CHECK(CellComplex::deleted(complete_bipartite(3, 3)).cell_count() == 36);
    for (std::size_t n = 2; n <= 5; ++n)
        CHECK(CellComplex::deleted(complete_bipartite(n, n)).cell_count() ==
              n * n * (n - 1) * (n - 1));
}

TEST_CASE("cell indexing is row-major with a dense deleted re-indexing") {
    Graph k4 = complete(4);
    CellComplex full = CellComplex::square(k4);
    const std::size_t m = k4.edge_count();
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            REQUIRE(full.cell_index(s, t).has_value());
            CHECK(*full.cell_index(s, t) == s * m + t);
            CHECK(full.cell(s * m + t) == std::pair{s, t});
        }

    CellComplex del = CellComplex::deleted(k4);
    std::size_t last = 0;
    for (std::size_t idx = 0; idx < del.cell_count(); ++idx) {
        auto [s, t] = del.cell(idx);
        Edge es = k4.edge(s), et = k4.edge(t);
        CHECK(es.u != et.u);
        CHECK(es.u != et.v);
        CHECK(es.v != et.u);
        CHECK(es.v != et.v);
        std::size_t rm = s * m + t;
        if (idx > 0) CHECK(rm > last);
        last = rm;
    }
}

TEST_CASE("sections and the cell swap act on explicit tori") {
    Graph k4 = complete(4);
    CellComplex cc = CellComplex::square(k4);
    BitVector c1 = testutil::closed_walk(k4, {0, 1, 2});
    BitVector c2 = testutil::closed_walk(k4, {1, 2, 3});
    BitVector torus(cc.cell_count());
    for (std::size_t s : c1.set_bits())
        for (std::size_t t : c2.set_bits()) torus.set(*cc.cell_index(s, t));

    for (std::size_t s = 0; s < k4.edge_count(); ++s) {
        CHECK(cc.row_section(torus, s) == (c1.test(s) ? c2 : BitVector(k4.edge_count())));
        CHECK(cc.column_section(torus, s) == (c2.test(s) ? c1 : BitVector(k4.edge_count())));
    }

    BitVector swapped = cc.swap_cells(torus);
    for (std::size_t s = 0; s < k4.edge_count(); ++s)
        CHECK(cc.row_section(swapped, s) == (c2.test(s) ? c1 : BitVector(k4.edge_count())));
    CHECK(cc.swap_cells(swapped) == torus);
}

TEST_CASE("cell adjacency matches the shared-edge description") {
    Graph k5 = complete(5);
    CellComplex cc = CellComplex::square(k5);
    auto idx = [&](std::size_t a, std::size_t b, std::size_t u, std::size_t v) {
        return *cc.cell_index(*k5.edge_index(a, b), *k5.edge_index(u, v));
    };
    CHECK(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 1, 2, 4)));
    CHECK(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 4, 2, 3)));
    CHECK_FALSE(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 1, 2, 3)));
    CHECK_FALSE(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 1, 0, 4)));
    CHECK_FALSE(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 2, 1, 3)));
    CHECK(cc.cells_adjacent(idx(0, 1, 2, 3), idx(0, 1, 0, 3)));

    // A cell's boundary consists of exactly the product edges incident to it,
    // and a product edge lies in the boundaries of the cells that keep its
    // fixed endpoint and share its moving coordinate.
    Graph k4 = complete(4);
    ProductGraph pg = ProductGraph::square(k4);
    CellComplex c4 = CellComplex::square(k4);
    for (std::size_t e = 0; e < pg.graph().edge_count(); ++e) {
        auto label = pg.edge_label(e);
        std::size_t hits = 0;
        for (std::size_t idx2 = 0; idx2 < c4.cell_count(); ++idx2) {
            auto [s, t] = c4.cell(idx2);
            auto edges = cell_boundary_edges(pg, s, t);
            bool contains = std::find(edges.begin(), edges.end(), e) != edges.end();
            std::size_t match = label.left_move ? s : t;
            Edge other = label.left_move ? k4.edge(t) : k4.edge(s);
            bool expected = match == label.moving &&
                            (other.u == label.fixed || other.v == label.fixed);
            CHECK(contains == expected);
            if (contains) ++hits;
        }
        CHECK(hits == k4.degree(label.fixed));
    }
}

TEST_CASE("bipartite-to-matching-free cell correspondence") {
    CHECK_THROWS_AS(knn_tilde_correspondence(2), std::invalid_argument);

    for (std::size_t n : {3, 4}) {
        KnnTildeCorrespondence corr = knn_tilde_correspondence(n);
        CHECK(corr.source.cell_count() == n * n * (n - 1) * (n - 1));
        CHECK(corr.target.cell_count() == corr.source.cell_count());
        std::vector<bool> hit(corr.target.cell_count(), false);
        for (std::size_t idx = 0; idx < corr.source.cell_count(); ++idx) {
            CHECK_FALSE(hit[corr.forward[idx]]);
            hit[corr.forward[idx]] = true;
            CHECK(corr.backward[corr.forward[idx]] == idx);
        }
    }

    SUBCASE("the displayed instance") {
        KnnTildeCorrespondence corr = knn_tilde_correspondence(4);
        const Graph& knn = corr.source.base();
        const Graph& tilde = corr.target.base();
        // source cell (12', 34') in 1-based part labels
        std::size_t sigma = *knn.edge_index(0, 4 + 1);
        std::size_t tau = *knn.edge_index(2, 4 + 3);
        std::size_t xi = *tilde.edge_index(0, 4 + 2);    // 13'
        std::size_t zeta = *tilde.edge_index(1, 4 + 3);  // 24'
        CHECK(corr.forward[*corr.source.cell_index(sigma, tau)] ==
              *corr.target.cell_index(xi, zeta));
    }

    SUBCASE("adjacency is preserved exhaustively for n = 3") {
        KnnTildeCorrespondence corr = knn_tilde_correspondence(3);
        const std::size_t cells = corr.source.cell_count();
        for (std::size_t i = 0; i < cells; ++i)
            for (std::size_t j = 0; j < cells; ++j)
                CHECK(corr.source.cells_adjacent(i, j) ==
                      corr.target.cells_adjacent(corr.forward[i], corr.forward[j]));
    }

    SUBCASE("the factor swap transports to the coordinate-wise part swap") {
        KnnTildeCorrespondence corr = knn_tilde_correspondence(3);
        for (std::size_t idx = 0; idx < corr.source.cell_count(); ++idx)
            CHECK(corr.forward[corr.source.swap_cell(idx)] ==
                  corr.part_swap_target_cell(corr.forward[idx]));
    }

    SUBCASE("cell-set transport round-trips") {
        KnnTildeCorrespondence corr = knn_tilde_correspondence(3);
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> coin(0, 1);
        BitVector c(corr.source.cell_count());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (coin(rng)) c.set(i);
        CHECK(corr.apply_inverse(corr.apply(c)) == c);
        CHECK(corr.apply(c).count() == c.count());
    }
}
