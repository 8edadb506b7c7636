#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "mod2/cycles.hpp"
#include "mod2/gf2.hpp"
#include "mod2/homology.hpp"
#include "mod2/product.hpp"

using namespace mod2;

namespace {

BitVector all_edges(const Graph& g) {
    BitVector out(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) out.set(e);
    return out;
}

// Lifts an edge set of the deleted square into the edge space of the full
// square of the same base graph.
BitVector embed_deleted(const ProductGraph& del, const ProductGraph& full, const BitVector& c) {
    BitVector out(full.graph().edge_count());
    for (std::size_t e : c.set_bits()) {
        Edge pe = del.graph().edge(e);
        PairVertex p = del.pair(pe.u);
        PairVertex q = del.pair(pe.v);
        out.flip(*full.graph().edge_index(full.vertex(p.x, p.y), full.vertex(q.x, q.y)));
    }
    return out;
}

BitVector recombine(const BitMatrix& rows, const std::vector<std::size_t>& picks) {
    BitVector out(rows.col_count());
    for (std::size_t r : picks) out ^= rows.row(r);
    return out;
}

Graph triangle_with_tail() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
}
Graph square_with_pendant() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
}
Graph bowtie() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}
Graph house() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
}

} // namespace

TEST_CASE("full-square homology dimensions double the base dimension") {
    struct Row {
        Graph g;
        std::size_t dim;
    };
    std::vector<Row> rows{{complete(3), 2},
                          {complete_bipartite(2, 2), 2},
                          {complete_bipartite(2, 3), 4},
                          {complete(4), 6},
                          {wheel(4), 8}};
    for (const Row& row : rows) {
        BoundarySpace bs = BoundarySpace::square(row.g);
        HomologySummary h = h1_mod_boundaries(bs);
        CHECK(h.dim == row.dim);
        CHECK(h.dim == 2 * CycleSpace(row.g).dimension());
        CHECK(h.cycle_dim == h.boundary_rank + h.dim);

        // Transversal rows are independent 1-cycles outside the boundary span.
        CHECK(h.transversal.row_count() == h.dim);
        gf2::Span span(bs.ambient().graph().edge_count());
        for (std::size_t r = 0; r < bs.generators().row_count(); ++r)
            span.add(bs.generators().row(r));
        for (std::size_t r = 0; r < h.transversal.row_count(); ++r) {
            CHECK(is_one_cycle(bs.ambient().graph(), h.transversal.row(r)));
            CHECK_FALSE(bs.contains(h.transversal.row(r)));
            CHECK(span.add(h.transversal.row(r)));
        }
        CHECK(span.rank() == h.cycle_dim);
    }
}

TEST_CASE("deleted-square exponent table") {
    struct Row {
        Graph g;
        std::size_t cycle_dim, mod_dim;
        bool all_sum_dependency;
    };
    std::vector<Row> rows{{complete(3), 1, 1, false},
                          {complete_bipartite(2, 2), 5, 1, false},
                          {complete_bipartite(2, 3), 17, 5, false},
                          {complete(4), 13, 7, false},
                          {complete_bipartite(3, 3), 43, 8, true},
                          {complete(5), 41, 12, true}};
    for (const Row& row : rows) {
        BoundarySpace bs = BoundarySpace::deleted_square(row.g);
        HomologySummary h = h1_mod_boundaries(bs);
        CHECK(h.cycle_dim == row.cycle_dim);
        CHECK(h.dim == row.mod_dim);

        BitMatrix deps = gf2::left_kernel(bs.generators());
        if (row.all_sum_dependency) {
            // The only vanishing combination is the sum of all boundaries.
            REQUIRE(deps.row_count() == 1);
            CHECK(deps.row(0).count() == bs.complex().cell_count());
        } else {
            CHECK(deps.row_count() == 0);
            CHECK(bs.rank() == bs.complex().cell_count());
        }
    }
}

TEST_CASE("boundary-sum certificates") {
    SUBCASE("triodic cycle in the full square of the triod") {
        Graph star = triod();
        BoundarySpace bs = BoundarySpace::square(star);
        BitVector tri = triodic_cycle(bs.ambient(), 0, 1, 2, 3);
        auto cells = is_sum_of_boundaries(bs, tri);
        REQUIRE(cells.has_value());
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) expected.push_back(*bs.complex().cell_index(i, j));
        std::sort(expected.begin(), expected.end());
        CHECK(*cells == expected);
        CHECK(recombine(bs.generators(), *cells) == tri);
    }
    SUBCASE("triodic cycle in the deleted square of the triod") {
        BoundarySpace bs = BoundarySpace::deleted_square(triod());
        CHECK(bs.complex().cell_count() == 0);
        BitVector tri = triodic_cycle(bs.ambient(), 0, 1, 2, 3);
        CHECK_FALSE(is_sum_of_boundaries(bs, tri).has_value());
    }
    SUBCASE("every 1-cycle in the square of a tree is a boundary sum") {
        for (const Graph& t : {path_graph(4), complete_bipartite(4, 1),
                               Graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}})}) {
            BoundarySpace bs = BoundarySpace::square(t);
            HomologySummary h = h1_mod_boundaries(bs);
            CHECK(h.dim == 0);
            CycleSpace space(bs.ambient().graph());
            std::mt19937 rng(11);
            for (int i = 0; i < 10; ++i) {
                BitVector c = testutil::random_cycle(space.basis, rng);
                auto cells = is_sum_of_boundaries(bs, c);
                REQUIRE(cells.has_value());
                CHECK(recombine(bs.generators(), *cells) == c);
            }
        }
    }
    SUBCASE("rejects non-cycles") {
        BoundarySpace bs = BoundarySpace::square(complete(3));
        BitVector bad(bs.ambient().graph().edge_count());
        bad.set(0);
        CHECK_THROWS_AS(is_sum_of_boundaries(bs, bad), std::invalid_argument);
    }
}

TEST_CASE("diagonal, off-diagonal and antidiagonal certificates on the triangle") {
    Graph k3 = complete(3);
    BoundarySpace bs = BoundarySpace::square(k3);
    const ProductGraph& pg = bs.ambient();
    std::vector<std::size_t> seq{0, 1, 2};
    std::size_t e01 = *k3.edge_index(0, 1);
    std::size_t e02 = *k3.edge_index(0, 2);
    std::size_t e12 = *k3.edge_index(1, 2);
    BitVector base = left_cycle(pg, 0, all_edges(k3)) ^ right_cycle(pg, all_edges(k3), 0);

    CHECK(diag_cycle(pg, seq) ==
          (base ^ boundary_cycle(pg, e01, e12) ^ boundary_cycle(pg, e01, e02) ^
           boundary_cycle(pg, e12, e02)));
    CHECK(offdiag_cycle(pg, seq) ==
          (base ^ boundary_cycle(pg, e01, e02) ^ boundary_cycle(pg, e02, e01)));
    CHECK(antidiag_cycle(pg, seq) ==
          (base ^ boundary_cycle(pg, e12, e02) ^ boundary_cycle(pg, e02, e12) ^
           boundary_cycle(pg, e02, e02)));

    CHECK(homologous(bs, offdiag_cycle(pg, seq), diag_cycle(pg, seq)));
    CHECK(homologous(bs, antidiag_cycle(pg, seq), diag_cycle(pg, seq)));
}

TEST_CASE("symmetrized-cycle identity for Hamiltonian cycles") {
    for (std::size_t n : {3, 4, 5}) {
        Graph k = complete(n);
        ProductGraph pg = ProductGraph::square(k);
        std::vector<std::size_t> seq(n);
        for (std::size_t i = 0; i < n; ++i) seq[i] = i;
        BitVector c = testutil::closed_walk(k, seq);

        BitVector rhs = diag_cycle(pg, seq);
        auto ce = [&](std::size_t i) {  // edge i(i+1) in 1-based labels
            return *k.edge_index(i - 1, i % n);
        };
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                rhs ^= boundary_cycle(pg, ce(i), ce(j));
        CHECK((left_cycle(pg, 0, c) ^ right_cycle(pg, c, 0)) == rhs);
    }
}

TEST_CASE("left cycles are not boundary sums") {
    Graph k4 = complete(4);
    BoundarySpace bs = BoundarySpace::square(k4);
    CycleSpace space(k4);
    for (std::size_t r = 0; r < space.basis.row_count(); ++r) {
        BitVector c = space.basis.row(r);
        CHECK_FALSE(is_sum_of_boundaries(bs, left_cycle(bs.ambient(), 0, c)).has_value());
        CHECK_FALSE(homologous(bs, left_cycle(bs.ambient(), 0, c),
                               BitVector(bs.ambient().graph().edge_count())));
    }

    // Nor is a left cycle a sum of diagonal cycles and boundaries: collect
    // diag rows for every simple cycle of the complete graph on 4 vertices
    // in both traversal directions, plus all boundaries.
    BitMatrix gens(bs.ambient().graph().edge_count());
    std::vector<std::vector<std::size_t>> cycles{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                                 {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (auto seq : cycles) {
        gens.add_row(diag_cycle(bs.ambient(), seq));
        std::reverse(seq.begin(), seq.end());
        gens.add_row(diag_cycle(bs.ambient(), seq));
    }
    for (std::size_t r = 0; r < bs.generators().row_count(); ++r)
        gens.add_row(bs.generators().row(r));
    BitVector target = left_cycle(bs.ambient(), 0, testutil::closed_walk(k4, {1, 2, 3}));
    CHECK_FALSE(span_membership(gens, target).has_value());
}

TEST_CASE("Kunneth reduction") {
    Graph k3 = complete(3);
    BoundarySpace bs = BoundarySpace::square(k3);
    const ProductGraph& pg = bs.ambient();

    SUBCASE("diagonal reduces to the pair of full triangles") {
        KunnethReduction kr = kunneth_reduce(bs, diag_cycle(pg, {0, 1, 2}), 0);
        CHECK(kr.c1 == all_edges(k3));
        CHECK(kr.c2 == all_edges(k3));
        BitVector sum = diag_cycle(pg, {0, 1, 2}) ^ right_cycle(pg, kr.c1, 0) ^
                        left_cycle(pg, 0, kr.c2);
        CHECK(recombine(bs.generators(), kr.certificate) == sum);
    }
    SUBCASE("a boundary reduces to the empty pair with itself as certificate") {
        KunnethReduction kr = kunneth_reduce(bs, boundary_cycle(pg, 0, 2), 1);
        CHECK(kr.c1.none());
        CHECK(kr.c2.none());
        CHECK(kr.certificate == std::vector<std::size_t>{*bs.complex().cell_index(0, 2)});
    }
    SUBCASE("left cycles reduce to their factor") {
        BitVector q = all_edges(k3);
        KunnethReduction kr = kunneth_reduce(bs, left_cycle(pg, 2, q), 0);
        CHECK(kr.c1.none());
        CHECK(kr.c2 == q);
    }
    SUBCASE("the reduced pair is unique, checked exhaustively") {
        std::vector<BitVector> cycles{BitVector(k3.edge_count()), all_edges(k3)};
        std::vector<BitVector> targets{diag_cycle(pg, {0, 1, 2}),
                                       offdiag_cycle(pg, {0, 1, 2}),
                                       boundary_cycle(pg, 1, 1),
                                       left_cycle(pg, 0, all_edges(k3))};
        for (const BitVector& c : targets) {
            KunnethReduction kr = kunneth_reduce(bs, c, 0);
            std::size_t matches = 0;
            for (const BitVector& z1 : cycles)
                for (const BitVector& z2 : cycles) {
                    BitVector cand = right_cycle(pg, z1, 0) ^ left_cycle(pg, 0, z2);
                    if (homologous(bs, c, cand)) {
                        ++matches;
                        CHECK(z1 == kr.c1);
                        CHECK(z2 == kr.c2);
                    }
                }
            CHECK(matches == 1);
        }
    }
    SUBCASE("rejects deleted ambients and disconnected bases") {
        BoundarySpace del = BoundarySpace::deleted_square(complete(4));
        BitVector zero(del.ambient().graph().edge_count());
        CHECK_THROWS_AS(kunneth_reduce(del, zero, 0), std::invalid_argument);
        Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        BoundarySpace split = BoundarySpace::square(two);
        BitVector z(split.ambient().graph().edge_count());
        CHECK_THROWS_AS(kunneth_reduce(split, z, 0), std::invalid_argument);
    }
}

TEST_CASE("symmetric 1-cycles modulo symmetrized boundaries") {
    SUBCASE("full squares of connected graphs match the base dimension") {
        for (const Graph& g : {complete(3), complete(4), complete_bipartite(2, 3), wheel(4)}) {
            BoundarySpace bs = BoundarySpace::square(g);
            SymmetricHomology sh = symmetric_h1(bs);
            CHECK(sh.dim == CycleSpace(g).dimension());
            for (std::size_t r = 0; r < sh.symmetric_cycle_basis.row_count(); ++r) {
                const BitVector& row = sh.symmetric_cycle_basis.row(r);
                CHECK(is_one_cycle(bs.ambient().graph(), row));
                CHECK(swap_involution(bs.ambient()).apply_edges(row) == row);
            }
        }
    }
    SUBCASE("the correspondence is invertible, checked exhaustively") {
        for (const Graph& g : {complete(3), complete(4)}) {
            BoundarySpace bs = BoundarySpace::square(g);
            const ProductGraph& pg = bs.ambient();
            SymmetricHomology sh = symmetric_h1(bs);
            CycleSpace space(g);
            REQUIRE(space.basis.row_count() <= 3);
            std::size_t n = space.basis.row_count();
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                BitVector c(g.edge_count());
                for (std::size_t b = 0; b < n; ++b)
                    if (mask >> b & 1) c ^= space.basis.row(b);
                BitVector s = right_cycle(pg, c, 0) ^ left_cycle(pg, 0, c);
                // Injective: a nonzero cycle never symmetrizes into the
                // boundary span.  Surjective by the dimension count.
                CHECK_FALSE(bs.contains(s));
            }
            CHECK(sh.dim == space.dimension());
        }
    }
    SUBCASE("the symmetrizing map inverts through either projection") {
        Graph g = complete(4);
        BoundarySpace bs = BoundarySpace::square(g);
        const ProductGraph& pg = bs.ambient();
        Involution swap = swap_involution(pg);
        CycleSpace space(g);
        std::mt19937 rng(3);
        for (int i = 0; i < 10; ++i) {
            BitVector c = testutil::random_cycle(space.basis, rng);
            BitVector s = right_cycle(pg, c, 0) ^ left_cycle(pg, 0, c);
            CHECK(swap.apply_edges(s) == s);
            auto [sx, sy] = projections(pg, s);
            CHECK(sx == c);
            CHECK(sy == c);
            // Injectivity modulo symmetrized boundaries: only the zero cycle
            // symmetrizes into the boundary span.
            if (c.any()) CHECK_FALSE(bs.contains(s));
        }
    }
    SUBCASE("symmetric boundary sums versus symmetrized boundaries") {
        // Deleted squares: the two spans agree whenever the generators carry
        // no swap-invariant dependency.
        for (const Graph& g :
             {complete(3), complete(4), complete_bipartite(2, 3), cycle_graph(5), wheel(4)}) {
            SymmetricHomology sh = symmetric_h1(BoundarySpace::deleted_square(g));
            CHECK(sh.symmetric_boundary_rank == sh.symmetrized_boundary_rank);
        }
        // ... but a swap-invariant dependency (here: the sum of all cell
        // boundaries vanishes) admits a symmetric "half" sum that is not a
        // symmetrized boundary, so the claim fails for these two graphs.
        for (const Graph& g : {complete(5), complete_bipartite(3, 3)}) {
            SymmetricHomology sh = symmetric_h1(BoundarySpace::deleted_square(g));
            CHECK(sh.symmetric_boundary_rank == sh.symmetrized_boundary_rank + 1);
        }
        // Full squares: each diagonal cell symmetrizes to zero even though its
        // boundary is itself symmetric; the deficit is exactly V - N.
        for (const Graph& g :
             {complete(3), complete(4), complete(5), complete_bipartite(2, 3), wheel(4)}) {
            SymmetricHomology sh = symmetric_h1(BoundarySpace::square(g));
            CHECK(sh.symmetric_boundary_rank ==
                  sh.symmetrized_boundary_rank + g.vertex_count() - g.component_count());
        }
    }
    SUBCASE("symmetric cycle count depends only on vertex and edge counts") {
        std::vector<std::vector<Graph>> families{
            {cycle_graph(5), triangle_with_tail(), square_with_pendant()},
            {bowtie(), house(), complete_bipartite(2, 3)}};
        for (const auto& family : families) {
            for (bool deleted : {false, true}) {
                std::vector<std::size_t> fixed_dims;
                for (const Graph& g : family) {
                    BoundarySpace bs = deleted ? BoundarySpace::deleted_square(g)
                                               : BoundarySpace::square(g);
                    fixed_dims.push_back(symmetric_h1(bs).symmetric_cycle_dim);
                }
                CAPTURE(deleted);
                CHECK(fixed_dims[0] == fixed_dims[1]);
                CHECK(fixed_dims[0] == fixed_dims[2]);
            }
        }
    }
}

TEST_CASE("matching-free square remark: full square matches, deleted square does not") {
    Graph kt = tilde_complete(3);  // a hexagon
    BoundarySpace full = BoundarySpace::square(kt);
    HomologySummary hf = h1_mod_boundaries(full);
    CHECK(hf.cycle_dim == 37);
    CHECK(hf.dim == 2);  // four classes

    BoundarySpace del = BoundarySpace::deleted_square(kt);
    HomologySummary hd = h1_mod_boundaries(del);
    CHECK(hd.cycle_dim == 19);  // differs from the reported 37
    CHECK(del.complex().cell_count() == 18);
    CHECK(hd.dim == 1);  // the deleted product of a hexagon is an annulus
}

TEST_CASE("antidiagonal class membership relative to the deleted square") {
    struct Row {
        Graph g;
        std::vector<std::size_t> seq;
        bool member;
    };
    std::vector<Row> rows{{complete(3), {0, 1, 2}, true}, {complete(4), {0, 1, 2, 3}, true}};
    for (const Row& row : rows) {
        ProductGraph full = ProductGraph::square(row.g);
        ProductGraph del = ProductGraph::deleted_square(row.g);
        BoundarySpace bs = BoundarySpace::square(row.g);

        BitMatrix gens(full.graph().edge_count());
        for (std::size_t r = 0; r < bs.generators().row_count(); ++r)
            gens.add_row(bs.generators().row(r));
        CycleSpace dspace(del.graph());
        for (std::size_t r = 0; r < dspace.basis.row_count(); ++r)
            gens.add_row(embed_deleted(del, full, dspace.basis.row(r)));

        BitVector anti = antidiag_cycle(full, row.seq);
        CHECK(span_membership(gens, anti).has_value() == row.member);
    }
}
