#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "mod2/gf2.hpp"
#include "mod2/graph.hpp"

using namespace mod2;

namespace {

// Vertex-edge incidence matrix; its kernel over the edge space is the cycle space.
BitMatrix incidence(const Graph& g) {
    BitMatrix m(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        m.row(g.edge(e).u).set(e);
        m.row(g.edge(e).v).set(e);
    }
    return m;
}

// Edge set of a closed walk given by its vertex sequence (last joins back to first).
BitVector closed_walk_edges(const Graph& g, const std::vector<std::size_t>& verts) {
    BitVector c(g.edge_count());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto idx = g.edge_index(verts[i], verts[(i + 1) % verts.size()]);
        REQUIRE(idx.has_value());
        c.flip(*idx);
    }
    return c;
}

} // namespace

TEST_CASE("standard families have the expected sizes") {
    CHECK(complete(3).vertex_count() == 3);
    CHECK(complete(3).edge_count() == 3);
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(wheel(4).vertex_count() == 5);
    CHECK(wheel(4).edge_count() == 8);
    CHECK(triod().vertex_count() == 4);
    CHECK(triod().edge_count() == 3);
    CHECK(tilde_complete(4).edge_count() == 12);
    CHECK_THROWS(cycle_graph(2));
    CHECK_THROWS(wheel(2));
}

TEST_CASE("edges are indexed lexicographically") {
    Graph g(4, {{3, 2}, {0, 1}, {1, 3}, {0, 2}});
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{1, 3});
    CHECK(g.edge(3) == Edge{2, 3});
    CHECK(g.edge_index(3, 1) == 2);
    CHECK_FALSE(g.edge_index(0, 3).has_value());
    CHECK(g.neighbors(0) == std::vector<std::size_t>{1, 2});
    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(3, {{0, 5}}));
}

TEST_CASE("tilde_complete(3) is a single 6-cycle") {
    Graph g = tilde_complete(3);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.component_count() == 1);
    for (std::size_t v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("component labeling") {
    CHECK(path_graph(4).component_count() == 1);

    // Two disjoint triangles.
    Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(two.component_count() == 2);
    CHECK(two.component_labels() == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});

    Graph isolated(5, {});
    CHECK(isolated.component_count() == 5);
}

TEST_CASE("spanning forest is greedy by edge index") {
    Graph tree = path_graph(5);
    SpanningForest f(tree);
    CHECK(f.tree_edges().size() == 4);
    CHECK(f.non_tree_edges().empty());

    SpanningForest tri(cycle_graph(3));
    CHECK(tri.tree_edges() == std::vector<std::size_t>{0, 1});
    CHECK(tri.non_tree_edges() == std::vector<std::size_t>{2});

    // K_4: lexicographic greedy picks the star at vertex 0.
    Graph k4 = complete(4);
    SpanningForest fk(k4);
    std::vector<std::size_t> expect = {*k4.edge_index(0, 1), *k4.edge_index(0, 2),
                                       *k4.edge_index(0, 3)};
    CHECK(fk.tree_edges() == expect);
}

TEST_CASE("fundamental cycles") {
    Graph k4 = complete(4);
    SpanningForest f(k4);
    std::size_t e12 = *k4.edge_index(1, 2);
    BitVector c = f.fundamental_cycle(e12);
    BitVector expect(k4.edge_count());
    expect.set(e12);
    expect.set(*k4.edge_index(0, 1));
    expect.set(*k4.edge_index(0, 2));
    CHECK(c == expect);
    CHECK_THROWS(f.fundamental_cycle(*k4.edge_index(0, 1)));

    // One non-tree edge of a cycle graph closes the whole cycle.
    Graph c5 = cycle_graph(5);
    SpanningForest f5(c5);
    REQUIRE(f5.non_tree_edges().size() == 1);
    CHECK(f5.fundamental_cycle(f5.non_tree_edges()[0]).count() == 5);

    Graph kt3 = tilde_complete(3);
    SpanningForest ft(kt3);
    REQUIRE(ft.non_tree_edges().size() == 1);
    CHECK(ft.fundamental_cycle(ft.non_tree_edges()[0]).count() == 6);
}

TEST_CASE("fundamental cycles contain exactly one non-tree edge") {
    for (const Graph& g : {complete(6), complete_bipartite(3, 4), wheel(5),
                           Graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {5, 6}})}) {
        SpanningForest f(g);
        for (std::size_t e : f.non_tree_edges()) {
            BitVector c = f.fundamental_cycle(e);
            CHECK(c.test(e));
            for (std::size_t other : f.non_tree_edges())
                if (other != e) CHECK_FALSE(c.test(other));
            // Fundamental cycles are 1-cycles: even degree at every vertex.
            CHECK(incidence(g).apply(c).none());
        }
    }
}

TEST_CASE("cycle space dimension is E - V + N") {
    for (const Graph& g : {complete(5), complete_bipartite(3, 3), wheel(6), tilde_complete(4),
                           Graph(8, {{0, 1}, {1, 2}, {0, 2}, {4, 5}, {5, 6}, {6, 7}, {4, 7}})}) {
        std::size_t dim = g.edge_count() - g.vertex_count() + g.component_count();
        SpanningForest f(g);
        CHECK(f.tree_edges().size() == g.vertex_count() - g.component_count());
        CHECK(f.non_tree_edges().size() == dim);
        BitMatrix basis = f.cycle_space_basis();
        CHECK(gf2::rank(basis) == dim);
        CHECK(gf2::kernel_basis(incidence(g)).row_count() == dim);
    }
}

TEST_CASE("part swap of tilde_complete fixes the 6-cycle") {
    Graph g = tilde_complete(3);
    Involution t = Involution::part_swap(g, 3);
    BitVector all(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) all.set(e);
    CHECK(t.apply_edges(all) == all);
    for (std::size_t v = 0; v < 6; ++v) CHECK(t(t(v)) == v);
}

TEST_CASE("part swap maps the hexagon 1 2' 3 1' 4 3' to 1' 2 3' 1 4' 3") {
    // 0-based on tilde_complete(4): primes are indices 4..7.
    Graph g = tilde_complete(4);
    Involution t = Involution::part_swap(g, 4);
    BitVector walk = closed_walk_edges(g, {0, 5, 2, 4, 3, 6});
    BitVector image = closed_walk_edges(g, {4, 1, 6, 0, 7, 2});
    CHECK(t.apply_edges(walk) == image);
}

TEST_CASE("involution validation") {
    Graph p = path_graph(3);
    CHECK_THROWS(Involution(p, {1, 2, 0}));        // not self-inverse
    CHECK_NOTHROW(Involution(p, {2, 1, 0}));       // reverse the path
    Graph g(3, {{0, 1}});
    CHECK_THROWS(Involution(g, {0, 2, 1}));        // sends edge 01 to non-edge 02
    CHECK_NOTHROW(Involution(g, {0, 1, 2}));
}

TEST_CASE("identity involution leaves edge sets unchanged") {
    Graph g = complete(4);
    std::vector<std::size_t> id(4);
    for (std::size_t v = 0; v < 4; ++v) id[v] = v;
    Involution t(g, id);
    BitVector c(g.edge_count());
    c.set(0);
    c.set(3);
    CHECK(t.apply_edges(c) == c);
}

TEST_CASE("edge list round trip") {
    std::istringstream in("# sample\nV 4\n0 1\n1 2  # chord\n\n2 3\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(1, 2));

    std::istringstream bad("0 1\n");
    CHECK_THROWS(read_edge_list(bad));
    std::istringstream empty("");
    CHECK_THROWS(read_edge_list(empty));
}
