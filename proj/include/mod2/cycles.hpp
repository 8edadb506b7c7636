#ifndef MOD2_CYCLES_HPP
#define MOD2_CYCLES_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mod2/bitvec.hpp"
#include "mod2/gf2.hpp"
#include "mod2/graph.hpp"

namespace mod2 {

/// True iff every vertex meets an even number of edges of c.
bool is_one_cycle(const Graph& g, const BitVector& c);

/// True iff c is a single simple cycle: nonempty, connected, all support
/// vertices of degree 2.
bool is_simple_cycle(const Graph& g, const BitVector& c);

/// Vertex sequence v0, v1, ..., v_{k-1} of a simple cycle, starting at the
/// lowest support vertex and moving through its lowest incident cycle edge.
std::vector<std::size_t> cycle_vertex_sequence(const Graph& g, const BitVector& c);

/// Edge indices of chords of a simple cycle: graph edges joining two
/// non-consecutive cycle vertices.
std::vector<std::size_t> chords(const Graph& g, const BitVector& c);

/// Cycle space presented by the fundamental cycles of a spanning forest.
/// Row r of basis is the fundamental cycle of forest.non_tree_edges()[r];
/// the number of 1-cycles is 2^dimension().
struct CycleSpace {
    explicit CycleSpace(const Graph& g) : forest(g), basis(forest.cycle_space_basis()) {}

    std::size_t dimension() const { return basis.row_count(); }

    SpanningForest forest;
    BitMatrix basis;
};

/// Coefficients of the 1-cycle c over the fundamental basis: bit r is set iff
/// c contains non-tree edge r. Recombination is checked to reproduce c.
BitVector coordinates(const CycleSpace& cs, const BitVector& c);

/// Splits a 1-cycle into edge-disjoint simple cycles by repeated walk
/// extraction; their disjoint union is c.
std::vector<BitVector> decompose_simple(const Graph& g, BitVector c);

/// Writes a 1-cycle as a mod-2 sum of chordless simple cycles, splitting
/// along the lowest-indexed chord until none remain.
std::vector<BitVector> decompose_chordless(const Graph& g, const BitVector& c);

/// On the complete graph: the triangles {i, j, top} over all edges ij of c
/// avoiding the top vertex; their sum is c.
std::vector<BitVector> decompose_triangles_complete(const Graph& g, const BitVector& c);

/// On complete_bipartite(n, n): the 4-cycles a b' top top' over all edges ab'
/// of c avoiding both top vertices; their sum is c.
std::vector<BitVector> decompose_squares_bipartite(const Graph& g, const BitVector& c);

/// The closed walk 1 2' 3 1' i j' on tilde_complete(n) with cancelling edges
/// removed; i, j are 1-based, both > 1, i != j. A hexagon in general, a
/// quadrilateral when i = 3 or j = 2.
BitVector tilde_cycle(const Graph& kt, std::size_t n, std::size_t i, std::size_t j);

/// Base of the cycle space of tilde_complete(n) made of the walks above, one
/// per labelled edge ij' with i, j > 1 and (i, j) != (3, 2).
struct TildeBase {
    Graph graph;
    std::vector<std::pair<std::size_t, std::size_t>> labels; // 1-based (i, j)
    BitMatrix base;                                          // row r is the cycle for labels[r]
};
TildeBase tilde_base(std::size_t n);

/// Base of the same space adapted to the part swap t: row 0 is t-fixed and
/// the remaining rows come in consecutive pairs (B, tB).
struct TildeSymmetricBase {
    Graph graph;
    BitMatrix base;
};
TildeSymmetricBase tilde_symmetric_base(std::size_t n);

/// Basis of the t-fixed subspace {C : tC = C} of the cycle space.
BitMatrix symmetric_cycle_space(const Graph& g, const Involution& t);

/// Decomposition of a 1-cycle of tilde_complete(n), n >= 4, into cycles of
/// length 4 only: chordless decomposition, then each hexagon is split into
/// three quadrilaterals through a spare vertex of the opposite part.
std::vector<BitVector> decompose_quadrilaterals_tilde(const Graph& kt, std::size_t n,
                                                      const BitVector& c);

/// Graph with a head vertex chosen for every edge.
struct OrientedGraph {
    OrientedGraph(const Graph& g, std::vector<std::size_t> head_of_edge);

    /// Heads at the larger endpoint everywhere.
    static OrientedGraph default_orientation(const Graph& g);

    const Graph& graph() const { return *g_; }
    std::size_t head(std::size_t e) const { return head_.at(e); }
    std::size_t tail(std::size_t e) const { return g_->opposite(e, head_.at(e)); }

private:
    const Graph* g_;
    std::vector<std::size_t> head_;
};

/// Integer weights on the edges of an oriented graph.
struct IntegerChain {
    explicit IntegerChain(const Graph& g) : weight(g.edge_count(), mpz_class(0)) {}
    std::vector<mpz_class> weight;

    IntegerChain& operator+=(const IntegerChain& o);
    bool operator==(const IntegerChain& o) const { return weight == o.weight; }
};

/// Kirchhoff rule: at every vertex, incoming weights sum to outgoing weights.
bool is_integer_cycle(const OrientedGraph& og, const IntegerChain& z);

/// The unique integer 1-cycle of a connected graph that agrees with the given
/// weights on the non-tree edges (weights absent from the map default to 0).
IntegerChain integer_extend(const OrientedGraph& og, const SpanningForest& f,
                            const std::map<std::size_t, mpz_class>& cotree_weights);

/// Additive bijection between the integer cycles of two orientations of one
/// graph: negates the weight of every edge whose head differs.
IntegerChain reorient(const OrientedGraph& from, const OrientedGraph& to, const IntegerChain& z);

/// Signs on edges; a set bit in `minus` means the edge carries -.
struct SignAssignment {
    explicit SignAssignment(const Graph& g) : minus(g.edge_count()) {}
    BitVector minus;

    int sign(std::size_t e) const { return minus.test(e) ? -1 : +1; }
    bool operator==(const SignAssignment& o) const { return minus == o.minus; }
};

/// Inverts the sign of every edge containing v.
SignAssignment flip_vertex(const Graph& g, SignAssignment s, std::size_t v);

/// Canonical representative of s under vertex flips on a connected graph: the
/// unique assignment in the orbit with + on every tree edge, obtained by a
/// flip sweep rooted at vertex 0. Two assignments are flip-equivalent iff
/// their canonical forms agree; there are 2^(E-V+1) classes.
SignAssignment sign_canonical_form(const Graph& g, const SpanningForest& f, SignAssignment s);

} // namespace mod2

#endif
