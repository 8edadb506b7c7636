#ifndef MOD2_HYPERGRAPH_HPP
#define MOD2_HYPERGRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "mod2/bitvec.hpp"
#include "mod2/graph.hpp"

namespace mod2 {

/// A 3-uniform hypergraph: a vertex range and a set of 3-element faces,
/// stored sorted. Face sets are BitVectors over the face indices.
struct Hypergraph2 {
    std::size_t vertices = 0;
    std::vector<std::array<std::size_t, 3>> faces;  // each ascending; list sorted

    /// All 3-subsets of the vertex range.
    static Hypergraph2 complete(std::size_t n);

    bool is_complete() const;
    std::optional<std::size_t> face_index(std::array<std::size_t, 3> f) const;
    /// Graph on the same vertices whose edges are the 2-subsets of faces.
    Graph skeleton() const;
};

/// Format: first line `V <count>`, one `a b c` face per line, 0-based.
Hypergraph2 read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph2& h);

/// True iff every vertex pair lies in an even number of faces of c.
bool is_2cycle(const Hypergraph2& h, const BitVector& c);

/// The four faces of the tetrahedron on the given vertices, all of which
/// must exist in the hypergraph.
BitVector tetrahedron(const Hypergraph2& h, std::array<std::size_t, 4> verts);

/// Writes a 2-cycle on the complete hypergraph as a sum of tetrahedra
/// through the top vertex n-1: one per face avoiding the top. The returned
/// tetrahedra re-sum to c exactly.
std::vector<std::array<std::size_t, 4>> decompose_tetrahedra(const Hypergraph2& h,
                                                             const BitVector& c);

/// The (d+1)-subsets of a (d+2)-subset, ascending.
std::vector<std::vector<std::size_t>> simplex_boundary(const std::vector<std::size_t>& s);

/// True iff every d-subset of [n] lies in an even number of the given
/// (d+1)-subsets.
bool is_d_cycle(std::size_t n, std::size_t d, const std::vector<std::vector<std::size_t>>& chain);

/// Avoid-the-top reduction in any dimension: the (d+2)-sets s + {n-1} over
/// members s avoiding n-1; their boundaries sum to the input chain.
std::vector<std::vector<std::size_t>> d_cycle_decompose(
    std::size_t n, std::size_t d, const std::vector<std::vector<std::size_t>>& chain);

/// Writes a linear relation among tetrahedra (a set of 4-subsets covering
/// every 3-subset evenly) as a sum of boundaries of 5-subsets.
std::vector<std::array<std::size_t, 5>> decompose_tetrahedron_relation(
    std::size_t n, const std::vector<std::array<std::size_t, 4>>& relation);

/// Dimension of the 2-cycle space of the complete hypergraph on [n]: the
/// rank of the tetrahedra-through-the-top basis, certified against the
/// pair-incidence kernel. Equals C(n-1, 3).
std::size_t two_cycle_dimension(std::size_t n);

/// The grid [n]^ell with mixed-radix cell indexing (last coordinate fastest).
struct RookGrid {
    std::size_t n = 0;
    std::size_t ell = 0;

    RookGrid(std::size_t n_, std::size_t ell_);

    std::size_t cell_count() const;
    std::size_t index(const std::vector<std::size_t>& coords) const;
    std::vector<std::size_t> coords(std::size_t idx) const;
    /// Number of axis-parallel lines, ell * n^(ell-1).
    std::size_t line_count() const;
    /// The n cells obtained by varying one coordinate of the given cell.
    std::vector<std::size_t> line_through(std::size_t axis, std::size_t cell) const;
};

/// True iff every line meets the cell set an even number of times.
bool is_rook_cycle(const RookGrid& grid, const BitVector& s);

/// A product of 2-element coordinate sets; the basic rook cycle.
struct Parallelepiped {
    std::vector<std::pair<std::size_t, std::size_t>> sides;  // each first < second

    BitVector cells(const RookGrid& grid) const;
};

/// P(a) = {top, a_0} x ... x {top, a_(ell-1)} for a cell a avoiding the top
/// level n-1.
Parallelepiped corner_parallelepiped(const RookGrid& grid, const std::vector<std::size_t>& a);

/// Writes a rook cycle as a sum of corner parallelepipeds: one P(a) per cell
/// a of s with every coordinate below n-1; re-summation is verified.
std::vector<std::vector<std::size_t>> decompose_parallelepipeds(const RookGrid& grid,
                                                                const BitVector& s);

/// Dimension of the rook-cycle space, certified by the line-incidence
/// kernel. Equals (n-1)^ell.
std::size_t rook_cycle_dimension(const RookGrid& grid);

/// One application of the three-term side relation {a,b} = {a,top} + {top,b}
/// at a coordinate of one member.
struct PipedSplit {
    std::size_t position = 0;
    Parallelepiped before;
    std::array<std::size_t, 3> triple{};  // {a, b, top}
};

/// Reduces a vanishing sum of parallelepipeds to the empty relation by
/// repeated side splits toward the top level; the returned steps certify the
/// reduction (each preserves the cell-set sum, and the members remaining at
/// the end cancel in identical pairs).
std::vector<PipedSplit> decompose_parallelepiped_relation(const RookGrid& grid,
                                                          std::vector<Parallelepiped> members);

/// Component count, 1-cycles modulo face boundaries, and 2-cycles of a
/// hypergraph, with the Euler identity b0 - b1 + b2 = V - E + F checked.
struct BettiProfile {
    std::size_t b0 = 0, b1 = 0, b2 = 0;
    std::size_t vertices = 0, edges = 0, faces = 0;
    bool euler_ok = false;
};
BettiProfile betti_profile(const Hypergraph2& h);

/// The 7-vertex triangulation of the torus: faces {i, i+1, i+3} and
/// {i, i+2, i+3} modulo 7.
Hypergraph2 seven_vertex_torus();

/// Search result: two connected hypergraphs with equal vertex, edge and face
/// counts but different numbers of 2-cycles.
struct WitnessPair {
    bool found = false;
    Hypergraph2 first, second;
    BettiProfile first_profile, second_profile;
};
WitnessPair find_equal_profile_witness(std::size_t max_vertices, std::size_t samples = 20000,
                                       std::uint64_t seed = 1);

} // namespace mod2

#endif
