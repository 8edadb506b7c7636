#ifndef MOD2_CELLULAR_HPP
#define MOD2_CELLULAR_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mod2/bitvec.hpp"
#include "mod2/gf2.hpp"
#include "mod2/graph.hpp"
#include "mod2/homology.hpp"
#include "mod2/product.hpp"

namespace mod2 {

/// True iff every row and every column section of the cell set is a 1-cycle
/// of the base graph.
bool is_cellular_2cycle(const CellComplex& cc, const BitVector& cells);

/// Sum of the four-edge cell boundaries, in the edge space of pg, which must
/// match the complex in base graph and deletedness. Zero exactly when the
/// cell set is a 2-cycle.
BitVector boundary_sum(const ProductGraph& pg, const CellComplex& cc, const BitVector& cells);

/// The torus {(σ, τ) : σ ∈ c1, τ ∈ c2}. Throws when a pair is missing from
/// the complex, so deleted complexes require vertex-disjoint factors. The
/// torus of two 1-cycles is always a 2-cycle.
BitVector torus(const CellComplex& cc, const BitVector& c1, const BitVector& c2);

/// The 2-cycles of the full square complex of a graph, presented by the
/// torus basis: products of fundamental cycles of the non-tree edges.
struct TwoCycleSpace {
    CellComplex complex;                // full square complex
    std::vector<std::size_t> non_tree;  // the q non-tree edges, in index order
    BitMatrix fundamental;              // row r: fundamental cycle of non_tree[r]
    BitMatrix basis;                    // q² rows; row i·q+j is the torus of rows i, j

    std::size_t dimension() const { return basis.row_count(); }
};
TwoCycleSpace two_cycle_space(const Graph& k);

/// Coordinates of a 2-cycle over the torus basis: bit i·q+j is set iff the
/// cell (non_tree[i], non_tree[j]) lies in the cycle. Recombination is
/// verified to reproduce the input exactly.
BitVector decompose_into_tori(const TwoCycleSpace& space, const BitVector& cells);

/// Every simple cycle of g as an edge set, each exactly once. Throws when
/// more than max_cycles exist.
std::vector<BitVector> simple_cycles(const Graph& g, std::size_t max_cycles = 100000);

/// One row per ordered pair of vertex-disjoint simple cycles of the base:
/// their torus in the given deleted complex.
BitMatrix vertex_disjoint_tori(const CellComplex& deleted_cc, std::size_t max_cycles = 100000);

/// Rank comparison between the 2-cycle space of the deleted complex of g and
/// the span of its vertex-disjoint tori. A codimension of two or more means
/// no single additional generator could close the gap.
struct TorusSpanReport {
    std::size_t two_cycle_dim = 0;
    std::size_t span_rank = 0;
    std::size_t codimension = 0;
    bool beyond_single_class = false;
};
TorusSpanReport vertex_disjoint_span_report(const Graph& g, std::size_t max_cycles = 100000);

/// Two disjoint complete graphs on n vertices joined by a single edge
/// between vertex 0 and vertex n.
Graph bridged_complete_pair(std::size_t n);

/// 2-cycles of a complex together with the swap-fixed subspace.
struct SymmetricTwoCycles {
    std::size_t two_cycle_dim = 0;
    BitMatrix two_cycle_basis;  // rows over the cells of the complex
    std::size_t symmetric_dim = 0;
    BitMatrix symmetric_basis;
};
SymmetricTwoCycles symmetric_two_cycles(const BoundarySpace& bs);

/// Span of the symmetrized torus generators f_i × f_j + f_j × f_i, i < j,
/// over the torus-basis fundamental cycles; q(q−1)/2 independent rows.
BitMatrix symmetrized_torus_span(const TwoCycleSpace& space);

/// Writes a swap-symmetric 2-cycle of the deleted complex as a sum of
/// symmetrized tori of the full complex over the same base graph: returns
/// the unordered non-tree edge pairs {σ, τ} of the summands. The sum is
/// verified to reproduce the input.
std::vector<std::pair<std::size_t, std::size_t>> symmetrized_torus_decomposition(
    const TwoCycleSpace& space, const CellComplex& deleted_cc, const BitVector& cells);

/// Re-indexes a cell set between two complexes over the same base graph;
/// throws when a source cell is absent from the target.
BitVector embed_cells(const CellComplex& from, const CellComplex& to, const BitVector& cells);

/// Generator survey for the symmetric 2-cycles of the deleted complex of the
/// complete bipartite graph on parts of size n: symmetrized tori of
/// vertex-disjoint quadrilateral pairs plus the deleted products of all
/// 3-by-3 complete bipartite subgraphs. Reports whether they span.
struct KnnSymmetricReport {
    std::size_t n = 0;
    std::size_t symmetric_dim = 0;
    std::size_t torus_generators = 0;
    std::size_t subgraph_generators = 0;
    std::size_t rank = 0;
    std::size_t redundancy = 0;  // generator count minus rank
    bool spans = false;
};
KnnSymmetricReport knn_symmetric_generators(std::size_t n);  // n in {3, 4, 5}

} // namespace mod2

#endif
