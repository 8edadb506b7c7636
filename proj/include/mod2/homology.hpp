#ifndef MOD2_HOMOLOGY_HPP
#define MOD2_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mod2/bitvec.hpp"
#include "mod2/cycles.hpp"
#include "mod2/gf2.hpp"
#include "mod2/graph.hpp"
#include "mod2/product.hpp"

namespace mod2 {

/// The span of the boundary 1-cycles σ□τ of a cell complex inside its
/// product graph: all ordered edge pairs over the full square, only the
/// vertex-disjoint pairs over the deleted square. Owns both spaces.
class BoundarySpace {
public:
    static BoundarySpace square(const Graph& k);
    static BoundarySpace deleted_square(const Graph& k);

    const ProductGraph& ambient() const { return pg_; }
    const CellComplex& complex() const { return cc_; }
    /// Row i is the boundary of cell i.
    const BitMatrix& generators() const { return gens_; }

    std::size_t rank() const;
    bool contains(const BitVector& c) const;
    /// Cell coefficients whose boundaries sum to c, or nullopt.
    std::optional<BitVector> certificate(const BitVector& c) const;

private:
    BoundarySpace(ProductGraph pg, CellComplex cc);

    ProductGraph pg_;
    CellComplex cc_;
    BitMatrix gens_;
    gf2::Echelon ech_;  // of gens_, with ops
};

/// 1-cycles of the ambient product modulo boundaries, with a canonical
/// transversal: fundamental cycles of the ambient forest that extend the
/// boundary row space, taken in edge-index order.
struct HomologySummary {
    std::size_t cycle_dim = 0;
    std::size_t boundary_rank = 0;
    std::size_t dim = 0;  // cycle_dim - boundary_rank
    BitMatrix transversal;
};
HomologySummary h1_mod_boundaries(const BoundarySpace& bs);

/// Indices of cells whose boundaries sum to c, or nullopt when c is not a
/// boundary sum. c must be a 1-cycle of the ambient product.
std::optional<std::vector<std::size_t>> is_sum_of_boundaries(const BoundarySpace& bs,
                                                             const BitVector& c);

/// Whether c + c' is a sum of boundaries; both must be 1-cycles.
bool homologous(const BoundarySpace& bs, const BitVector& c, const BitVector& d);

/// c ~ c1 × a + a × c2 with unique 1-cycles c1, c2 in the base graph
/// (c1 = C_x and c2 = C_y); certificate lists cells witnessing the relation.
/// Requires the full square of a connected base.
struct KunnethReduction {
    BitVector c1;
    BitVector c2;
    std::vector<std::size_t> certificate;
};
KunnethReduction kunneth_reduce(const BoundarySpace& bs, const BitVector& c, std::size_t a);

/// Swap-fixed 1-cycles and their quotient by symmetrized boundaries
/// (generators σ□τ + τ□σ).
struct SymmetricHomology {
    std::size_t symmetric_cycle_dim = 0;
    BitMatrix symmetric_cycle_basis;
    // Span of the cell-wise symmetrizations B + swap(B).  Always contained in
    // the symmetric part of the boundary span; the containment can be strict
    // (diagonal cells sigma x sigma symmetrize to zero, and a swap-invariant
    // dependency among the generators admits symmetric "half" sums).
    std::size_t symmetrized_boundary_rank = 0;
    // Rank of (symmetric cycles) intersected with (boundary span).
    std::size_t symmetric_boundary_rank = 0;
    std::size_t dim = 0;  // symmetric_cycle_dim - symmetric_boundary_rank
};
SymmetricHomology symmetric_h1(const BoundarySpace& bs);

/// Generic span query for experiments mixing named cycles and boundaries:
/// coefficients over the generator rows, or nullopt.
inline std::optional<BitVector> span_membership(const BitMatrix& generators,
                                                const BitVector& target) {
    return gf2::solve_in_span(generators, target);
}

} // namespace mod2

#endif
