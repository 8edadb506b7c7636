#ifndef MOD2_PRODUCT_HPP
#define MOD2_PRODUCT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mod2/bitvec.hpp"
#include "mod2/graph.hpp"

namespace mod2 {

/// Vertex of a product graph: an ordered pair of factor vertices.
struct PairVertex {
    std::size_t x = 0;
    std::size_t y = 0;
    bool operator==(const PairVertex&) const = default;
};

/// The product of two graphs: vertices are ordered pairs (a, b); moving one
/// coordinate along a factor edge bc gives the edges (a, bc) and (bc, a), and
/// there are no other edges. The deleted square keeps only pairs of distinct
/// vertices (and therefore only the moves whose endpoints stay off the
/// diagonal). Immutable after construction.
class ProductGraph {
public:
    static ProductGraph product(Graph k, Graph l);
    static ProductGraph square(Graph k);
    static ProductGraph deleted_square(Graph k);

    const Graph& graph() const { return graph_; }
    const Graph& left_factor() const { return left_; }
    const Graph& right_factor() const { return right_; }
    bool is_deleted() const { return deleted_; }

    bool has_pair(std::size_t x, std::size_t y) const;
    /// Dense vertex id of the pair (x, y); throws if the pair is filtered out.
    std::size_t vertex(std::size_t x, std::size_t y) const;
    PairVertex pair(std::size_t v) const { return pairs_.at(v); }

    /// A product edge either moves the right coordinate along an edge of the
    /// right factor, written (a, bc), or moves the left coordinate, (bc, a).
    struct EdgeLabel {
        bool left_move = false;   // true for (bc, a)
        std::size_t fixed = 0;    // the coordinate that stays put
        std::size_t moving = 0;   // edge index within the moving factor
    };
    EdgeLabel edge_label(std::size_t e) const;
    /// Edge index for a label, or nullopt when an endpoint is filtered out.
    std::optional<std::size_t> move_edge(bool left_move, std::size_t fixed,
                                         std::size_t moving) const;

private:
    ProductGraph() = default;
    static ProductGraph build(Graph k, Graph l, bool deleted);

    Graph left_;
    Graph right_;
    bool deleted_ = false;
    std::vector<std::size_t> index_;  // x * right V + y -> dense id or npos
    std::vector<PairVertex> pairs_;
    Graph graph_;
};

/// The four product-graph edges (a,τ),(b,τ),(σ,u),(σ,v) bounding the cell
/// σ□τ for σ = ab in the left factor and τ = uv in the right factor.
std::array<std::size_t, 4> cell_boundary_edges(const ProductGraph& pg,
                                               std::size_t sigma, std::size_t tau);

/// The boundary σ□τ = (a,u)(b,u)(b,v)(a,v) as an edge set of the product.
BitVector boundary_cycle(const ProductGraph& pg, std::size_t sigma, std::size_t tau);

/// a × C: the edges (a, σ) over σ in the right-factor edge set c. Throws when
/// a required pair is filtered out (deleted square with a on the cycle).
BitVector left_cycle(const ProductGraph& pg, std::size_t a, const BitVector& c);
/// C × a: the edges (σ, a) over σ in the left-factor edge set c.
BitVector right_cycle(const ProductGraph& pg, const BitVector& c, std::size_t a);

/// diag C = (v1,v1)(v1,v2)(v2,v2)...(vk,vk)(vk,v1) for a simple cycle given
/// as its vertex sequence; requires equal factors. Traversing the reversed
/// sequence yields the factor-swap image.
BitVector diag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq);
/// Off-diagonal cycle (v1,v2)(v1,v3)(v2,v3)...(vk,v1)(vk,v2), indices mod k.
BitVector offdiag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq);
/// Antidiagonal cycle (v1,v1)(v2,v1)(v2,vk)(v3,vk)...(vk,v2)(v1,v2).
BitVector antidiag_cycle(const ProductGraph& pg, const std::vector<std::size_t>& seq);

/// The 12-edge triodic cycle of the star with leaves a, b, c and center d:
/// (a,c)(a,d)(a,b)(d,b)(c,b)(c,d) followed by its factor-swap mirror. The
/// result is checked to be a closed 12-edge simple cycle.
BitVector triodic_cycle(const ProductGraph& pg, std::size_t a, std::size_t b,
                        std::size_t c, std::size_t d);

/// (C_x, C_y): factor edges covered by c an odd number of times. Additive,
/// and both components are 1-cycles whenever c is.
std::pair<BitVector, BitVector> projections(const ProductGraph& pg, const BitVector& c);

/// The coordinate swap (x, y) -> (y, x); requires equal factors.
Involution swap_involution(const ProductGraph& pg);

/// Cells are ordered pairs (σ, τ) of edge indices of one base graph: all E²
/// pairs for the square complex, in row-major order σ·E + τ, and only the
/// vertex-disjoint pairs for the deleted complex, densely re-indexed in the
/// same order. Immutable after construction.
class CellComplex {
public:
    CellComplex() = default;  // empty complex over the empty graph
    static CellComplex square(Graph base);
    static CellComplex deleted(Graph base);

    const Graph& base() const { return base_; }
    bool is_deleted() const { return deleted_; }
    std::size_t cell_count() const { return cells_.size(); }

    std::pair<std::size_t, std::size_t> cell(std::size_t idx) const { return cells_.at(idx); }
    std::optional<std::size_t> cell_index(std::size_t sigma, std::size_t tau) const;

    /// Row section {τ : (σ, τ) ∈ c} as a base edge set.
    BitVector row_section(const BitVector& c, std::size_t sigma) const;
    /// Column section {σ : (σ, τ) ∈ c} as a base edge set.
    BitVector column_section(const BitVector& c, std::size_t tau) const;

    /// The factor swap (σ, τ) -> (τ, σ) on cells.
    std::size_t swap_cell(std::size_t idx) const;
    BitVector swap_cells(const BitVector& c) const;

    /// Distinct cells sharing a common edge of the product graph: equal in
    /// one coordinate, sharing an endpoint in the other.
    bool cells_adjacent(std::size_t i, std::size_t j) const;

private:
    static CellComplex build(Graph base, bool deleted);

    Graph base_;
    bool deleted_ = false;
    std::vector<std::pair<std::size_t, std::size_t>> cells_;
    std::vector<std::size_t> index_;  // sigma * E + tau -> cell id or npos
};

/// Cell bijection f(σ₁σ₂', τ₁τ₂') = (σ₁τ₁', σ₂τ₂') from the deleted complex
/// of the complete bipartite graph on parts of size n onto the full square
/// complex of the same graph minus a perfect matching. Respects adjacency
/// and transports the factor swap of the source to the map applying the part
/// swap to both coordinates of a target cell.
struct KnnTildeCorrespondence {
    std::size_t n = 0;
    CellComplex source;              // deleted complex of the bipartite graph
    CellComplex target;              // square complex of the matching-free graph
    std::vector<std::size_t> forward;   // source cell -> target cell
    std::vector<std::size_t> backward;  // inverse

    BitVector apply(const BitVector& source_cells) const;
    BitVector apply_inverse(const BitVector& target_cells) const;
    /// Image of a target cell under the part swap applied to both coordinates.
    std::size_t part_swap_target_cell(std::size_t idx) const;

private:
    friend KnnTildeCorrespondence knn_tilde_correspondence(std::size_t n);
    std::vector<std::size_t> edge_swap_;  // part-swap edge images in the target base
};

KnnTildeCorrespondence knn_tilde_correspondence(std::size_t n);  // n >= 3

} // namespace mod2

#endif
