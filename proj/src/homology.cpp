#include "mod2/homology.hpp"

#include <stdexcept>

namespace mod2 {

namespace {

void require_one_cycle(const ProductGraph& pg, const BitVector& c, const char* what) {
    if (c.size() != pg.graph().edge_count())
        throw std::invalid_argument(std::string(what) + ": edge set has wrong dimension");
    if (!is_one_cycle(pg.graph(), c))
        throw std::invalid_argument(std::string(what) + ": edge set is not a 1-cycle");
}

} // namespace

BoundarySpace::BoundarySpace(ProductGraph pg, CellComplex cc)
    : pg_(std::move(pg)), cc_(std::move(cc)) {
    gens_ = BitMatrix(pg_.graph().edge_count());
    for (std::size_t idx = 0; idx < cc_.cell_count(); ++idx) {
        auto [sigma, tau] = cc_.cell(idx);
        gens_.add_row(boundary_cycle(pg_, sigma, tau));
    }
    ech_ = gf2::rref(gens_, /*track_ops=*/true);
}

BoundarySpace BoundarySpace::square(const Graph& k) {
    return BoundarySpace(ProductGraph::square(k), CellComplex::square(k));
}

BoundarySpace BoundarySpace::deleted_square(const Graph& k) {
    return BoundarySpace(ProductGraph::deleted_square(k), CellComplex::deleted(k));
}

std::size_t BoundarySpace::rank() const { return ech_.rank; }

bool BoundarySpace::contains(const BitVector& c) const {
    return certificate(c).has_value();
}

std::optional<BitVector> BoundarySpace::certificate(const BitVector& c) const {
    return gf2::solve_with(ech_, c);
}

HomologySummary h1_mod_boundaries(const BoundarySpace& bs) {
    HomologySummary out;
    CycleSpace space(bs.ambient().graph());
    out.cycle_dim = space.dimension();
    out.boundary_rank = bs.rank();
    out.dim = out.cycle_dim - out.boundary_rank;

    gf2::Span span(bs.ambient().graph().edge_count());
    for (std::size_t r = 0; r < bs.generators().row_count(); ++r)
        span.add(bs.generators().row(r));
    out.transversal = BitMatrix(bs.ambient().graph().edge_count());
    for (std::size_t r = 0; r < space.basis.row_count(); ++r)
        if (span.add(space.basis.row(r))) out.transversal.add_row(space.basis.row(r));
    if (out.transversal.row_count() != out.dim)
        throw std::logic_error("h1_mod_boundaries: transversal size mismatch");
    return out;
}

std::optional<std::vector<std::size_t>> is_sum_of_boundaries(const BoundarySpace& bs,
                                                             const BitVector& c) {
    require_one_cycle(bs.ambient(), c, "is_sum_of_boundaries");
    auto coeffs = bs.certificate(c);
    if (!coeffs) return std::nullopt;
    std::vector<std::size_t> cells;
    for (std::size_t idx : coeffs->set_bits()) cells.push_back(idx);
    return cells;
}

bool homologous(const BoundarySpace& bs, const BitVector& c, const BitVector& d) {
    require_one_cycle(bs.ambient(), c, "homologous");
    require_one_cycle(bs.ambient(), d, "homologous");
    return bs.contains(c ^ d);
}

KunnethReduction kunneth_reduce(const BoundarySpace& bs, const BitVector& c, std::size_t a) {
    const ProductGraph& pg = bs.ambient();
    if (pg.is_deleted() || !(pg.left_factor() == pg.right_factor()))
        throw std::invalid_argument("kunneth_reduce: ambient must be a full square");
    if (pg.left_factor().component_count() != 1)
        throw std::invalid_argument("kunneth_reduce: base graph must be connected");
    require_one_cycle(pg, c, "kunneth_reduce");
    if (a >= pg.left_factor().vertex_count())
        throw std::invalid_argument("kunneth_reduce: vertex out of range");

    KunnethReduction out;
    auto [cx, cy] = projections(pg, c);
    out.c1 = cx;
    out.c2 = cy;
    BitVector sum = c ^ right_cycle(pg, cx, a) ^ left_cycle(pg, a, cy);
    auto cells = is_sum_of_boundaries(bs, sum);
    if (!cells)
        throw std::logic_error("kunneth_reduce: projections failed to reduce the cycle");
    out.certificate = std::move(*cells);
    return out;
}

SymmetricHomology symmetric_h1(const BoundarySpace& bs) {
    const ProductGraph& pg = bs.ambient();
    Involution swap = swap_involution(pg);

    SymmetricHomology out;
    CycleSpace space(pg.graph());
    out.symmetric_cycle_basis = gf2::fixed_subspace(
        space.basis, [&](const BitVector& v) { return swap.apply_edges(v); });
    out.symmetric_cycle_dim = out.symmetric_cycle_basis.row_count();

    gf2::Span symmetrized(pg.graph().edge_count());
    for (std::size_t idx = 0; idx < bs.complex().cell_count(); ++idx)
        symmetrized.add(bs.generators().row(idx) ^
                        bs.generators().row(bs.complex().swap_cell(idx)));
    out.symmetrized_boundary_rank = symmetrized.rank();

    // dim(A cap B) = dim A + dim B - dim(A + B) with A the symmetric cycles
    // and B the boundary span.
    gf2::Span joint(pg.graph().edge_count());
    for (std::size_t r = 0; r < out.symmetric_cycle_basis.row_count(); ++r)
        joint.add(out.symmetric_cycle_basis.row(r));
    for (std::size_t r = 0; r < bs.generators().row_count(); ++r)
        joint.add(bs.generators().row(r));
    out.symmetric_boundary_rank = out.symmetric_cycle_dim + bs.rank() - joint.rank();
    out.dim = out.symmetric_cycle_dim - out.symmetric_boundary_rank;
    return out;
}

} // namespace mod2
