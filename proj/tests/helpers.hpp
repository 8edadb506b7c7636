#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "mod2/graph.hpp"

namespace testutil {

/// Edge set of a closed walk given by its vertex sequence; repeated edges
/// cancel mod 2. Throws if a step is not an edge.
inline mod2::BitVector closed_walk(const mod2::Graph& g, const std::vector<std::size_t>& verts) {
    mod2::BitVector c(g.edge_count());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto idx = g.edge_index(verts[i], verts[(i + 1) % verts.size()]);
        if (!idx) throw std::invalid_argument("closed_walk: not an edge");
        c.flip(*idx);
    }
    return c;
}

/// Random element of the cycle space: random coefficients over a basis.
inline mod2::BitVector random_cycle(const mod2::BitMatrix& basis, std::mt19937& rng) {
    mod2::BitVector coeffs(basis.row_count());
    for (std::size_t r = 0; r < basis.row_count(); ++r)
        if (rng() & 1) coeffs.set(r);
    return basis.combine(coeffs);
}

/// Mod-2 sum of a list of edge sets.
inline mod2::BitVector sum_all(std::size_t dim, const std::vector<mod2::BitVector>& parts) {
    mod2::BitVector s(dim);
    for (const auto& p : parts) s ^= p;
    return s;
}

} // namespace testutil

#endif
