#include "mod2/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mod2/cycles.hpp"
#include "mod2/gf2.hpp"

namespace mod2 {

namespace {

std::array<std::size_t, 3> sorted_face(std::array<std::size_t, 3> f) {
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) throw std::invalid_argument("face vertices must be distinct");
    return f;
}

std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

} // namespace

Hypergraph2 Hypergraph2::complete(std::size_t n) {
    Hypergraph2 h;
    h.vertices = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) h.faces.push_back({i, j, k});
    return h;
}

bool Hypergraph2::is_complete() const { return faces.size() == choose3(vertices); }

std::optional<std::size_t> Hypergraph2::face_index(std::array<std::size_t, 3> f) const {
    f = sorted_face(f);
    auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it == faces.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - faces.begin());
}

Graph Hypergraph2::skeleton() const {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& f : faces) {
        pairs.insert({f[0], f[1]});
        pairs.insert({f[0], f[2]});
        pairs.insert({f[1], f[2]});
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges(pairs.begin(), pairs.end());
    return Graph(vertices, edges);
}

Hypergraph2 read_hypergraph(std::istream& in) {
    Hypergraph2 h;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        if (!have_header) {
            std::string tag;
            if (!(row >> tag) || tag != "V" || !(row >> h.vertices))
                throw std::invalid_argument("expected header line 'V <count>'");
            have_header = true;
            continue;
        }
        std::array<std::size_t, 3> f{};
        if (!(row >> f[0] >> f[1] >> f[2])) {
            std::string rest;
            if (row.clear(), row.str(line), row >> rest)
                throw std::invalid_argument("malformed face line: " + line);
            continue;  // blank line
        }
        for (std::size_t v : f)
            if (v >= h.vertices) throw std::invalid_argument("face vertex out of range: " + line);
        h.faces.push_back(sorted_face(f));
    }
    if (!have_header) throw std::invalid_argument("expected header line 'V <count>'");
    std::sort(h.faces.begin(), h.faces.end());
    if (std::adjacent_find(h.faces.begin(), h.faces.end()) != h.faces.end())
        throw std::invalid_argument("duplicate face");
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph2& h) {
    out << "V " << h.vertices << "\n";
    for (const auto& f : h.faces) out << f[0] << " " << f[1] << " " << f[2] << "\n";
}

bool is_2cycle(const Hypergraph2& h, const BitVector& c) {
    if (c.size() != h.faces.size()) throw std::invalid_argument("face set size mismatch");
    std::vector<unsigned char> parity(h.vertices * h.vertices, 0);
    for (std::size_t i : c.set_bits()) {
        const auto& f = h.faces[i];
        parity[f[0] * h.vertices + f[1]] ^= 1;
        parity[f[0] * h.vertices + f[2]] ^= 1;
        parity[f[1] * h.vertices + f[2]] ^= 1;
    }
    return std::none_of(parity.begin(), parity.end(), [](unsigned char p) { return p != 0; });
}

BitVector tetrahedron(const Hypergraph2& h, std::array<std::size_t, 4> verts) {
    std::sort(verts.begin(), verts.end());
    BitVector out(h.faces.size());
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::array<std::size_t, 3> f{};
        std::size_t w = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != drop) f[w++] = verts[i];
        auto idx = h.face_index(f);
        if (!idx) throw std::invalid_argument("tetrahedron face missing from hypergraph");
        out.flip(*idx);
    }
    if (out.count() != 4) throw std::invalid_argument("tetrahedron vertices must be distinct");
    return out;
}

std::vector<std::array<std::size_t, 4>> decompose_tetrahedra(const Hypergraph2& h,
                                                             const BitVector& c) {
    if (!h.is_complete()) throw std::invalid_argument("decomposition needs the complete hypergraph");
    if (!is_2cycle(h, c)) throw std::invalid_argument("face set is not a 2-cycle");
    const std::size_t top = h.vertices - 1;
    std::vector<std::array<std::size_t, 4>> out;
    BitVector sum(h.faces.size());
    for (std::size_t i : c.set_bits()) {
        const auto& f = h.faces[i];
        if (f[2] == top) continue;
        out.push_back({f[0], f[1], f[2], top});
        sum ^= tetrahedron(h, out.back());
    }
    if (sum != c) throw std::logic_error("tetrahedron decomposition failed to re-sum");
    return out;
}

std::vector<std::vector<std::size_t>> simplex_boundary(const std::vector<std::size_t>& s) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
        out.push_back(std::move(face));
    }
    return out;
}

namespace {

std::vector<std::size_t> checked_subset(std::size_t n, std::size_t size,
                                        std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    if (s.size() != size) throw std::invalid_argument("member has the wrong size");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("member has repeated vertices");
    if (!s.empty() && s.back() >= n) throw std::invalid_argument("member vertex out of range");
    return s;
}

/// Parity of each (size-1)-subset covered by the chain of size-subsets.
std::map<std::vector<std::size_t>, unsigned> boundary_parity(
    std::size_t n, std::size_t size, const std::vector<std::vector<std::size_t>>& chain) {
    std::map<std::vector<std::size_t>, unsigned> parity;
    for (const auto& raw : chain)
        for (auto& face : simplex_boundary(checked_subset(n, size, raw))) parity[face] ^= 1;
    std::erase_if(parity, [](const auto& kv) { return kv.second == 0; });
    return parity;
}

} // namespace

bool is_d_cycle(std::size_t n, std::size_t d,
                const std::vector<std::vector<std::size_t>>& chain) {
    return boundary_parity(n, d + 1, chain).empty();
}

std::vector<std::vector<std::size_t>> d_cycle_decompose(
    std::size_t n, std::size_t d, const std::vector<std::vector<std::size_t>>& chain) {
    if (n == 0) throw std::invalid_argument("empty vertex range");
    if (!is_d_cycle(n, d, chain)) throw std::invalid_argument("chain is not a cycle");
    const std::size_t top = n - 1;
    std::vector<std::vector<std::size_t>> out;
    for (const auto& raw : chain) {
        auto s = checked_subset(n, d + 1, raw);
        if (s.back() == top) continue;
        s.push_back(top);
        out.push_back(std::move(s));
    }
    // The boundaries of the returned simplices must re-sum to the chain.
    std::map<std::vector<std::size_t>, unsigned> parity;
    for (const auto& s : out)
        for (auto& face : simplex_boundary(s)) parity[face] ^= 1;
    for (const auto& raw : chain) parity[checked_subset(n, d + 1, raw)] ^= 1;
    for (const auto& [face, p] : parity)
        if (p != 0) throw std::logic_error("cycle decomposition failed to re-sum");
    return out;
}

std::vector<std::array<std::size_t, 5>> decompose_tetrahedron_relation(
    std::size_t n, const std::vector<std::array<std::size_t, 4>>& relation) {
    std::vector<std::vector<std::size_t>> chain;
    for (const auto& t : relation) chain.emplace_back(t.begin(), t.end());
    std::vector<std::array<std::size_t, 5>> out;
    for (const auto& s : d_cycle_decompose(n, 3, chain)) {
        std::array<std::size_t, 5> p{};
        std::copy(s.begin(), s.end(), p.begin());
        out.push_back(p);
    }
    return out;
}

std::size_t two_cycle_dimension(std::size_t n) {
    Hypergraph2 h = Hypergraph2::complete(n);
    gf2::Span basis(h.faces.size() == 0 ? 1 : h.faces.size());
    if (n >= 4) {
        const std::size_t top = n - 1;
        for (std::size_t i = 0; i < top; ++i)
            for (std::size_t j = i + 1; j < top; ++j)
                for (std::size_t k = j + 1; k < top; ++k)
                    basis.add(tetrahedron(h, {i, j, k, top}));
    }
    // Independent certification: the kernel of the face-to-pair incidence map.
    gf2::Span incidence(n * n == 0 ? 1 : n * n);
    std::size_t incidence_rank = 0;
    for (const auto& f : h.faces) {
        BitVector row(n * n);
        row.flip(f[0] * n + f[1]);
        row.flip(f[0] * n + f[2]);
        row.flip(f[1] * n + f[2]);
        if (incidence.add(row)) ++incidence_rank;
    }
    std::size_t kernel_dim = h.faces.size() - incidence_rank;
    if (basis.rank() != kernel_dim)
        throw std::logic_error("tetrahedron basis does not span the 2-cycle kernel");
    return kernel_dim;
}

RookGrid::RookGrid(std::size_t n_, std::size_t ell_) : n(n_), ell(ell_) {
    if (n < 2 || ell < 1) throw std::invalid_argument("grid needs n >= 2 and ell >= 1");
}

std::size_t RookGrid::cell_count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < ell; ++i) c *= n;
    return c;
}

std::size_t RookGrid::index(const std::vector<std::size_t>& coords) const {
    if (coords.size() != ell) throw std::invalid_argument("coordinate count mismatch");
    std::size_t idx = 0;
    for (std::size_t c : coords) {
        if (c >= n) throw std::invalid_argument("coordinate out of range");
        idx = idx * n + c;
    }
    return idx;
}

std::vector<std::size_t> RookGrid::coords(std::size_t idx) const {
    std::vector<std::size_t> out(ell);
    for (std::size_t i = ell; i-- > 0;) {
        out[i] = idx % n;
        idx /= n;
    }
    if (idx != 0) throw std::invalid_argument("cell index out of range");
    return out;
}

std::size_t RookGrid::line_count() const { return ell * (cell_count() / n); }

std::vector<std::size_t> RookGrid::line_through(std::size_t axis, std::size_t cell) const {
    if (axis >= ell) throw std::invalid_argument("axis out of range");
    auto c = coords(cell);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        c[axis] = v;
        out.push_back(index(c));
    }
    return out;
}

namespace {

/// Lines are indexed by axis and by the mixed-radix index of the remaining
/// coordinates.
std::size_t line_index(const RookGrid& grid, std::size_t axis,
                       const std::vector<std::size_t>& coords) {
    std::size_t rep = 0;
    for (std::size_t i = 0; i < grid.ell; ++i)
        if (i != axis) rep = rep * grid.n + coords[i];
    return axis * (grid.cell_count() / grid.n) + rep;
}

BitVector line_incidence_row(const RookGrid& grid, std::size_t cell) {
    BitVector row(grid.line_count());
    auto c = grid.coords(cell);
    for (std::size_t axis = 0; axis < grid.ell; ++axis) row.flip(line_index(grid, axis, c));
    return row;
}

} // namespace

bool is_rook_cycle(const RookGrid& grid, const BitVector& s) {
    if (s.size() != grid.cell_count()) throw std::invalid_argument("cell set size mismatch");
    std::vector<unsigned char> parity(grid.line_count(), 0);
    for (std::size_t cell : s.set_bits()) {
        auto c = grid.coords(cell);
        for (std::size_t axis = 0; axis < grid.ell; ++axis) parity[line_index(grid, axis, c)] ^= 1;
    }
    return std::none_of(parity.begin(), parity.end(), [](unsigned char p) { return p != 0; });
}

BitVector Parallelepiped::cells(const RookGrid& grid) const {
    if (sides.size() != grid.ell) throw std::invalid_argument("side count mismatch");
    for (const auto& [x, y] : sides)
        if (x >= y || y >= grid.n) throw std::invalid_argument("malformed side");
    BitVector out(grid.cell_count());
    std::vector<std::size_t> c(grid.ell);
    for (std::size_t mask = 0; mask < (std::size_t{1} << grid.ell); ++mask) {
        for (std::size_t i = 0; i < grid.ell; ++i)
            c[i] = (mask >> i) & 1 ? sides[i].second : sides[i].first;
        out.flip(grid.index(c));
    }
    return out;
}

Parallelepiped corner_parallelepiped(const RookGrid& grid, const std::vector<std::size_t>& a) {
    if (a.size() != grid.ell) throw std::invalid_argument("coordinate count mismatch");
    Parallelepiped p;
    for (std::size_t ai : a) {
        if (ai + 1 >= grid.n) throw std::invalid_argument("corner coordinate must avoid the top level");
        p.sides.push_back({ai, grid.n - 1});
    }
    return p;
}

std::vector<std::vector<std::size_t>> decompose_parallelepipeds(const RookGrid& grid,
                                                                const BitVector& s) {
    if (!is_rook_cycle(grid, s)) throw std::invalid_argument("cell set is not a rook cycle");
    std::vector<std::vector<std::size_t>> out;
    BitVector sum(grid.cell_count());
    for (std::size_t cell : s.set_bits()) {
        auto c = grid.coords(cell);
        if (std::any_of(c.begin(), c.end(), [&](std::size_t v) { return v + 1 == grid.n; }))
            continue;
        sum ^= corner_parallelepiped(grid, c).cells(grid);
        out.push_back(std::move(c));
    }
    if (sum != s) throw std::logic_error("parallelepiped decomposition failed to re-sum");
    return out;
}

std::size_t rook_cycle_dimension(const RookGrid& grid) {
    gf2::Span incidence(grid.line_count());
    std::size_t rank = 0;
    for (std::size_t cell = 0; cell < grid.cell_count(); ++cell)
        if (incidence.add(line_incidence_row(grid, cell))) ++rank;
    std::size_t kernel_dim = grid.cell_count() - rank;
    // Certify against the corner-parallelepiped basis.
    gf2::Span basis(grid.cell_count());
    std::vector<std::size_t> a(grid.ell, 0);
    while (true) {
        basis.add(corner_parallelepiped(grid, a).cells(grid));
        std::size_t i = grid.ell;
        while (i-- > 0) {
            if (++a[i] + 1 < grid.n) break;
            a[i] = 0;
            if (i == 0) {
                if (basis.rank() != kernel_dim)
                    throw std::logic_error("parallelepiped basis does not span the rook kernel");
                return kernel_dim;
            }
        }
    }
}

std::vector<PipedSplit> decompose_parallelepiped_relation(const RookGrid& grid,
                                                          std::vector<Parallelepiped> members) {
    BitVector sum(grid.cell_count());
    for (const auto& m : members) sum ^= m.cells(grid);
    if (sum.any()) throw std::invalid_argument("members do not sum to zero");
    const std::size_t top = grid.n - 1;
    std::vector<PipedSplit> steps;
    for (std::size_t i = 0; i < members.size();) {
        std::size_t pos = 0;
        while (pos < grid.ell && members[i].sides[pos].second == top) ++pos;
        if (pos == grid.ell) {
            ++i;
            continue;
        }
        auto [a, b] = members[i].sides[pos];
        steps.push_back({pos, members[i], {a, b, top}});
        Parallelepiped low = members[i], high = members[i];
        low.sides[pos] = {a, top};
        high.sides[pos] = {b, top};
        members[i] = std::move(low);
        members.push_back(std::move(high));
    }
    // Everything left is a corner parallelepiped; a vanishing sum of those
    // cancels in identical pairs.
    std::sort(members.begin(), members.end(),
              [](const Parallelepiped& x, const Parallelepiped& y) { return x.sides < y.sides; });
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i + 1 < members.size() && members[i].sides == members[i + 1].sides) {
            ++i;
            continue;
        }
        throw std::logic_error("reduced relation failed to cancel in pairs");
    }
    return steps;
}

BettiProfile betti_profile(const Hypergraph2& h) {
    BettiProfile out;
    Graph sk = h.skeleton();
    out.vertices = h.vertices;
    out.edges = sk.edges().size();
    out.faces = h.faces.size();
    out.b0 = sk.component_count();
    CycleSpace cycles(sk);
    gf2::Span boundaries(out.edges == 0 ? 1 : out.edges);
    std::size_t boundary_rank = 0;
    gf2::Span pair_incidence(out.edges == 0 ? 1 : out.edges);
    std::size_t incidence_rank = 0;
    for (const auto& f : h.faces) {
        BitVector row(out.edges);
        row.flip(*sk.edge_index(f[0], f[1]));
        row.flip(*sk.edge_index(f[0], f[2]));
        row.flip(*sk.edge_index(f[1], f[2]));
        if (boundaries.add(row)) ++boundary_rank;
        if (pair_incidence.add(row)) ++incidence_rank;
    }
    out.b1 = cycles.dimension() - boundary_rank;
    out.b2 = out.faces - incidence_rank;
    long lhs = static_cast<long>(out.b0) - static_cast<long>(out.b1) + static_cast<long>(out.b2);
    long rhs = static_cast<long>(out.vertices) - static_cast<long>(out.edges) +
               static_cast<long>(out.faces);
    out.euler_ok = lhs == rhs;
    return out;
}

Hypergraph2 seven_vertex_torus() {
    Hypergraph2 h;
    h.vertices = 7;
    for (std::size_t i = 0; i < 7; ++i) {
        h.faces.push_back(sorted_face({i, (i + 1) % 7, (i + 3) % 7}));
        h.faces.push_back(sorted_face({i, (i + 2) % 7, (i + 3) % 7}));
    }
    std::sort(h.faces.begin(), h.faces.end());
    return h;
}

WitnessPair find_equal_profile_witness(std::size_t max_vertices, std::size_t samples,
                                       std::uint64_t seed) {
    WitnessPair out;
    std::mt19937_64 rng(seed);
    // Keyed by (vertices, edges, faces); value: one representative per b2.
    std::map<std::array<std::size_t, 3>, std::vector<std::pair<Hypergraph2, BettiProfile>>> seen;
    for (std::size_t trial = 0; trial < samples; ++trial) {
        std::size_t v = 4 + rng() % (max_vertices < 4 ? 1 : max_vertices - 3);
        std::size_t want = 3 + rng() % (2 * v);
        std::set<std::array<std::size_t, 3>> faces;
        for (std::size_t attempt = 0; attempt < 4 * want && faces.size() < want; ++attempt) {
            std::size_t a = rng() % v, b = rng() % v, c = rng() % v;
            if (a == b || a == c || b == c) continue;
            faces.insert(sorted_face({a, b, c}));
        }
        Hypergraph2 h;
        h.vertices = v;
        h.faces.assign(faces.begin(), faces.end());
        if (h.faces.empty() || h.skeleton().component_count() != 1) continue;
        BettiProfile profile = betti_profile(h);
        auto& bucket = seen[{v, profile.edges, profile.faces}];
        for (const auto& [other, other_profile] : bucket) {
            if (other_profile.b2 != profile.b2) {
                out.found = true;
                out.first = other;
                out.first_profile = other_profile;
                out.second = h;
                out.second_profile = profile;
                return out;
            }
        }
        bool fresh = std::none_of(bucket.begin(), bucket.end(), [&](const auto& entry) {
            return entry.second.b2 == profile.b2;
        });
        if (fresh) bucket.push_back({h, profile});
    }
    return out;
}

} // namespace mod2
