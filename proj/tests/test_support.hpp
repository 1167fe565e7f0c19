#pragma once

// Test-only helpers: small hypergraph fixtures, random generators and
// set-builder oracles. The oracles work on plain edge lists and bitmasks and
// never call into the library operators they are compared against.

#include <cstdint>
#include <functional>
#include <vector>

#include "hypermorph/hypergraph.hpp"
#include "hypermorph/random.hpp"

namespace hypermorph::testing {

using Mask = std::uint64_t;

/// Edge-list description of a hypergraph with at most 64 vertices and edges.
struct RawHypergraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<VertexId>> edges;

    Hypergraph build() const { return Hypergraph(vertex_count, edges); }
    Mask edge_mask(std::size_t e) const {
        Mask m = 0;
        for (auto v : edges[e]) m |= Mask{1} << v;
        return m;
    }
    Mask all_vertices() const { return vertex_count == 64 ? ~Mask{0} : (Mask{1} << vertex_count) - 1; }
    Mask all_edges() const { return edges.size() == 64 ? ~Mask{0} : (Mask{1} << edges.size()) - 1; }
};

/// Path graph 0-1-2-3 as a 2-uniform hypergraph: e0={0,1}, e1={1,2}, e2={2,3}.
inline RawHypergraph g3() { return {4, {{0, 1}, {1, 2}, {2, 3}}}; }

/// 2x2 blocks with wraparound, written out independently of the builder.
inline RawHypergraph raw_block_grid(std::size_t w, std::size_t h) {
    RawHypergraph r{w * h, {}};
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            const auto x1 = (x + 1) % w;
            const auto y1 = (y + 1) % h;
            r.edges.push_back({static_cast<VertexId>(y * w + x), static_cast<VertexId>(y * w + x1),
                               static_cast<VertexId>(y1 * w + x), static_cast<VertexId>(y1 * w + x1)});
        }
    return r;
}

/// Random hypergraph with 1..max_vertices vertices and 0..max_edges nonempty
/// edges of random size.
inline RawHypergraph random_hypergraph(SplitMix64& rng, std::size_t max_vertices, std::size_t max_edges) {
    RawHypergraph r;
    r.vertex_count = 1 + rng.next() % max_vertices;
    const auto m = rng.next() % (max_edges + 1);
    for (std::size_t e = 0; e < m; ++e) {
        Mask bits = 0;
        // Bias towards small edges so containment tests are not all trivial.
        const auto size = 1 + rng.next() % std::min<std::size_t>(r.vertex_count, 4);
        while (static_cast<std::size_t>(__builtin_popcountll(bits)) < size) bits |= Mask{1} << (rng.next() % r.vertex_count);
        std::vector<VertexId> edge;
        for (VertexId v = 0; v < r.vertex_count; ++v)
            if (bits >> v & 1) edge.push_back(v);
        // Shuffle order: edges are ordered sets, order must not matter.
        for (std::size_t i = edge.size(); i > 1; --i) std::swap(edge[i - 1], edge[rng.next() % i]);
        r.edges.push_back(edge);
    }
    return r;
}

inline Mask random_mask(SplitMix64& rng, Mask universe) { return rng.next() & universe; }

template <class Set>
Set to_set(Mask m, std::size_t size) {
    Set s(size);
    for (std::size_t i = 0; i < size; ++i)
        if (m >> i & 1) s.insert(i);
    return s;
}

template <class Set>
Mask to_mask(const Set& s) {
    Mask m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) m |= Mask{1} << i;
    return m;
}

inline VertexSet vset(const RawHypergraph& r, Mask m) { return to_set<VertexSet>(m, r.vertex_count); }
inline EdgeSet eset(const RawHypergraph& r, Mask m) { return to_set<EdgeSet>(m, r.edges.size()); }

// Set-builder oracles over bitmasks.

inline Mask oracle_delta_dot(const RawHypergraph& r, Mask xe) {  // ∪_{j∈J} v(e_j)
    Mask out = 0;
    for (std::size_t e = 0; e < r.edges.size(); ++e)
        if (xe >> e & 1) out |= r.edge_mask(e);
    return out;
}

inline Mask oracle_eps_cross(const RawHypergraph& r, Mask xv) {  // {e_i | v(e_i) ⊆ X•}
    Mask out = 0;
    for (std::size_t e = 0; e < r.edges.size(); ++e)
        if ((r.edge_mask(e) & ~xv) == 0) out |= Mask{1} << e;
    return out;
}

inline Mask oracle_eps_dot(const RawHypergraph& r, Mask xe) {  // ∩_{j∉J} complement(v(e_j))
    Mask out = r.all_vertices();
    for (std::size_t e = 0; e < r.edges.size(); ++e)
        if (!(xe >> e & 1)) out &= ~r.edge_mask(e) & r.all_vertices();
    return out;
}

inline Mask oracle_delta_cross(const RawHypergraph& r, Mask xv) {  // {e_i | v(e_i) ∩ X• ≠ ∅}
    Mask out = 0;
    for (std::size_t e = 0; e < r.edges.size(); ++e)
        if (r.edge_mask(e) & xv) out |= Mask{1} << e;
    return out;
}

/// {x | ∃ e_i : x ∈ v(e_i) and v(e_i) ∩ X• ≠ ∅}
inline Mask oracle_vertex_dilate_direct(const RawHypergraph& r, Mask xv) {
    Mask out = 0;
    for (std::size_t x = 0; x < r.vertex_count; ++x)
        for (std::size_t e = 0; e < r.edges.size(); ++e)
            if ((r.edge_mask(e) >> x & 1) && (r.edge_mask(e) & xv)) out |= Mask{1} << x;
    return out;
}

/// {x | ∀ e_i : x ∈ v(e_i) implies v(e_i) ⊆ X•}
inline Mask oracle_vertex_erode_direct(const RawHypergraph& r, Mask xv) {
    Mask out = 0;
    for (std::size_t x = 0; x < r.vertex_count; ++x) {
        bool ok = true;
        for (std::size_t e = 0; e < r.edges.size(); ++e)
            if ((r.edge_mask(e) >> x & 1) && (r.edge_mask(e) & ~xv)) ok = false;
        if (ok) out |= Mask{1} << x;
    }
    return out;
}

/// {x | ∃ e_i : x ∈ v(e_i) and v(e_i) ⊆ X•}, the existential reading.
inline Mask oracle_vertex_erode_existential(const RawHypergraph& r, Mask xv) {
    Mask out = 0;
    for (std::size_t x = 0; x < r.vertex_count; ++x)
        for (std::size_t e = 0; e < r.edges.size(); ++e)
            if ((r.edge_mask(e) >> x & 1) && (r.edge_mask(e) & ~xv) == 0) out |= Mask{1} << x;
    return out;
}

/// {e_i | ∃ j ∈ J : v(e_i) ∩ v(e_j) ≠ ∅}
inline Mask oracle_edge_dilate_direct(const RawHypergraph& r, Mask xe) {
    Mask out = 0;
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        for (std::size_t j = 0; j < r.edges.size(); ++j)
            if ((xe >> j & 1) && (r.edge_mask(i) & r.edge_mask(j))) out |= Mask{1} << i;
    return out;
}

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Closed pairs: every selected edge inside the selected vertices.
inline bool oracle_closed(const RawHypergraph& r, Mask xv, Mask xe) {
    for (std::size_t e = 0; e < r.edges.size(); ++e)
        if ((xe >> e & 1) && !subset(r.edge_mask(e), xv)) return false;
    return true;
}

/// Random closed pair: random vertices, then a random subset of the edges
/// they contain.
inline SubHypergraph random_subhypergraph(SplitMix64& rng, const RawHypergraph& r) {
    const Mask xv = random_mask(rng, r.all_vertices());
    const Mask xe = oracle_eps_cross(r, xv) & rng.next();
    return {vset(r, xv), eset(r, xe)};
}

}  // namespace hypermorph::testing
