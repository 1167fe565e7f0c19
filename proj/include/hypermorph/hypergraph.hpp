#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hypermorph/errors.hpp"

namespace hypermorph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct VertexTag {};
struct EdgeTag {};

/// Dense membership set over the vertices (Tag = VertexTag) or the
/// hyperedges (Tag = EdgeTag) of a hypergraph. One byte per element.
template <class Tag>
class MemberSet {
public:
    MemberSet() = default;
    explicit MemberSet(std::size_t size, bool value = false)
        : bits_(size, value ? 1 : 0) {}

    static MemberSet empty(std::size_t size) { return MemberSet(size, false); }
    static MemberSet full(std::size_t size) { return MemberSet(size, true); }

    template <class Range>
    static MemberSet of(std::size_t size, const Range& members) {
        MemberSet s(size);
        for (auto m : members) s.insert(static_cast<std::size_t>(m));
        return s;
    }
    static MemberSet of(std::size_t size, std::initializer_list<std::size_t> members) {
        MemberSet s(size);
        for (auto m : members) s.insert(m);
        return s;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool contains(std::size_t i) const { return bits_.at(i) != 0; }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }

    void insert(std::size_t i) { bits_.at(i) = 1; }
    void erase(std::size_t i) { bits_.at(i) = 0; }
    void assign(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }
    bool none() const noexcept { return count() == 0; }

    /// Subset test. Both sets must have the same size.
    bool is_subset_of(const MemberSet& other) const {
        require_same_size(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.bits_[i]) return false;
        return true;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(i);
        return out;
    }

    std::span<const std::uint8_t> raw() const noexcept { return bits_; }
    std::span<std::uint8_t> raw() noexcept { return bits_; }

    friend bool operator==(const MemberSet&, const MemberSet&) = default;

private:
    void require_same_size(const MemberSet& other) const {
        if (other.size() != size())
            throw DimensionError("membership sets of different sizes: " +
                                 std::to_string(size()) + " vs " +
                                 std::to_string(other.size()));
    }

    std::vector<std::uint8_t> bits_;
};

using VertexSet = MemberSet<VertexTag>;
using EdgeSet = MemberSet<EdgeTag>;

/// Immutable hypergraph H = (H•, H×). Hyperedges are indexed; two edges with
/// the same vertex set are distinct elements of H×. Stored in compressed
/// form together with the transposed vertex -> edges incidence.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws std::invalid_argument for an empty edge, a repeated vertex
    /// inside one edge, or a vertex index >= vertex_count.
    Hypergraph(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }

    /// v(e): the vertices of edge e, in construction order.
    std::span<const VertexId> vertices_of(EdgeId e) const;
    /// Edges containing vertex v, ascending.
    std::span<const EdgeId> edges_of(VertexId v) const;

    /// Debug dump: "H <vertex_count> <edge_count>" then one line per edge.
    std::string to_text() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::size_t> edge_offsets_;
    std::vector<VertexId> edge_vertices_;
    std::vector<std::size_t> vertex_offsets_;
    std::vector<EdgeId> vertex_edges_;
};

/// A pair X = (X•, X×). Well formed when every selected edge has all its
/// vertices selected; see is_subhypergraph.
struct SubHypergraph {
    VertexSet vertices;
    EdgeSet hedges;

    friend bool operator==(const SubHypergraph&, const SubHypergraph&) = default;
};

// Cross-operators between vertex sets and edge sets.

/// δ•: union of v(e) over the selected edges.
VertexSet edge_to_vertex_dilate(const Hypergraph& h, const EdgeSet& xe);
/// ε×: edges whose vertices all lie in xv.
EdgeSet vertex_to_edge_erode(const Hypergraph& h, const VertexSet& xv);
/// ε•: vertices lying in no unselected edge. All edges selected gives the
/// full vertex set.
VertexSet edge_to_vertex_erode(const Hypergraph& h, const EdgeSet& xe);
/// δ×: edges meeting xv in at least one vertex.
EdgeSet vertex_to_edge_dilate(const Hypergraph& h, const VertexSet& xv);

VertexSet complement_vertices(const Hypergraph& h, const VertexSet& xv);
EdgeSet complement_edges(const Hypergraph& h, const EdgeSet& xe);

bool is_subhypergraph(const Hypergraph& h, const VertexSet& xv, const EdgeSet& xe);
inline bool is_subhypergraph(const Hypergraph& h, const SubHypergraph& x) {
    return is_subhypergraph(h, x.vertices, x.hedges);
}

void require_vertex_set(const Hypergraph& h, const VertexSet& xv);
void require_edge_set(const Hypergraph& h, const EdgeSet& xe);

}  // namespace hypermorph
