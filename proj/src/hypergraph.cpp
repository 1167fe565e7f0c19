#include "hypermorph/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypermorph {

Hypergraph::Hypergraph(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& edges)
    : vertex_count_(vertex_count) {
    edge_offsets_.reserve(edges.size() + 1);
    edge_offsets_.push_back(0);
    std::vector<std::size_t> degree(vertex_count, 0);
    std::vector<std::uint8_t> seen(vertex_count, 0);

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = edges[e];
        if (edge.empty())
            throw std::invalid_argument("hyperedge " + std::to_string(e) + " is empty");
        for (VertexId v : edge) {
            if (v >= vertex_count)
                throw std::invalid_argument("hyperedge " + std::to_string(e) + " references vertex " +
                                            std::to_string(v) + " >= " + std::to_string(vertex_count));
            if (seen[v])
                throw std::invalid_argument("hyperedge " + std::to_string(e) + " repeats vertex " +
                                            std::to_string(v));
            seen[v] = 1;
            ++degree[v];
        }
        for (VertexId v : edge) seen[v] = 0;
        edge_vertices_.insert(edge_vertices_.end(), edge.begin(), edge.end());
        edge_offsets_.push_back(edge_vertices_.size());
    }

    vertex_offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v];
    vertex_edges_.resize(edge_vertices_.size());
    std::vector<std::size_t> cursor(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
    for (std::size_t e = 0; e + 1 < edge_offsets_.size(); ++e)
        for (std::size_t k = edge_offsets_[e]; k < edge_offsets_[e + 1]; ++k)
            vertex_edges_[cursor[edge_vertices_[k]]++] = static_cast<EdgeId>(e);
}

std::span<const VertexId> Hypergraph::vertices_of(EdgeId e) const {
    if (e >= edge_count()) throw std::out_of_range("edge index out of range");
    return std::span(edge_vertices_).subspan(edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]);
}

std::span<const EdgeId> Hypergraph::edges_of(VertexId v) const {
    if (v >= vertex_count_) throw std::out_of_range("vertex index out of range");
    return std::span(vertex_edges_).subspan(vertex_offsets_[v], vertex_offsets_[v + 1] - vertex_offsets_[v]);
}

std::string Hypergraph::to_text() const {
    std::ostringstream out;
    out << "H " << vertex_count_ << ' ' << edge_count() << '\n';
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto vs = vertices_of(e);
        for (std::size_t k = 0; k < vs.size(); ++k) out << (k ? " " : "") << vs[k];
        out << '\n';
    }
    return out.str();
}

void require_vertex_set(const Hypergraph& h, const VertexSet& xv) {
    if (xv.size() != h.vertex_count())
        throw DimensionError("vertex set has size " + std::to_string(xv.size()) + ", hypergraph has " +
                             std::to_string(h.vertex_count()) + " vertices");
}

void require_edge_set(const Hypergraph& h, const EdgeSet& xe) {
    if (xe.size() != h.edge_count())
        throw DimensionError("edge set has size " + std::to_string(xe.size()) + ", hypergraph has " +
                             std::to_string(h.edge_count()) + " edges");
}

VertexSet edge_to_vertex_dilate(const Hypergraph& h, const EdgeSet& xe) {
    require_edge_set(h, xe);
    VertexSet out(h.vertex_count());
    auto bits = out.raw();
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (xe[e])
            for (VertexId v : h.vertices_of(e)) bits[v] = 1;
    return out;
}

EdgeSet vertex_to_edge_erode(const Hypergraph& h, const VertexSet& xv) {
    require_vertex_set(h, xv);
    EdgeSet out(h.edge_count());
    auto bits = out.raw();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const auto vs = h.vertices_of(e);
        bits[e] = std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return xv[v]; }) ? 1 : 0;
    }
    return out;
}

VertexSet edge_to_vertex_erode(const Hypergraph& h, const EdgeSet& xe) {
    require_edge_set(h, xe);
    VertexSet out = VertexSet::full(h.vertex_count());
    auto bits = out.raw();
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (!xe[e])
            for (VertexId v : h.vertices_of(e)) bits[v] = 0;
    return out;
}

EdgeSet vertex_to_edge_dilate(const Hypergraph& h, const VertexSet& xv) {
    require_vertex_set(h, xv);
    EdgeSet out(h.edge_count());
    auto bits = out.raw();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const auto vs = h.vertices_of(e);
        bits[e] = std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return xv[v]; }) ? 1 : 0;
    }
    return out;
}

VertexSet complement_vertices(const Hypergraph& h, const VertexSet& xv) {
    require_vertex_set(h, xv);
    VertexSet out = xv;
    for (auto& b : out.raw()) b ^= 1;
    return out;
}

EdgeSet complement_edges(const Hypergraph& h, const EdgeSet& xe) {
    require_edge_set(h, xe);
    EdgeSet out = xe;
    for (auto& b : out.raw()) b ^= 1;
    return out;
}

bool is_subhypergraph(const Hypergraph& h, const VertexSet& xv, const EdgeSet& xe) {
    require_vertex_set(h, xv);
    require_edge_set(h, xe);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (!xe[e]) continue;
        for (VertexId v : h.vertices_of(e))
            if (!xv[v]) return false;
    }
    return true;
}

}  // namespace hypermorph
