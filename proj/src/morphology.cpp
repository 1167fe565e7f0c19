#include "hypermorph/morphology.hpp"

namespace hypermorph {

std::string_view to_string(FilterFamily family) noexcept {
    switch (family) {
        case FilterFamily::HypergraphASF: return "hypergraph-asf";
        case FilterFamily::GraphASF: return "graph-asf";
        case FilterFamily::Median: return "median";
    }
    return "unknown";
}

std::optional<FilterFamily> parse_filter_family(std::string_view name) noexcept {
    for (auto f : {FilterFamily::HypergraphASF, FilterFamily::GraphASF, FilterFamily::Median})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

VertexSet vertex_dilate(const Hypergraph& h, const VertexSet& xv) {
    return edge_to_vertex_dilate(h, vertex_to_edge_dilate(h, xv));
}

VertexSet vertex_erode(const Hypergraph& h, const VertexSet& xv) {
    return edge_to_vertex_erode(h, vertex_to_edge_erode(h, xv));
}

VertexSet vertex_open1(const Hypergraph& h, const VertexSet& xv) { return vertex_dilate(h, vertex_erode(h, xv)); }
VertexSet vertex_close1(const Hypergraph& h, const VertexSet& xv) { return vertex_erode(h, vertex_dilate(h, xv)); }

VertexSet vertex_halfopen(const Hypergraph& h, const VertexSet& xv) {
    return edge_to_vertex_dilate(h, vertex_to_edge_erode(h, xv));
}

VertexSet vertex_halfclose(const Hypergraph& h, const VertexSet& xv) {
    return edge_to_vertex_erode(h, vertex_to_edge_dilate(h, xv));
}

EdgeSet edge_dilate(const Hypergraph& h, const EdgeSet& xe) {
    return vertex_to_edge_dilate(h, edge_to_vertex_dilate(h, xe));
}

EdgeSet edge_erode(const Hypergraph& h, const EdgeSet& xe) {
    return vertex_to_edge_erode(h, edge_to_vertex_erode(h, xe));
}

EdgeSet edge_open1(const Hypergraph& h, const EdgeSet& xe) { return edge_dilate(h, edge_erode(h, xe)); }
EdgeSet edge_close1(const Hypergraph& h, const EdgeSet& xe) { return edge_erode(h, edge_dilate(h, xe)); }

EdgeSet edge_halfopen(const Hypergraph& h, const EdgeSet& xe) {
    return vertex_to_edge_dilate(h, edge_to_vertex_erode(h, xe));
}

EdgeSet edge_halfclose(const Hypergraph& h, const EdgeSet& xe) {
    return vertex_to_edge_erode(h, edge_to_vertex_dilate(h, xe));
}

namespace {

SubHypergraph checked(const Hypergraph& h, SubHypergraph result, const char* op) {
    if (!is_subhypergraph(h, result))
        throw InvariantError(std::string(op) + " produced a pair that is not a subhypergraph");
    return result;
}

}  // namespace

SubHypergraph pair_dilate(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_dilate(h, x.vertices), edge_dilate(h, x.hedges)}, "pair_dilate");
}

SubHypergraph pair_erode(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_erode(h, x.vertices), edge_erode(h, x.hedges)}, "pair_erode");
}

SubHypergraph pair_open1(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_open1(h, x.vertices), edge_open1(h, x.hedges)}, "pair_open1");
}

SubHypergraph pair_close1(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_close1(h, x.vertices), edge_close1(h, x.hedges)}, "pair_close1");
}

SubHypergraph pair_halfopen(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_halfopen(h, x.vertices), edge_halfopen(h, x.hedges)}, "pair_halfopen");
}

SubHypergraph pair_halfclose(const Hypergraph& h, const SubHypergraph& x) {
    return checked(h, {vertex_halfclose(h, x.vertices), edge_halfclose(h, x.hedges)}, "pair_halfclose");
}

SubHypergraph granulometry_open(const Hypergraph& h, const SubHypergraph& x, OperatorScale scale) {
    SubHypergraph y = x;
    for (unsigned k = 0; k < scale.full_steps(); ++k) y = pair_erode(h, y);
    for (unsigned k = 0; k < scale.half_steps(); ++k) y = pair_halfopen(h, y);
    for (unsigned k = 0; k < scale.full_steps(); ++k) y = pair_dilate(h, y);
    return y;
}

SubHypergraph granulometry_close(const Hypergraph& h, const SubHypergraph& x, OperatorScale scale) {
    SubHypergraph y = x;
    for (unsigned k = 0; k < scale.full_steps(); ++k) y = pair_dilate(h, y);
    for (unsigned k = 0; k < scale.half_steps(); ++k) y = pair_halfclose(h, y);
    for (unsigned k = 0; k < scale.full_steps(); ++k) y = pair_erode(h, y);
    return y;
}

SubHypergraph asf_step(const Hypergraph& h, const SubHypergraph& previous, unsigned lambda) {
    const OperatorScale scale(lambda);
    return granulometry_open(h, granulometry_close(h, previous, scale), scale);
}

SubHypergraph asf(const Hypergraph& h, const SubHypergraph& x, unsigned lambda) {
    require_vertex_set(h, x.vertices);
    require_edge_set(h, x.hedges);
    SubHypergraph y = x;
    for (unsigned k = 1; k <= lambda; ++k) y = asf_step(h, y, k);
    return y;
}

}  // namespace hypermorph
