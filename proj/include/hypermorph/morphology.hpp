#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hypermorph/hypergraph.hpp"

namespace hypermorph {

/// Scale parameter λ of the granulometries and the ASF. λ = 2i + j with
/// i = λ / 2 full erosion/dilation steps and j = λ % 2 half-opening steps.
class OperatorScale {
public:
    constexpr explicit OperatorScale(unsigned lambda) noexcept : lambda_(lambda) {}

    constexpr unsigned lambda() const noexcept { return lambda_; }
    constexpr unsigned full_steps() const noexcept { return lambda_ / 2; }
    constexpr unsigned half_steps() const noexcept { return lambda_ % 2; }

private:
    unsigned lambda_;
};

enum class FilterFamily { HypergraphASF, GraphASF, Median };

std::string_view to_string(FilterFamily family) noexcept;
std::optional<FilterFamily> parse_filter_family(std::string_view name) noexcept;

// Composition convention throughout: f∘g applies g first.

// Vertex operators on H•.
VertexSet vertex_dilate(const Hypergraph& h, const VertexSet& xv);     // δ = δ•∘δ×
VertexSet vertex_erode(const Hypergraph& h, const VertexSet& xv);      // ε = ε•∘ε×
VertexSet vertex_open1(const Hypergraph& h, const VertexSet& xv);      // γ1 = δ∘ε
VertexSet vertex_close1(const Hypergraph& h, const VertexSet& xv);     // Φ1 = ε∘δ
VertexSet vertex_halfopen(const Hypergraph& h, const VertexSet& xv);   // γ1/2 = δ•∘ε×
VertexSet vertex_halfclose(const Hypergraph& h, const VertexSet& xv);  // Φ1/2 = ε•∘δ×

// Edge operators on H×.
EdgeSet edge_dilate(const Hypergraph& h, const EdgeSet& xe);     // Δ = δ×∘δ•
EdgeSet edge_erode(const Hypergraph& h, const EdgeSet& xe);      // ℰ = ε×∘ε•
EdgeSet edge_open1(const Hypergraph& h, const EdgeSet& xe);      // Γ1 = Δ∘ℰ
EdgeSet edge_close1(const Hypergraph& h, const EdgeSet& xe);     // Φ×1 = ℰ∘Δ
EdgeSet edge_halfopen(const Hypergraph& h, const EdgeSet& xe);   // Γ1/2 = δ×∘ε•
EdgeSet edge_halfclose(const Hypergraph& h, const EdgeSet& xe);  // Φ×1/2 = ε×∘δ•

// Pair operators act componentwise on X = (X•, X×). Each result is checked
// for closedness and an InvariantError is thrown if it is not a
// subhypergraph.
SubHypergraph pair_dilate(const Hypergraph& h, const SubHypergraph& x);
SubHypergraph pair_erode(const Hypergraph& h, const SubHypergraph& x);
SubHypergraph pair_open1(const Hypergraph& h, const SubHypergraph& x);
SubHypergraph pair_close1(const Hypergraph& h, const SubHypergraph& x);
SubHypergraph pair_halfopen(const Hypergraph& h, const SubHypergraph& x);
SubHypergraph pair_halfclose(const Hypergraph& h, const SubHypergraph& x);

/// [γ,Γ]_{λ/2} = [δ,Δ]^i ∘ ([γ,Γ]_{1/2})^j ∘ [ε,ℰ]^i
SubHypergraph granulometry_open(const Hypergraph& h, const SubHypergraph& x, OperatorScale scale);
/// [Φ,Φ]_{λ/2} = [ε,ℰ]^i ∘ ([Φ,Φ]_{1/2})^j ∘ [δ,Δ]^i
SubHypergraph granulometry_close(const Hypergraph& h, const SubHypergraph& x, OperatorScale scale);

/// One ASF stage: given ASF_{(λ-1)/2}(X), returns ASF_{λ/2}(X) for λ >= 1.
SubHypergraph asf_step(const Hypergraph& h, const SubHypergraph& previous, unsigned lambda);

/// Alternating sequential filter ASF_{λ/2}(X); ASF_0 is the identity.
SubHypergraph asf(const Hypergraph& h, const SubHypergraph& x, unsigned lambda);

}  // namespace hypermorph
