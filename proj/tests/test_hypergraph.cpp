#include <gtest/gtest.h>

#include "hypermorph/hypergraph.hpp"
#include "test_support.hpp"

namespace hypermorph {
namespace {

using namespace hypermorph::testing;

class G3Test : public ::testing::Test {
protected:
    RawHypergraph raw = g3();
    Hypergraph h = raw.build();

    VertexSet V(std::initializer_list<std::size_t> m) { return VertexSet::of(4, m); }
    EdgeSet E(std::initializer_list<std::size_t> m) { return EdgeSet::of(3, m); }
};

TEST_F(G3Test, Incidence) {
    EXPECT_EQ(h.vertex_count(), 4u);
    EXPECT_EQ(h.edge_count(), 3u);
    ASSERT_EQ(h.edges_of(1).size(), 2u);
    EXPECT_EQ(h.edges_of(1)[0], 0u);
    EXPECT_EQ(h.edges_of(1)[1], 1u);
    EXPECT_EQ(h.edges_of(0).size(), 1u);
    EXPECT_EQ(h.to_text(), "H 4 3\n0 1\n1 2\n2 3\n");
}

TEST_F(G3Test, EdgeToVertexDilate) {
    EXPECT_EQ(edge_to_vertex_dilate(h, E({0, 1})), V({0, 1, 2}));
    EXPECT_EQ(edge_to_vertex_dilate(h, E({})), V({}));
    EXPECT_EQ(edge_to_vertex_dilate(h, E({0, 1, 2})), V({0, 1, 2, 3}));
}

TEST_F(G3Test, VertexToEdgeErode) {
    EXPECT_EQ(vertex_to_edge_erode(h, V({0, 1, 2})), E({0, 1}));
    EXPECT_EQ(vertex_to_edge_erode(h, VertexSet::full(4)), EdgeSet::full(3));
    EXPECT_EQ(vertex_to_edge_erode(h, V({})), E({}));
}

TEST_F(G3Test, EdgeToVertexErode) {
    EXPECT_EQ(edge_to_vertex_erode(h, E({0})), V({0}));
    EXPECT_EQ(edge_to_vertex_erode(h, EdgeSet::full(3)), VertexSet::full(4));
    EXPECT_EQ(edge_to_vertex_erode(h, E({})), V({}));
}

TEST_F(G3Test, VertexToEdgeDilate) {
    EXPECT_EQ(vertex_to_edge_dilate(h, V({1})), E({0, 1}));
    EXPECT_EQ(vertex_to_edge_dilate(h, V({})), E({}));
    EXPECT_EQ(vertex_to_edge_dilate(h, V({0, 3})), E({0, 2}));
}

TEST_F(G3Test, Complements) {
    EXPECT_EQ(complement_vertices(h, V({})), VertexSet::full(4));
    EXPECT_EQ(complement_vertices(h, VertexSet::full(4)), V({}));
    EXPECT_EQ(complement_vertices(h, V({0, 1})), V({2, 3}));
    EXPECT_EQ(complement_edges(h, E({1})), E({0, 2}));
}

TEST_F(G3Test, IsSubhypergraph) {
    EXPECT_TRUE(is_subhypergraph(h, V({0, 1}), E({0})));
    EXPECT_FALSE(is_subhypergraph(h, V({0}), E({0})));
    EXPECT_TRUE(is_subhypergraph(h, V({}), E({})));
}

TEST_F(G3Test, DimensionErrors) {
    EXPECT_THROW(edge_to_vertex_dilate(h, EdgeSet(2)), DimensionError);
    EXPECT_THROW(vertex_to_edge_erode(h, VertexSet(5)), DimensionError);
    EXPECT_THROW(edge_to_vertex_erode(h, EdgeSet(4)), DimensionError);
    EXPECT_THROW(vertex_to_edge_dilate(h, VertexSet(3)), DimensionError);
    EXPECT_THROW(complement_vertices(h, VertexSet(1)), DimensionError);
    EXPECT_THROW(complement_edges(h, EdgeSet(0)), DimensionError);
    EXPECT_THROW(is_subhypergraph(h, VertexSet(4), EdgeSet(1)), DimensionError);
    EXPECT_THROW(V({}).is_subset_of(VertexSet(5)), DimensionError);
}

TEST(HypergraphConstruction, RejectsMalformedEdges) {
    EXPECT_THROW(Hypergraph(3, {{0, 1}, {}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(3, {{1, 2, 1}}), std::invalid_argument);
}

TEST(HypergraphConstruction, RepeatedVertexSetsAreDistinctEdges) {
    const Hypergraph h(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(h.edge_count(), 2u);
    EXPECT_EQ(vertex_to_edge_erode(h, VertexSet::of(2, {0, 1})), EdgeSet::full(2));
    EXPECT_EQ(h.edges_of(0).size(), 2u);
}

TEST(HypergraphConstruction, EmptyHypergraph) {
    const Hypergraph h(3, {});
    EXPECT_EQ(h.edge_count(), 0u);
    // Intersection over an empty family is the whole vertex set.
    EXPECT_EQ(edge_to_vertex_erode(h, EdgeSet(0)), VertexSet::full(3));
    EXPECT_EQ(edge_to_vertex_dilate(h, EdgeSet(0)), VertexSet(3));
}

TEST(HypergraphConstruction, IncidenceIsTranspose) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto raw = random_hypergraph(rng, 12, 8);
        const auto h = raw.build();
        std::size_t incidences = 0;
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            for (EdgeId e : h.edges_of(v)) {
                const auto vs = h.vertices_of(e);
                EXPECT_NE(std::find(vs.begin(), vs.end(), v), vs.end());
            }
            incidences += h.edges_of(v).size();
        }
        std::size_t total = 0;
        for (EdgeId e = 0; e < h.edge_count(); ++e) total += h.vertices_of(e).size();
        EXPECT_EQ(incidences, total);
    }
}

// Cross-operators against the set-builder definitions, plus the
// adjunction, duality and increasingness laws, on random hypergraphs.
TEST(CrossOperatorLaws, RandomHypergraphs) {
    SplitMix64 rng(20240611);
    for (int trial = 0; trial < 500; ++trial) {
        const auto raw = random_hypergraph(rng, 12, 8);
        const auto h = raw.build();
        for (int sample = 0; sample < 32; ++sample) {
            const Mask xv = random_mask(rng, raw.all_vertices());
            const Mask xv2 = xv | random_mask(rng, raw.all_vertices());
            const Mask xe = random_mask(rng, raw.all_edges());
            const Mask xe2 = xe | random_mask(rng, raw.all_edges());
            const auto sv = vset(raw, xv);
            const auto se = eset(raw, xe);

            ASSERT_EQ(to_mask(edge_to_vertex_dilate(h, se)), oracle_delta_dot(raw, xe));
            ASSERT_EQ(to_mask(vertex_to_edge_erode(h, sv)), oracle_eps_cross(raw, xv));
            ASSERT_EQ(to_mask(edge_to_vertex_erode(h, se)), oracle_eps_dot(raw, xe));
            ASSERT_EQ(to_mask(vertex_to_edge_dilate(h, sv)), oracle_delta_cross(raw, xv));

            // (ε×, δ•): δ•(X×) ⊆ X• ⟺ X× ⊆ ε×(X•)
            ASSERT_EQ(subset(to_mask(edge_to_vertex_dilate(h, se)), xv),
                      subset(xe, to_mask(vertex_to_edge_erode(h, sv))));
            // (ε•, δ×): δ×(X•) ⊆ X× ⟺ X• ⊆ ε•(X×)
            ASSERT_EQ(subset(to_mask(vertex_to_edge_dilate(h, sv)), xe),
                      subset(xv, to_mask(edge_to_vertex_erode(h, se))));

            ASSERT_EQ(vertex_to_edge_erode(h, complement_vertices(h, sv)),
                      complement_edges(h, vertex_to_edge_dilate(h, sv)));
            ASSERT_EQ(edge_to_vertex_erode(h, complement_edges(h, se)),
                      complement_vertices(h, edge_to_vertex_dilate(h, se)));

            const auto sv2 = vset(raw, xv2);
            const auto se2 = eset(raw, xe2);
            ASSERT_TRUE(vertex_to_edge_dilate(h, sv).is_subset_of(vertex_to_edge_dilate(h, sv2)));
            ASSERT_TRUE(vertex_to_edge_erode(h, sv).is_subset_of(vertex_to_edge_erode(h, sv2)));
            ASSERT_TRUE(edge_to_vertex_dilate(h, se).is_subset_of(edge_to_vertex_dilate(h, se2)));
            ASSERT_TRUE(edge_to_vertex_erode(h, se).is_subset_of(edge_to_vertex_erode(h, se2)));

            ASSERT_EQ(complement_vertices(h, complement_vertices(h, sv)), sv);
            ASSERT_EQ(edge_to_vertex_erode(h, se), edge_to_vertex_erode(h, se));
        }
    }
}

// The verified orientation is δ×(X•) ⊆ X× ⟺ X• ⊆ ε•(X×). The reverse
// reading, ε•(X×) ⊆ X• ⟺ X× ⊆ δ×(X•), fails on G3.
TEST(CrossOperatorLaws, ReverseAdjunctionOrientationFails) {
    const auto h = g3().build();
    const auto xv = VertexSet::of(4, {0});
    const auto xe = EdgeSet::of(3, {1});
    const bool left = xe.is_subset_of(vertex_to_edge_dilate(h, xv));
    const bool right = edge_to_vertex_erode(h, xe).is_subset_of(xv);
    EXPECT_NE(left, right);
}

}  // namespace
}  // namespace hypermorph
