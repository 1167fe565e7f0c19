#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hypermorph/hypergraph.hpp"

namespace hypermorph {

/// Row-major binary image. true = object (foreground) pixel.
class BinaryImage {
public:
    BinaryImage() = default;
    /// Throws std::invalid_argument when width or height is zero.
    BinaryImage(std::size_t width, std::size_t height, bool fill = false);
    BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    bool at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x] != 0; }
    void set(std::size_t x, std::size_t y, bool value) noexcept { pixels_[y * width_ + x] = value ? 1 : 0; }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    std::size_t foreground_count() const noexcept;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

enum class GridKind {
    /// One hyperedge per 2x2 pixel block, wrapping around both borders.
    /// 4-uniform, and every vertex lies in exactly 4 hyperedges.
    FourUniformBlocks,
    /// One 2-vertex edge per 4-adjacent pixel pair, no wraparound: the
    /// ordinary pixel adjacency graph.
    TwoUniformAdjacency,
};

struct GridHypergraphSpec {
    GridKind kind = GridKind::FourUniformBlocks;
    std::size_t width = 0;
    std::size_t height = 0;
};

/// Vertex of pixel (x, y) is y * width + x. Throws DimensionError for a
/// degenerate grid (width or height below 2).
Hypergraph build_grid_hypergraph(const GridHypergraphSpec& spec);

/// X• = foreground pixels, X× = ε×(X•).
SubHypergraph image_to_subhypergraph(const BinaryImage& img, const Hypergraph& h);

/// Projects the vertex component back onto a width x height image.
BinaryImage subhypergraph_to_image(const SubHypergraph& x, std::size_t width, std::size_t height);

}  // namespace hypermorph
