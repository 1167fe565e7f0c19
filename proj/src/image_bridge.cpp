#include "hypermorph/image_bridge.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypermorph {

BinaryImage::BinaryImage(std::size_t width, std::size_t height, bool fill)
    : BinaryImage(width, height, std::vector<std::uint8_t>(width * height, fill ? 1 : 0)) {}

BinaryImage::BinaryImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
    if (pixels_.size() != width * height)
        throw DimensionError("pixel buffer has " + std::to_string(pixels_.size()) + " entries, expected " +
                             std::to_string(width * height));
    for (auto& p : pixels_) p = p ? 1 : 0;
}

std::size_t BinaryImage::foreground_count() const noexcept {
    return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

Hypergraph build_grid_hypergraph(const GridHypergraphSpec& spec) {
    const auto w = spec.width;
    const auto h = spec.height;
    if (w < 2 || h < 2)
        throw DimensionError("grid hypergraph needs width and height >= 2, got " + std::to_string(w) + "x" +
                             std::to_string(h));

    auto id = [w](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * w + x); };
    std::vector<std::vector<VertexId>> edges;

    switch (spec.kind) {
        case GridKind::FourUniformBlocks:
            edges.reserve(w * h);
            for (std::size_t y = 0; y < h; ++y) {
                const auto y1 = (y + 1) % h;
                for (std::size_t x = 0; x < w; ++x) {
                    const auto x1 = (x + 1) % w;
                    edges.push_back({id(x, y), id(x1, y), id(x, y1), id(x1, y1)});
                }
            }
            break;
        case GridKind::TwoUniformAdjacency:
            edges.reserve(2 * w * h - w - h);
            for (std::size_t y = 0; y < h; ++y)
                for (std::size_t x = 0; x + 1 < w; ++x) edges.push_back({id(x, y), id(x + 1, y)});
            for (std::size_t y = 0; y + 1 < h; ++y)
                for (std::size_t x = 0; x < w; ++x) edges.push_back({id(x, y), id(x, y + 1)});
            break;
    }
    return Hypergraph(w * h, edges);
}

SubHypergraph image_to_subhypergraph(const BinaryImage& img, const Hypergraph& h) {
    if (img.pixel_count() != h.vertex_count())
        throw DimensionError("image has " + std::to_string(img.pixel_count()) + " pixels, hypergraph has " +
                             std::to_string(h.vertex_count()) + " vertices");
    VertexSet xv(h.vertex_count());
    std::copy(img.pixels().begin(), img.pixels().end(), xv.raw().begin());
    EdgeSet xe = vertex_to_edge_erode(h, xv);
    return {std::move(xv), std::move(xe)};
}

BinaryImage subhypergraph_to_image(const SubHypergraph& x, std::size_t width, std::size_t height) {
    if (x.vertices.size() != width * height)
        throw DimensionError("subhypergraph has " + std::to_string(x.vertices.size()) +
                             " vertices, image needs " + std::to_string(width * height));
    const auto bits = x.vertices.raw();
    return BinaryImage(width, height, std::vector<std::uint8_t>(bits.begin(), bits.end()));
}

}  // namespace hypermorph
