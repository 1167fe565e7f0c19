#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypermorph/image_bridge.hpp"
#include "hypermorph/morphology.hpp"

namespace hypermorph {

/// Salt-and-pepper noise on a binary image: every pixel is flipped
/// independently with probability `ratio`.
struct NoiseSpec {
    double ratio = 0.0;
    std::uint64_t seed = 0;
};

struct NoisyImage {
    BinaryImage image;
    /// Fraction of pixels actually flipped.
    double achieved_ratio = 0.0;
};

/// Deterministic in (img, spec). Throws std::invalid_argument for a ratio
/// outside [0, 1].
NoisyImage add_salt_pepper(const BinaryImage& img, const NoiseSpec& spec);

/// 100 * mismatched pixels / total pixels.
double mse_percent(const BinaryImage& a, const BinaryImage& b);

/// k x k majority filter with edge replication at the border. k must be odd
/// and at least 3.
BinaryImage median_filter(const BinaryImage& img, int window);

/// Lifts img onto the grid hypergraph of the family, runs ASF_{λ/2} and
/// projects back. family must be GraphASF or HypergraphASF.
BinaryImage asf_denoise(const BinaryImage& img, FilterFamily family, unsigned lambda);

GridKind grid_kind_for(FilterFamily family);

struct SweepEntry {
    /// λ for the ASF families, window size k for the median.
    unsigned scale = 0;
    double mse_percent = 0.0;
    double wall_ms = 0.0;
};

struct SweepReport {
    FilterFamily family = FilterFamily::HypergraphASF;
    std::vector<SweepEntry> entries;
    std::size_t best_index = 0;

    const SweepEntry& best() const { return entries.at(best_index); }
};

/// Evaluates ASF_{λ/2} on `noisy` for λ = 0..lambda_max and scores each
/// against `clean`. The ASF stages are chained, so wall_ms is the cumulative
/// time to reach each λ.
SweepReport run_asf_sweep(const BinaryImage& clean, const BinaryImage& noisy, FilterFamily family,
                          unsigned lambda_max);

SweepReport run_median_sweep(const BinaryImage& clean, const BinaryImage& noisy, std::span<const int> windows);

/// "family,scale,mse_percent,wall_ms" rows and a trailing
/// "# best,<family>,<scale>,<mse>" line.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

/// Deterministic binary benchmark image with photo-like detail: a
/// thresholded random wave field whose features are at least 2 pixels wide.
BinaryImage make_test_image(std::size_t width, std::size_t height, std::uint64_t seed = 1);

}  // namespace hypermorph
