#include "hypermorph/filter_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hypermorph/random.hpp"

namespace hypermorph {

NoisyImage add_salt_pepper(const BinaryImage& img, const NoiseSpec& spec) {
    if (!(spec.ratio >= 0.0 && spec.ratio <= 1.0))
        throw std::invalid_argument("noise ratio must lie in [0, 1], got " + std::to_string(spec.ratio));
    SplitMix64 rng(spec.seed);
    NoisyImage out{img, 0.0};
    std::size_t flipped = 0;
    for (auto& p : out.image.pixels()) {
        if (rng.next_unit() < spec.ratio) {
            p ^= 1;
            ++flipped;
        }
    }
    out.achieved_ratio = static_cast<double>(flipped) / static_cast<double>(img.pixel_count());
    return out;
}

double mse_percent(const BinaryImage& a, const BinaryImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionError("images differ in size: " + std::to_string(a.width()) + "x" +
                             std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                             std::to_string(b.height()));
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) mismatched += pa[i] != pb[i];
    return 100.0 * static_cast<double>(mismatched) / static_cast<double>(pa.size());
}

BinaryImage median_filter(const BinaryImage& img, int window) {
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("median window must be odd and >= 3, got " + std::to_string(window));
    const auto w = static_cast<std::ptrdiff_t>(img.width());
    const auto h = static_cast<std::ptrdiff_t>(img.height());
    const std::ptrdiff_t r = window / 2;
    const std::ptrdiff_t pw = w + 2 * r;
    const std::ptrdiff_t ph = h + 2 * r;

    // Summed-area table over the edge-replicated image, one guard row/column.
    std::vector<std::uint32_t> sat(static_cast<std::size_t>((pw + 1) * (ph + 1)), 0);
    auto at = [&](std::ptrdiff_t x, std::ptrdiff_t y) -> std::uint32_t& {
        return sat[static_cast<std::size_t>(y * (pw + 1) + x)];
    };
    for (std::ptrdiff_t y = 0; y < ph; ++y) {
        const auto sy = std::clamp<std::ptrdiff_t>(y - r, 0, h - 1);
        std::uint32_t row = 0;
        for (std::ptrdiff_t x = 0; x < pw; ++x) {
            const auto sx = std::clamp<std::ptrdiff_t>(x - r, 0, w - 1);
            row += img.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy)) ? 1u : 0u;
            at(x + 1, y + 1) = at(x + 1, y) + row;
        }
    }

    const auto majority = static_cast<std::uint32_t>(window * window / 2);
    BinaryImage out(img.width(), img.height());
    for (std::ptrdiff_t y = 0; y < h; ++y) {
        for (std::ptrdiff_t x = 0; x < w; ++x) {
            // Window in padded coordinates spans [x, x + window) x [y, y + window).
            const auto sum = at(x + window, y + window) - at(x, y + window) - at(x + window, y) + at(x, y);
            out.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y), sum > majority);
        }
    }
    return out;
}

GridKind grid_kind_for(FilterFamily family) {
    switch (family) {
        case FilterFamily::HypergraphASF: return GridKind::FourUniformBlocks;
        case FilterFamily::GraphASF: return GridKind::TwoUniformAdjacency;
        case FilterFamily::Median: break;
    }
    throw std::invalid_argument("filter family has no grid hypergraph: " + std::string(to_string(family)));
}

BinaryImage asf_denoise(const BinaryImage& img, FilterFamily family, unsigned lambda) {
    const auto h = build_grid_hypergraph({grid_kind_for(family), img.width(), img.height()});
    const auto x = image_to_subhypergraph(img, h);
    return subhypergraph_to_image(asf(h, x, lambda), img.width(), img.height());
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void mark_best(SweepReport& report) {
    const auto best = std::min_element(report.entries.begin(), report.entries.end(),
                                       [](const auto& a, const auto& b) { return a.mse_percent < b.mse_percent; });
    report.best_index = static_cast<std::size_t>(best - report.entries.begin());
}

}  // namespace

SweepReport run_asf_sweep(const BinaryImage& clean, const BinaryImage& noisy, FilterFamily family,
                          unsigned lambda_max) {
    if (clean.width() != noisy.width() || clean.height() != noisy.height())
        throw DimensionError("clean and noisy images differ in size");
    SweepReport report{family, {}, 0};
    const auto start = Clock::now();
    const auto h = build_grid_hypergraph({grid_kind_for(family), noisy.width(), noisy.height()});
    auto x = image_to_subhypergraph(noisy, h);
    for (unsigned lambda = 0; lambda <= lambda_max; ++lambda) {
        if (lambda > 0) x = asf_step(h, x, lambda);
        const auto filtered = subhypergraph_to_image(x, noisy.width(), noisy.height());
        report.entries.push_back({lambda, mse_percent(filtered, clean), elapsed_ms(start)});
    }
    mark_best(report);
    return report;
}

SweepReport run_median_sweep(const BinaryImage& clean, const BinaryImage& noisy, std::span<const int> windows) {
    if (windows.empty()) throw std::invalid_argument("median sweep needs at least one window size");
    if (clean.width() != noisy.width() || clean.height() != noisy.height())
        throw DimensionError("clean and noisy images differ in size");
    SweepReport report{FilterFamily::Median, {}, 0};
    for (int k : windows) {
        const auto start = Clock::now();
        const auto filtered = median_filter(noisy, k);
        report.entries.push_back({static_cast<unsigned>(k), mse_percent(filtered, clean), elapsed_ms(start)});
    }
    mark_best(report);
    return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    const auto flags = out.flags();
    const auto name = to_string(report.family);
    out << "family,scale,mse_percent,wall_ms\n" << std::fixed;
    for (const auto& e : report.entries)
        out << name << ',' << e.scale << ',' << std::setprecision(4) << e.mse_percent << ','
            << std::setprecision(3) << e.wall_ms << '\n';
    const auto& best = report.best();
    out << "# best," << name << ',' << best.scale << ',' << std::setprecision(4) << best.mse_percent << '\n';
    out.flags(flags);
}

BinaryImage make_test_image(std::size_t width, std::size_t height, std::uint64_t seed) {
    // Sum of random plane waves, thresholded at zero. The field is sampled on
    // a half-resolution lattice and each sample covers a 2x2 pixel block,
    // the way a nearest-neighbour 2x upscale of a binarized photo looks.
    constexpr int kWaves = 20;
    constexpr double kMaxPeriods = 8.0;
    constexpr double kTwoPi = 6.283185307179586;
    struct Wave {
        double fx, fy, phase, amp;
    };
    const double coarse_w = static_cast<double>((width + 1) / 2);
    const double coarse_h = static_cast<double>((height + 1) / 2);
    SplitMix64 rng(seed);
    std::vector<Wave> waves;
    for (int k = 0; k < kWaves; ++k) {
        const double fx = (2.0 * rng.next_unit() - 1.0) * kMaxPeriods * kTwoPi / coarse_w;
        const double fy = (2.0 * rng.next_unit() - 1.0) * kMaxPeriods * kTwoPi / coarse_h;
        const double phase = rng.next_unit() * kTwoPi;
        waves.push_back({fx, fy, phase, 0.5 + rng.next_unit()});
    }

    BinaryImage img(width, height);
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x) {
            const auto cx = static_cast<double>(x / 2);
            const auto cy = static_cast<double>(y / 2);
            double v = 0.0;
            for (const auto& wv : waves) v += wv.amp * std::cos(wv.fx * cx + wv.fy * cy + wv.phase);
            img.set(x, y, v > 0.0);
        }
    return img;
}

}  // namespace hypermorph
