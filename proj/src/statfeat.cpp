#include "fusionface/statfeat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fusionface {

namespace {

int quantize(double v) {
    int q = static_cast<int>(std::floor(v));
    return std::clamp(q, 0, 255);
}

// Counts of each quantized gray level, index = level.
std::array<long, 256> level_counts(const FaceImage& img) {
    std::array<long, 256> counts{};
    for (long r = 0; r < img.pixels.rows(); ++r)
        for (long c = 0; c < img.pixels.cols(); ++c)
            ++counts[static_cast<std::size_t>(quantize(img.pixels(r, c)))];
    return counts;
}

} // namespace

void HistogramConfig::validate() const {
    if (bins < 1 || bins > 256 || 256 % bins != 0)
        throw std::invalid_argument("HistogramConfig: bins must divide 256 and lie in [1, 256], got " +
                                    std::to_string(bins));
}

Eigen::VectorXd histogram_features(const FaceImage& img, const HistogramConfig& cfg) {
    cfg.validate();
    const auto counts = level_counts(img);
    const long n = img.pixels.size();
    const int width = cfg.bin_width();

    Eigen::VectorXd out(cfg.feature_length());
    for (int k = 0; k < cfg.bins; ++k) {
        long nk = 0;
        for (int level = k * width; level < (k + 1) * width; ++level)
            nk += counts[static_cast<std::size_t>(level)];
        out(k) = static_cast<double>(nk) / static_cast<double>(n);
        out(cfg.bins + k) = (k + 0.5) * width / 256.0;
    }
    return out;
}

Eigen::Vector3d intensity_features(const FaceImage& img) {
    const auto counts = level_counts(img);
    const long n = img.pixels.size();

    long sum = 0;
    for (int level = 0; level < 256; ++level)
        sum += counts[static_cast<std::size_t>(level)] * level;
    const double mean = static_cast<double>(sum) / static_cast<double>(n);

    // Order statistics straight from the counts; n is even by construction,
    // so the median averages ranks n/2 and n/2 + 1.
    auto level_at_rank = [&](long rank) {
        long seen = 0;
        for (int level = 0; level < 256; ++level) {
            seen += counts[static_cast<std::size_t>(level)];
            if (seen >= rank) return level;
        }
        return 255;
    };
    const double median = (n % 2 == 0)
                              ? 0.5 * (level_at_rank(n / 2) + level_at_rank(n / 2 + 1))
                              : static_cast<double>(level_at_rank(n / 2 + 1));

    int mode = 0;
    for (int level = 1; level < 256; ++level)
        if (counts[static_cast<std::size_t>(level)] > counts[static_cast<std::size_t>(mode)]) mode = level;

    return {mean / 255.0, median / 255.0, mode / 255.0};
}

} // namespace fusionface
