#ifndef FUSIONFACE_STATFEAT_HPP
#define FUSIONFACE_STATFEAT_HPP

#include "fusionface/image.hpp"

#include <Eigen/Core>

namespace fusionface {

/// Gray-level histogram configuration: `bins` equal-width bins over [0, 256).
/// bins must divide 256.
struct HistogramConfig {
    int bins = 32;

    void validate() const;
    int bin_width() const { return 256 / bins; }
    int feature_length() const { return 2 * bins; }
};

/// Feature set F3. First `bins` entries are bin probabilities n_k / n over
/// truncation-quantized gray levels; last `bins` entries are the bin
/// mid-values (k + 0.5) * 256 / bins rescaled by 1/256 so both halves share
/// the [0, 1] scale.
Eigen::VectorXd histogram_features(const FaceImage& img, const HistogramConfig& cfg = {});

/// Feature set F4: (mean, median, mode) of the truncation-quantized gray
/// levels, each divided by 255. Median of the even pixel count is the
/// midpoint of the two central order statistics; mode ties break toward the
/// lowest level.
Eigen::Vector3d intensity_features(const FaceImage& img);

} // namespace fusionface

#endif // FUSIONFACE_STATFEAT_HPP
