#ifndef FUSIONFACE_IMAGE_HPP
#define FUSIONFACE_IMAGE_HPP

#include <Eigen/Core>
#include <string>

namespace fusionface {

/// Canonical image side length; every pipeline input is a 48x48 gray-level
/// matrix flattened to a 2304-vector.
inline constexpr int kImageSize = 48;
inline constexpr int kPixelCount = kImageSize * kImageSize;

/// A canonicalized face image: 48x48 gray levels in [0, 255] plus an opaque
/// source tag (file path or synthetic id).
struct FaceImage {
    Eigen::MatrixXd pixels; // kImageSize x kImageSize
    std::string source_id;
};

/// Resamples an H x W gray-level matrix (H, W >= 2) to 48x48 by bilinear
/// interpolation with corner-aligned mapping: output (r, c) samples the
/// source at (r*(H-1)/47, c*(W-1)/47). Output values are clamped to [0, 255].
Eigen::MatrixXd resize_bilinear(const Eigen::MatrixXd& src);

/// Row-major flatten: element 48*r + c of the result is pixel (r, c).
Eigen::VectorXd flatten(const FaceImage& img);

/// Inverse of flatten.
FaceImage unflatten(const Eigen::VectorXd& v, std::string source_id = {});

/// Builds a FaceImage from an arbitrary gray-level matrix, resizing when the
/// input is not already 48x48.
FaceImage canonicalize(const Eigen::MatrixXd& gray, std::string source_id);

} // namespace fusionface

#endif // FUSIONFACE_IMAGE_HPP
