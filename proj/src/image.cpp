#include "fusionface/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fusionface {

Eigen::MatrixXd resize_bilinear(const Eigen::MatrixXd& src) {
    const long h = src.rows();
    const long w = src.cols();
    if (h < 2 || w < 2)
        throw std::invalid_argument("resize_bilinear: source must be at least 2x2, got " +
                                    std::to_string(h) + "x" + std::to_string(w));

    Eigen::MatrixXd out(kImageSize, kImageSize);
    const double row_scale = static_cast<double>(h - 1) / (kImageSize - 1);
    const double col_scale = static_cast<double>(w - 1) / (kImageSize - 1);
    for (int r = 0; r < kImageSize; ++r) {
        const double sr = r * row_scale;
        const long r0 = std::min(static_cast<long>(sr), h - 2);
        const double fr = sr - static_cast<double>(r0);
        for (int c = 0; c < kImageSize; ++c) {
            const double sc = c * col_scale;
            const long c0 = std::min(static_cast<long>(sc), w - 2);
            const double fc = sc - static_cast<double>(c0);
            const double top = (1.0 - fc) * src(r0, c0) + fc * src(r0, c0 + 1);
            const double bot = (1.0 - fc) * src(r0 + 1, c0) + fc * src(r0 + 1, c0 + 1);
            out(r, c) = std::clamp((1.0 - fr) * top + fr * bot, 0.0, 255.0);
        }
    }
    return out;
}

Eigen::VectorXd flatten(const FaceImage& img) {
    Eigen::VectorXd v(kPixelCount);
    for (int r = 0; r < kImageSize; ++r)
        for (int c = 0; c < kImageSize; ++c)
            v(kImageSize * r + c) = img.pixels(r, c);
    return v;
}

FaceImage unflatten(const Eigen::VectorXd& v, std::string source_id) {
    if (v.size() != kPixelCount)
        throw std::invalid_argument("unflatten: expected " + std::to_string(kPixelCount) +
                                    " elements, got " + std::to_string(v.size()));
    FaceImage img;
    img.source_id = std::move(source_id);
    img.pixels.resize(kImageSize, kImageSize);
    for (int r = 0; r < kImageSize; ++r)
        for (int c = 0; c < kImageSize; ++c)
            img.pixels(r, c) = v(kImageSize * r + c);
    return img;
}

FaceImage canonicalize(const Eigen::MatrixXd& gray, std::string source_id) {
    FaceImage img;
    img.source_id = std::move(source_id);
    if (gray.rows() == kImageSize && gray.cols() == kImageSize)
        img.pixels = gray.cwiseMax(0.0).cwiseMin(255.0);
    else
        img.pixels = resize_bilinear(gray);
    return img;
}

} // namespace fusionface
