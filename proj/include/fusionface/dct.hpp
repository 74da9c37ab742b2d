#ifndef FUSIONFACE_DCT_HPP
#define FUSIONFACE_DCT_HPP

#include "fusionface/image.hpp"

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fusionface {

/// DCT-II normalization factor: sqrt(1/N) for u = 0, sqrt(2/N) otherwise.
inline double alpha_coef(int u, int n) {
    if (n < 1 || u < 0 || u >= n)
        throw std::invalid_argument("alpha_coef: u must lie in [0, N), got u=" + std::to_string(u) +
                                    " N=" + std::to_string(n));
    return u == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
}

/// The orthonormal N x N DCT-II matrix D with D(u, x) = alpha(u) *
/// cos((2x+1)u*pi / 2N). dct_1d(f) = D*f and D's transpose is its inverse.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dct_matrix(int n) {
    if (n < 1) throw std::invalid_argument("dct_matrix: N must be positive");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d(n, n);
    const double pi = std::acos(-1.0);
    for (int u = 0; u < n; ++u) {
        const double a = alpha_coef(u, n);
        for (int x = 0; x < n; ++x)
            d(u, x) = static_cast<Scalar>(a * std::cos((2 * x + 1) * u * pi / (2.0 * n)));
    }
    return d;
}

/// Forward 1-D DCT of a length-N sequence.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> dct_1d(const Eigen::MatrixBase<Derived>& f) {
    if (f.size() == 0) throw std::invalid_argument("dct_1d: empty input");
    const int n = static_cast<int>(f.size());
    return dct_matrix<typename Derived::Scalar>(n) * f.reshaped();
}

/// Inverse 1-D DCT; exact inverse of dct_1d.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> idct_1d(const Eigen::MatrixBase<Derived>& coeffs) {
    if (coeffs.size() == 0) throw std::invalid_argument("idct_1d: empty input");
    const int n = static_cast<int>(coeffs.size());
    return dct_matrix<typename Derived::Scalar>(n).transpose() * coeffs.reshaped();
}

/// Forward 2-D DCT of a square block, computed separably as D * B * D^T.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
dct_2d(const Eigen::MatrixBase<Derived>& block) {
    if (block.rows() != block.cols() || block.rows() == 0)
        throw std::invalid_argument("dct_2d: block must be square and non-empty");
    const auto d = dct_matrix<typename Derived::Scalar>(static_cast<int>(block.rows()));
    return d * block * d.transpose();
}

/// Inverse 2-D DCT; exact inverse of dct_2d.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
idct_2d(const Eigen::MatrixBase<Derived>& coeffs) {
    if (coeffs.rows() != coeffs.cols() || coeffs.rows() == 0)
        throw std::invalid_argument("idct_2d: block must be square and non-empty");
    const auto d = dct_matrix<typename Derived::Scalar>(static_cast<int>(coeffs.rows()));
    return d.transpose() * coeffs * d;
}

/// JPEG-style zigzag traversal of an N x N grid: anti-diagonals from (0,0),
/// odd diagonals walked with ascending row index, even ones descending.
/// Returns all N^2 (row, col) pairs, lowest frequencies first.
inline std::vector<std::pair<int, int>> zigzag_indices(int n) {
    if (n < 1) throw std::invalid_argument("zigzag_indices: N must be positive");
    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<std::size_t>(n) * n);
    for (int s = 0; s <= 2 * (n - 1); ++s) {
        const int lo = std::max(0, s - (n - 1));
        const int hi = std::min(s, n - 1);
        if (s % 2 == 1) {
            for (int u = lo; u <= hi; ++u) order.emplace_back(u, s - u);
        } else {
            for (int u = hi; u >= lo; --u) order.emplace_back(u, s - u);
        }
    }
    return order;
}

/// Block DCT feature configuration: the image is cut into block_size^2 tiles
/// and the first coeffs_per_block zigzag coefficients of each are kept.
struct DctFeatureConfig {
    int block_size = 8;
    int coeffs_per_block = 6;

    void validate() const {
        if (block_size < 1 || kImageSize % block_size != 0)
            throw std::invalid_argument("DctFeatureConfig: block_size must divide " +
                                        std::to_string(kImageSize));
        if (coeffs_per_block < 1 || coeffs_per_block > block_size * block_size)
            throw std::invalid_argument("DctFeatureConfig: coeffs_per_block out of [1, block_size^2]");
    }

    int blocks_per_side() const { return kImageSize / block_size; }
    int feature_length() const { return blocks_per_side() * blocks_per_side() * coeffs_per_block; }
};

/// Feature set F2: per-block 2-D DCT coefficients in zigzag order, blocks
/// concatenated row-major. Default config yields 36 blocks x 6 coeffs = 216.
inline Eigen::VectorXd extract_dct_features(const FaceImage& img, const DctFeatureConfig& cfg = {}) {
    cfg.validate();
    const int bs = cfg.block_size;
    const int nb = cfg.blocks_per_side();
    const auto zz = zigzag_indices(bs);
    const Eigen::MatrixXd d = dct_matrix(bs);

    Eigen::VectorXd out(cfg.feature_length());
    int at = 0;
    for (int br = 0; br < nb; ++br) {
        for (int bc = 0; bc < nb; ++bc) {
            Eigen::MatrixXd coeffs = d * img.pixels.block(br * bs, bc * bs, bs, bs) * d.transpose();
            for (int i = 0; i < cfg.coeffs_per_block; ++i)
                out(at++) = coeffs(zz[static_cast<std::size_t>(i)].first,
                                   zz[static_cast<std::size_t>(i)].second);
        }
    }
    return out;
}

} // namespace fusionface

#endif // FUSIONFACE_DCT_HPP
