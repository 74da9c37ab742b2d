#ifndef FUSIONFACE_PGM_HPP
#define FUSIONFACE_PGM_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace fusionface {

/// A decoded binary (P5) PGM image. `pixels` is height x width with values
/// in [0, maxval]; row 0 is the top scanline.
struct PgmImage {
    Eigen::MatrixXd pixels;
    int maxval = 255;

    long rows() const { return pixels.rows(); }
    long cols() const { return pixels.cols(); }
};

/// Decodes a binary PGM (magic "P5", maxval <= 255). Header tokens may be
/// separated by arbitrary whitespace and '#' comment lines are skipped.
/// Throws ParseError naming the byte offset on malformed input.
PgmImage parse_pgm(const std::vector<std::uint8_t>& bytes);

/// Encodes with the minimal header "P5\n<w> <h>\n<maxval>\n" followed by the
/// row-major payload, so serialize_pgm(parse_pgm(b)) == b for minimal-header
/// inputs. Pixel values are truncated to integers and clamped to [0, maxval].
std::vector<std::uint8_t> serialize_pgm(const PgmImage& img);

/// File wrappers. read_pgm_file prefixes parse errors with the path.
PgmImage read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const PgmImage& img);

} // namespace fusionface

#endif // FUSIONFACE_PGM_HPP
