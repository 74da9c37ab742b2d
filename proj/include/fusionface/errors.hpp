#ifndef FUSIONFACE_ERRORS_HPP
#define FUSIONFACE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionface {

/// Malformed input bytes (PGM headers, model dumps, weight strings).
/// Carries the byte offset at which parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Structurally valid input that violates a dataset/experiment contract
/// (missing files, too few images, insufficient subjects for a split).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fusionface

#endif // FUSIONFACE_ERRORS_HPP
