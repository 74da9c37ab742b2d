#include "fusionface/pgm.hpp"

#include "fusionface/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

namespace fusionface {

namespace {

// Cursor over the header bytes. Tracks the offset so errors can name it.
struct Cursor {
    const std::vector<std::uint8_t>& bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    std::uint8_t peek() const { return bytes[pos]; }

    void skip_ws_and_comments() {
        while (!eof()) {
            std::uint8_t c = peek();
            if (std::isspace(c)) {
                ++pos;
            } else if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    // Reads an unsigned decimal token. The offset reported on failure is the
    // position of the first offending byte.
    long read_uint(const char* field) {
        skip_ws_and_comments();
        if (eof()) throw ParseError(std::string("unexpected end of header while reading ") + field, pos);
        if (!std::isdigit(peek()))
            throw ParseError(std::string("non-numeric ") + field + " field", pos);
        long value = 0;
        while (!eof() && std::isdigit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000L)
                throw ParseError(std::string(field) + " field out of range", pos);
            ++pos;
        }
        return value;
    }
};

} // namespace

PgmImage parse_pgm(const std::vector<std::uint8_t>& bytes) {
    Cursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw ParseError("malformed magic, expected \"P5\"", 0);
    cur.pos = 2;

    long width = cur.read_uint("width");
    long height = cur.read_uint("height");
    long maxval = cur.read_uint("maxval");
    if (width <= 0 || height <= 0)
        throw ParseError("image dimensions must be positive", cur.pos);
    if (maxval <= 0 || maxval > 255)
        throw ParseError("maxval " + std::to_string(maxval) + " out of range [1, 255]", cur.pos);

    // Exactly one whitespace byte separates the header from the payload.
    if (cur.eof() || !std::isspace(cur.peek()))
        throw ParseError("expected single whitespace byte before payload", cur.pos);
    ++cur.pos;

    std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - cur.pos < need)
        throw ParseError("truncated payload: need " + std::to_string(need) + " bytes, have " +
                             std::to_string(bytes.size() - cur.pos),
                         bytes.size());

    PgmImage img;
    img.maxval = static_cast<int>(maxval);
    img.pixels.resize(height, width);
    for (long r = 0; r < height; ++r)
        for (long c = 0; c < width; ++c)
            img.pixels(r, c) = static_cast<double>(bytes[cur.pos + static_cast<std::size_t>(r * width + c)]);
    return img;
}

std::vector<std::uint8_t> serialize_pgm(const PgmImage& img) {
    char header[64];
    int n = std::snprintf(header, sizeof(header), "P5\n%ld %ld\n%d\n", img.cols(), img.rows(), img.maxval);
    std::vector<std::uint8_t> out(header, header + n);
    out.reserve(out.size() + static_cast<std::size_t>(img.rows() * img.cols()));
    for (long r = 0; r < img.rows(); ++r) {
        for (long c = 0; c < img.cols(); ++c) {
            double v = std::floor(img.pixels(r, c));
            v = std::max(0.0, std::min(static_cast<double>(img.maxval), v));
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

PgmImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open PGM file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_pgm(bytes);
    } catch (const ParseError& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_pgm_file(const std::string& path, const PgmImage& img) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open file for writing: " + path);
    auto bytes = serialize_pgm(img);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("short write: " + path);
}

} // namespace fusionface
