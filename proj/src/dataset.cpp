#include "fusionface/dataset.hpp"

#include "fusionface/dct.hpp"
#include "fusionface/errors.hpp"
#include "fusionface/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace fusionface {

namespace fs = std::filesystem;

std::vector<int> Dataset::labels() const {
    std::set<int> seen;
    for (const auto& item : items) seen.insert(item.label);
    return {seen.begin(), seen.end()};
}

namespace {

constexpr int kOrlImagesPerSubject = 10;

// Parses "s<k>" directory names; returns 0 for anything else.
int subject_number(const std::string& name) {
    if (name.size() < 2 || name[0] != 's') return 0;
    int value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
        value = value * 10 + (name[i] - '0');
        if (value > 1'000'000) return 0;
    }
    return value;
}

} // namespace

Dataset load_orl_dataset(const std::string& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec) || ec)
        throw DataError("dataset root is not a readable directory: " + root);

    std::map<int, fs::path> subjects;
    for (const auto& entry : fs::directory_iterator(root, ec)) {
        if (!entry.is_directory()) continue;
        if (int num = subject_number(entry.path().filename().string()); num > 0)
            subjects[num] = entry.path();
    }
    if (ec) throw DataError("cannot list dataset root: " + root);
    if (subjects.empty()) throw DataError("no subjects found under " + root);

    Dataset ds;
    ds.items.reserve(subjects.size() * kOrlImagesPerSubject);
    for (const auto& [label, dir] : subjects) {
        for (int idx = 1; idx <= kOrlImagesPerSubject; ++idx) {
            fs::path file = dir / (std::to_string(idx) + ".pgm");
            if (!fs::exists(file))
                throw DataError("subject " + dir.filename().string() + " has fewer than " +
                                std::to_string(kOrlImagesPerSubject) + " images: missing " + file.string());
            PgmImage pgm = read_pgm_file(file.string());
            ds.items.push_back({canonicalize(pgm.pixels, file.string()), label});
        }
    }
    ds.class_count = static_cast<int>(subjects.size());
    return ds;
}

namespace {

// Deterministic uniform double in [lo, hi) from the raw engine stream;
// avoids std::uniform_real_distribution, whose output is
// implementation-defined.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

} // namespace

Dataset synthesize_dataset(int n_classes, int images_per_class, std::uint64_t seed) {
    if (n_classes < 2 || n_classes > kPixelCount - 1)
        throw std::invalid_argument("synthesize_dataset: n_classes must lie in [2, " +
                                    std::to_string(kPixelCount - 1) + "]");
    if (images_per_class < 2)
        throw std::invalid_argument("synthesize_dataset: images_per_class must be >= 2");

    // Class k's base pattern is the k-th lowest-frequency 2-D cosine mode
    // (zigzag order, DC skipped), so any two classes differ along orthogonal
    // directions by far more than the per-image perturbation.
    const auto modes = zigzag_indices(kImageSize);
    const double pi = std::acos(-1.0);

    std::mt19937_64 rng(seed);
    Dataset ds;
    ds.items.reserve(static_cast<std::size_t>(n_classes) * images_per_class);
    for (int cls = 1; cls <= n_classes; ++cls) {
        const auto [fu, fv] = modes[static_cast<std::size_t>(cls)];
        const double offset = uniform(rng, -15.0, 15.0);

        Eigen::MatrixXd base(kImageSize, kImageSize);
        for (int r = 0; r < kImageSize; ++r)
            for (int c = 0; c < kImageSize; ++c)
                base(r, c) = 128.0 + offset +
                             60.0 * std::cos((2 * r + 1) * fu * pi / (2.0 * kImageSize)) *
                                 std::cos((2 * c + 1) * fv * pi / (2.0 * kImageSize));

        for (int idx = 1; idx <= images_per_class; ++idx) {
            const double gain = uniform(rng, 0.95, 1.05);
            FaceImage img;
            img.source_id = "synth/s" + std::to_string(cls) + "/" + std::to_string(idx);
            img.pixels.resize(kImageSize, kImageSize);
            for (int r = 0; r < kImageSize; ++r)
                for (int c = 0; c < kImageSize; ++c) {
                    const double noise = uniform(rng, -6.0, 6.0);
                    const double v = 128.0 + offset + gain * (base(r, c) - 128.0 - offset) + noise;
                    img.pixels(r, c) = std::clamp(v, 0.0, 255.0);
                }
            ds.items.push_back({std::move(img), cls});
        }
    }
    ds.class_count = n_classes;
    return ds;
}

void write_dataset_pgm_tree(const Dataset& ds, const std::string& root) {
    std::map<int, int> next_index;
    for (const auto& item : ds.items) {
        fs::path dir = fs::path(root) / ("s" + std::to_string(item.label));
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw DataError("cannot create directory: " + dir.string());
        const int idx = ++next_index[item.label];
        PgmImage pgm{item.image.pixels, 255};
        write_pgm_file((dir / (std::to_string(idx) + ".pgm")).string(), pgm);
    }
}

} // namespace fusionface
