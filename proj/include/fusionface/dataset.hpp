#ifndef FUSIONFACE_DATASET_HPP
#define FUSIONFACE_DATASET_HPP

#include "fusionface/image.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusionface {

/// A canonical image tagged with its subject id (positive integer).
struct LabeledImage {
    FaceImage image;
    int label = 0;
};

/// Immutable image collection. Items are ordered by label ascending, then by
/// per-subject image index, and class_count equals the number of distinct
/// labels. Construction goes through the loader/generator functions below,
/// which maintain both invariants.
struct Dataset {
    std::vector<LabeledImage> items;
    int class_count = 0;

    std::size_t size() const { return items.size(); }

    /// Distinct labels in ascending order.
    std::vector<int> labels() const;
};

/// Loads an ORL-layout tree: subdirectories s1, s2, ... each holding
/// 1.pgm .. 10.pgm. Missing subject directories are tolerated; a present
/// subject with fewer than ten images is an error. Images are canonicalized
/// to 48x48 and labeled with the subject number.
Dataset load_orl_dataset(const std::string& root);

/// Deterministic synthetic dataset: class k gets a distinct low-frequency
/// cosine base pattern plus a per-class intensity offset; each image adds a
/// small seeded amplitude jitter and pixel noise, so classes stay linearly
/// separable in pixel space. Identical seeds produce identical datasets.
Dataset synthesize_dataset(int n_classes, int images_per_class, std::uint64_t seed);

/// Writes `ds` as an ORL-layout PGM tree under `root` (creating directories).
void write_dataset_pgm_tree(const Dataset& ds, const std::string& root);

} // namespace fusionface

#endif // FUSIONFACE_DATASET_HPP
