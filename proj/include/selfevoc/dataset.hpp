#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfevoc/matrix.hpp"

namespace selfevoc {

struct ImageShape {
    int height = 0;
    int width = 0;
    int channels = 0;
    int pixels() const { return height * width * channels; }
};

struct Dataset {
    Matrix samples;  // N x D, values in [0,1]
    std::optional<ImageShape> image_shape;
    std::optional<std::vector<int>> true_labels;  // evaluation only
    std::string name;

    std::size_t size() const { return samples.rows(); }
    std::size_t dim() const { return samples.cols(); }
};

// IDX binary format: big-endian magic 0x00000803 (images) / 0x00000801
// (labels), then dimension sizes, then unsigned bytes. Pixels are divided
// by 255. An empty labels_path loads images only.
Dataset load_idx(const std::string& images_path, const std::string& labels_path = "");

// CSV fallback: comma-separated floats, optional integer label in the last
// column, no header. image_shape (h*w*c == D) may be supplied for datasets
// whose rows are flattened images.
Dataset load_csv(const std::string& path, bool labels_in_last_column,
                 std::optional<ImageShape> image_shape = std::nullopt);

// Writes the CSV form above with enough digits to round-trip bit-exactly.
void save_csv(const Dataset& ds, const std::string& path);

// K isotropic Gaussian clouds in [0,1]^dim, centers at pairwise distance
// >= sep, samples clipped to the unit box. true_labels = generating cloud.
Dataset synth_blobs(int k, int n_per, int dim, double sep, double noise_sd, std::uint64_t seed);

// Seed-deterministic subset. Balanced mode draws n / #classes samples from
// each true class and requires labels.
Dataset subsample(const Dataset& ds, std::size_t n, bool balanced, std::uint64_t seed);

}  // namespace selfevoc
