#include "selfevoc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "selfevoc/rng.hpp"

namespace selfevoc {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803u;
constexpr std::uint32_t kLabelsMagic = 0x00000801u;

std::uint32_t read_be_u32(std::istream& in, const std::string& path) {
    unsigned char buf[4];
    in.read(reinterpret_cast<char*>(buf), 4);
    if (!in) throw std::runtime_error("truncated IDX file: " + path);
    return (std::uint32_t(buf[0]) << 24) | (std::uint32_t(buf[1]) << 16) |
           (std::uint32_t(buf[2]) << 8) | std::uint32_t(buf[3]);
}

std::vector<int> read_idx_labels(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open labels file: " + path);
    const std::uint32_t magic = read_be_u32(in, path);
    if (magic != kLabelsMagic)
        throw std::runtime_error("bad IDX label magic in " + path);
    const std::uint32_t n = read_be_u32(in, path);
    std::vector<unsigned char> raw(n);
    in.read(reinterpret_cast<char*>(raw.data()), n);
    if (static_cast<std::uint32_t>(in.gcount()) != n)
        throw std::runtime_error("truncated IDX label file: " + path);
    return std::vector<int>(raw.begin(), raw.end());
}

}  // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
    std::ifstream in(images_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open images file: " + images_path);

    const std::uint32_t magic = read_be_u32(in, images_path);
    if (magic != kImagesMagic)
        throw std::runtime_error("bad IDX image magic in " + images_path);
    const std::uint32_t n = read_be_u32(in, images_path);
    const std::uint32_t h = read_be_u32(in, images_path);
    const std::uint32_t w = read_be_u32(in, images_path);

    Dataset ds;
    ds.name = images_path;
    ds.image_shape = ImageShape{static_cast<int>(h), static_cast<int>(w), 1};
    ds.samples = Matrix(n, static_cast<std::size_t>(h) * w);

    std::vector<unsigned char> rowbuf(static_cast<std::size_t>(h) * w);
    for (std::uint32_t i = 0; i < n; ++i) {
        in.read(reinterpret_cast<char*>(rowbuf.data()), static_cast<std::streamsize>(rowbuf.size()));
        if (static_cast<std::size_t>(in.gcount()) != rowbuf.size())
            throw std::runtime_error("truncated IDX image file: " + images_path);
        double* dst = ds.samples.row(i);
        for (std::size_t j = 0; j < rowbuf.size(); ++j) dst[j] = rowbuf[j] / 255.0;
    }

    if (!labels_path.empty()) {
        std::vector<int> labels = read_idx_labels(labels_path);
        if (labels.size() != n)
            throw std::runtime_error("image/label count mismatch: " + std::to_string(n) + " images vs " +
                                     std::to_string(labels.size()) + " labels");
        ds.true_labels = std::move(labels);
    }
    return ds;
}

Dataset load_csv(const std::string& path, bool labels_in_last_column,
                 std::optional<ImageShape> image_shape) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("bad CSV value '" + cell + "' in " + path);
            }
        }
        if (labels_in_last_column) {
            if (vals.size() < 2) throw std::runtime_error("CSV row too short in " + path);
            const double lv = vals.back();
            vals.pop_back();
            if (lv < 0 || lv != std::floor(lv))
                throw std::runtime_error("non-integer label in " + path);
            labels.push_back(static_cast<int>(lv));
        }
        if (width == 0) width = vals.size();
        if (vals.size() != width) throw std::runtime_error("ragged CSV rows in " + path);
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw std::runtime_error("empty CSV file: " + path);

    Dataset ds;
    ds.name = path;
    ds.samples = Matrix(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), ds.samples.row(i));
    if (labels_in_last_column) ds.true_labels = std::move(labels);
    if (image_shape) {
        if (static_cast<std::size_t>(image_shape->pixels()) != width)
            throw std::runtime_error("image shape does not match CSV width in " + path);
        ds.image_shape = image_shape;
    }
    return ds;
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot write CSV file: " + path);
    const bool with_labels = ds.true_labels.has_value();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double* row = ds.samples.row(i);
        for (std::size_t j = 0; j < ds.dim(); ++j)
            std::fprintf(f, j ? ",%.17g" : "%.17g", row[j]);
        if (with_labels) std::fprintf(f, ",%d", (*ds.true_labels)[i]);
        std::fputc('\n', f);
    }
    std::fclose(f);
}

Dataset synth_blobs(int k, int n_per, int dim, double sep, double noise_sd, std::uint64_t seed) {
    if (k < 1 || n_per < 1 || dim < 1) throw std::invalid_argument("synth_blobs: k, n_per, dim must be positive");
    if (!(sep > 0.0)) throw std::invalid_argument("synth_blobs: sep must be positive");
    if (noise_sd < 0.0) throw std::invalid_argument("synth_blobs: noise_sd must be non-negative");

    Rng rng(seed);
    std::vector<std::vector<double>> centers;
    const int max_attempts = 10000;
    for (int c = 0; c < k; ++c) {
        bool placed = false;
        for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
            std::vector<double> cand(dim);
            for (double& v : cand) v = rng.uniform();
            bool ok = true;
            for (const auto& other : centers) {
                if (std::sqrt(squared_distance(cand.data(), other.data(), dim)) < sep) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                centers.push_back(std::move(cand));
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("synth_blobs: cannot place " + std::to_string(k) +
                                     " centers at separation " + std::to_string(sep) + " in the unit box");
    }

    Dataset ds;
    ds.name = "synth_blobs";
    ds.samples = Matrix(static_cast<std::size_t>(k) * n_per, dim);
    std::vector<int> labels(static_cast<std::size_t>(k) * n_per);
    std::size_t row = 0;
    for (int c = 0; c < k; ++c) {
        for (int s = 0; s < n_per; ++s, ++row) {
            double* dst = ds.samples.row(row);
            for (int d = 0; d < dim; ++d)
                dst[d] = std::clamp(centers[c][d] + rng.normal(0.0, noise_sd), 0.0, 1.0);
            labels[row] = c;
        }
    }
    ds.true_labels = std::move(labels);
    return ds;
}

Dataset subsample(const Dataset& ds, std::size_t n, bool balanced, std::uint64_t seed) {
    if (n > ds.size()) throw std::invalid_argument("subsample: n exceeds dataset size");

    Rng rng(seed);
    std::vector<std::size_t> chosen;
    if (balanced) {
        if (!ds.true_labels) throw std::invalid_argument("subsample: balanced mode requires labels");
        std::map<int, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < ds.size(); ++i) by_class[(*ds.true_labels)[i]].push_back(i);
        const std::size_t classes = by_class.size();
        if (n % classes != 0)
            throw std::invalid_argument("subsample: n must be divisible by the class count");
        const std::size_t per = n / classes;
        for (auto& [cls, members] : by_class) {
            if (members.size() < per)
                throw std::invalid_argument("subsample: class " + std::to_string(cls) +
                                            " has fewer than " + std::to_string(per) + " samples");
            rng.shuffle(members);
            members.resize(per);
            std::sort(members.begin(), members.end());
            chosen.insert(chosen.end(), members.begin(), members.end());
        }
        std::sort(chosen.begin(), chosen.end());
    } else {
        chosen = shuffled_indices(ds.size(), rng);
        chosen.resize(n);
        std::sort(chosen.begin(), chosen.end());
    }

    Dataset out;
    out.name = ds.name;
    out.image_shape = ds.image_shape;
    out.samples = ds.samples.gather_rows(chosen);
    if (ds.true_labels) {
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = (*ds.true_labels)[chosen[i]];
        out.true_labels = std::move(labels);
    }
    return out;
}

}  // namespace selfevoc
