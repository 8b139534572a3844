#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace selfevoc {

std::uint64_t splitmix64(std::uint64_t& state);

// Seeded generator with platform-independent output. mt19937_64 is fully
// specified by the standard; the distribution transforms below are our own
// because std::uniform_real_distribution et al. are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    // [0,1) with 53 bits of mantissa
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased integer in [0,n)
    std::size_t uniform_index(std::size_t n);

    double normal(double mean = 0.0, double sd = 1.0);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Independent substream; deterministic in (seed, stream_id).
    Rng split(std::uint64_t stream_id) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng);

}  // namespace selfevoc
