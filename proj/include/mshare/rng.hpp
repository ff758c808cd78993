#pragma once

#include "mshare/common.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mshare {

/// Deterministic random source. Wraps std::mt19937_64 but performs all
/// distribution sampling by hand so that a given seed produces the same
/// stream on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Log-uniform integer in [lo, hi], lo >= 1.
    std::int64_t log_uniform_int(std::int64_t lo, std::int64_t hi) {
        const double u = uniform(std::log(static_cast<double>(lo)),
                                 std::log(static_cast<double>(hi) + 1.0));
        auto v = static_cast<std::int64_t>(std::exp(u));
        return v < lo ? lo : (v > hi ? hi : v);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Standard normal via Box-Muller (no cached spare, keeps state minimal).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n), in random order.
    std::vector<int> sample_indices(int n, int k) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            idx[static_cast<std::size_t>(i)] = i;
        }
        if (k >= n) {
            return idx;
        }
        for (int i = 0; i < k; ++i) {
            const auto j = static_cast<std::size_t>(uniform_int(i, n - 1));
            std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        }
        idx.resize(static_cast<std::size_t>(k));
        return idx;
    }

    /// Independent generator for (master seed, index).
    static Rng forked(std::uint64_t master, std::uint64_t index) {
        return Rng(derive_seed(master, index));
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace mshare
