#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mshare {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixes a 64-bit value into a well-distributed state (splitmix64 finalizer).
// Used to derive independent child seeds from (master seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master) ^ mix64(index + 0x51ed2701ULL));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

} // namespace mshare
