// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Shearkit Project Contributors

#ifndef SHEARKIT_HASH_HPP
#define SHEARKIT_HASH_HPP

#include <bit>
#include <cstdint>
#include <cstring>

namespace shearkit {

// FNV-1a, 64 bit. Used for system fingerprints and output checksums.
struct Fnv1a64 {
    std::uint64_t state = 0xcbf29ce484222325ULL;

    void bytes(const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            state ^= b[i];
            state *= 0x100000001b3ULL;
        }
    }
    void u32(std::uint32_t v) { bytes(&v, 4); }
    void u64(std::uint64_t v) { bytes(&v, 8); }
    void i32(std::int32_t v) { bytes(&v, 4); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    std::uint64_t digest() const { return state; }
};

// splitmix64 finalizer; the mixing step of the counter-based generators.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace shearkit

#endif  // SHEARKIT_HASH_HPP
