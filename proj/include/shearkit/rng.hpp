// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Shearkit Project Contributors

#ifndef SHEARKIT_RNG_HPP
#define SHEARKIT_RNG_HPP

#include <cmath>
#include <cstdint>

#include "shearkit/hash.hpp"

namespace shearkit {

// Counter-based generator: value i of stream `seed` is a pure function of
// (seed, i). Bit-reproducible across platforms and safe to evaluate from
// any number of threads.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

    std::uint64_t bits(std::uint64_t counter) const { return mix64(seed_ ^ mix64(counter)); }

    /// Uniform double in (0, 1].
    double uniform(std::uint64_t counter) const {
        return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (cosine branch).
    double normal(std::uint64_t counter) const {
        const double u1 = uniform(2 * counter);
        const double u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

  private:
    std::uint64_t seed_;
};

}  // namespace shearkit

#endif  // SHEARKIT_RNG_HPP
