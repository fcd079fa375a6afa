// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Shearkit Project Contributors

#ifndef SHEARKIT_PARALLEL_HPP
#define SHEARKIT_PARALLEL_HPP

namespace shearkit {

/// Caps the number of OpenMP threads used by the library (no-op without OpenMP).
void set_max_threads(int n);

/// Current thread cap (1 without OpenMP).
int max_threads();

}  // namespace shearkit

#endif  // SHEARKIT_PARALLEL_HPP
