// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Shearkit Project Contributors

#include "shearkit/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shearkit {

void set_max_threads(int n) {
#ifdef _OPENMP
    if (n >= 1) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace shearkit
