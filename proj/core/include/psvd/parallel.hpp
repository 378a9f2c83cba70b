// Copyright 2026 The psvd Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PSVD_PARALLEL_HPP
#define PSVD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace psvd {

/// Worker count for data-parallel loops: PSVD_THREADS when set (clamped to
/// at least 1), otherwise std::thread::hardware_concurrency().
unsigned worker_count();

/// Runs fn(i) for i in [0, n). Work items must write only to their own
/// output slot; iteration-to-slot assignment is fixed, so results are
/// identical to sequential execution regardless of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace psvd

#endif
