// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_PARALLEL_HPP
#define TGI3D_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tgi {

/// Resolves a worker-count request: 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over disjoint contiguous chunks of [0, n).
///
/// Work items must be independent: every output element is produced by
/// exactly one index, so results cannot depend on the chunking and are
/// bit-identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (n == 0) return;
    const unsigned w = std::min<std::size_t>(resolve_workers(workers), n);
    if (w <= 1) {
        fn(std::size_t{0}, n);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(w);
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const std::size_t chunk = (n + w - 1) / w;
    for (unsigned t = 0; t < w; ++t) {
        const std::size_t begin = std::min(n, static_cast<std::size_t>(t) * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tgi

#endif
