// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rankgauge {

/// Runs body(i) for i in [0, count) on up to `threads` workers. The exception from
/// the lowest failing index is rethrown after all workers join.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &body) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
    if(workers <= 1) {
        for(std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t>        next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread>        pool;
    pool.reserve(workers);
    for(std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for(std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch(...) { errors[i] = std::current_exception(); }
            }
        });
    }
    for(auto &t : pool) t.join();
    for(auto &e : errors)
        if(e) std::rethrow_exception(e);
}

} // namespace rankgauge
