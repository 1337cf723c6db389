// Copyright 2026 The mnrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mnrisk {

/// 0 means "one worker per hardware thread".
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(chunk) for chunk in [0, chunks) on up to `workers` threads.
/// Chunks are claimed dynamically; callers write per-chunk results into
/// pre-sized storage and reduce in chunk order, which keeps results
/// independent of the worker count. The first exception is rethrown.
template <class Fn>
void parallel_for_chunks(std::size_t chunks, unsigned workers, Fn&& fn) {
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), chunks));
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) return;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(chunks, std::memory_order_relaxed);
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads - 1);
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(body);
        body();
    }
    if (error) std::rethrow_exception(error);
}

} // namespace mnrisk
