// Copyright 2026 The graphfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHFID_SRC_PARALLEL_HPP
#define GRAPHFID_SRC_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace graphfid::internal {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(block) for every block in [0, num_blocks). Blocks are claimed
/// dynamically; callers must make each block's result independent of
/// execution order (e.g. write into a slot indexed by the block id).
inline void run_blocks(size_t num_blocks, unsigned threads, const std::function<void(size_t)> &fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || num_blocks <= 1) {
        for (size_t b = 0; b < num_blocks; b++) {
            fn(b);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            size_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= num_blocks) {
                return;
            }
            try {
                fn(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = static_cast<unsigned>(std::min<size_t>(threads, num_blocks));
    pool.reserve(count);
    for (unsigned t = 0; t < count; t++) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

/// Sums by recursive halving so the result does not depend on how many
/// workers produced the partials.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 4) {
        double total = 0;
        for (double x : xs) {
            total += x;
        }
        return total;
    }
    size_t half = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace graphfid::internal

#endif
