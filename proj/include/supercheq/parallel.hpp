// Copyright 2026 The supercheq-sim authors
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

#ifndef SUPERCHEQ_PARALLEL_HPP
#define SUPERCHEQ_PARALLEL_HPP

#include <atomic>
#include <future>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "supercheq/errors.hpp"

namespace supercheq {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates fn(0..count-1) with up to `jobs` worker threads and returns the
/// results in index order. Each call must be independent, so the output is
/// identical for every jobs value (result placement is by index, not by
/// completion order).
template <typename F>
auto parallel_map(std::size_t count, int jobs, F&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    jobs = resolve_jobs(jobs);
    std::vector<std::optional<R>> slots(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                slots[i].emplace(fn(i));
            }
        };
        std::vector<std::future<void>> futures;
        const int workers = std::min<int>(jobs, static_cast<int>(count));
        futures.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, worker));
        }
        for (auto& f : futures) f.get();  // rethrows worker exceptions
    }
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        check_invariant(slots[i].has_value(), "parallel_map: missing result");
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_PARALLEL_HPP
