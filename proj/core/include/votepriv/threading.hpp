// Copyright 2026 The votepriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef VOTEPRIV_THREADING_HPP_
#define VOTEPRIV_THREADING_HPP_

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace votepriv {

// Runs fn(i) for i in [0, count) on up to `jobs` worker threads and collects
// the results by index, so the output order never depends on scheduling.
// Tasks must be pure with respect to shared state (every delta computation
// here is). The first exception, if any, is rethrown on the caller.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, int jobs,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(count);
  if (count == 0) return results;
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          results[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          break;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

// Default worker count: hardware parallelism, at least 1.
inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace votepriv

#endif  // VOTEPRIV_THREADING_HPP_
