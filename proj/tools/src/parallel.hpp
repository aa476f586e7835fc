// Copyright 2026 The litgec Authors
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
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace litgec::cli {

/// out[k] = fn(in[k]) on up to `jobs` threads. Each worker takes a
/// contiguous slice, so results land in input order; the first exception is
/// rethrown after all workers finish.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& in, unsigned jobs, Fn fn) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, in.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = fn(in[k]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (in.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t end = std::min(in.size(), (w + 1) * chunk);
        for (std::size_t k = w * chunk; k < end; ++k) out[k] = fn(in[k]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace litgec::cli
