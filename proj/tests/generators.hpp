// Copyright 2026 The pilab Authors
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

// Hand-rolled random generators for property tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pilab/core.hpp"

namespace pilab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Ranking ranking(int n) {
    std::vector<Candidate> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);
    return Ranking(order);
  }

  Profile profile(int n, int m) {
    std::vector<Ranking> ballots;
    for (int i = 0; i < m; ++i) ballots.push_back(ranking(n));
    return Profile(n, ballots);
  }

  // Profiles with few distinct ballots, so that ties and repeats are common.
  Profile clumpy_profile(int n, int m) {
    std::vector<Ranking> pool;
    const int k = uniform(1, 3);
    for (int i = 0; i < k; ++i) pool.push_back(ranking(n));
    std::vector<Ranking> ballots;
    for (int i = 0; i < m; ++i) {
      ballots.push_back(coin() ? pool[uniform(0, k - 1)] : ranking(n));
    }
    return Profile(n, ballots);
  }

  MarginGraph graph(int n, const std::vector<int>& values) {
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (Candidate a = 0; a < n; ++a) {
      for (Candidate b = a + 1; b < n; ++b) {
        const int v = values[uniform(0, static_cast<int>(values.size()) - 1)];
        m[a * n + b] = v;
        m[b * n + a] = -v;
      }
    }
    return MarginGraph(n, std::move(m), MarginGraph::kAnyParity);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Profile profile_of(int n, std::initializer_list<std::pair<int, std::vector<Candidate>>> groups) {
  std::vector<Ranking> ballots;
  for (const auto& [count, order] : groups) {
    for (int k = 0; k < count; ++k) ballots.emplace_back(order);
  }
  return Profile(n, ballots);
}

}  // namespace pilab::testing
