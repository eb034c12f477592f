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

#include <algorithm>
#include <numeric>
#include <string>

#include "pilab/core.hpp"
#include "pilab/error.hpp"

namespace pilab {

namespace {

void check_candidate_count(int n) {
  if (n < 1 || n > kMaxCandidates) {
    throw InvalidArgument("candidate count must be in [1, " +
                          std::to_string(kMaxCandidates) + "], got " + std::to_string(n));
  }
}

}  // namespace

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)) {
  const int n = size();
  check_candidate_count(n);
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    const Candidate c = order_[k];
    if (c < 0 || c >= n || rank_[c] != 0) {
      throw InvalidArgument("ranking is not a permutation of 0.." + std::to_string(n - 1));
    }
    rank_[c] = k + 1;
  }
}

Ranking Ranking::identity(int n) {
  check_candidate_count(n);
  std::vector<Candidate> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

Ranking Ranking::reversed() const {
  return Ranking(std::vector<Candidate>(order_.rbegin(), order_.rend()));
}

bool BallotView::same_order(const BallotView& other) const {
  return std::equal(order_.begin(), order_.end(), other.order_.begin(), other.order_.end());
}

Ranking BallotView::to_ranking() const {
  return Ranking(std::vector<Candidate>(order_.begin(), order_.end()));
}

Profile::Profile(int n_candidates, std::span<const Ranking> ballots)
    : Profile(n_candidates, ballots, {}) {}

Profile::Profile(int n_candidates, std::span<const Ranking> ballots,
                 std::vector<std::uint64_t> original_ids)
    : n_(n_candidates), ids_(std::move(original_ids)) {
  check_candidate_count(n_candidates);
  if (ballots.empty()) throw InvalidArgument("a profile needs at least one ballot");
  if (ids_.empty()) {
    ids_.resize(ballots.size());
    std::iota(ids_.begin(), ids_.end(), std::uint64_t{0});
  } else if (ids_.size() != ballots.size()) {
    throw InvalidArgument("original id list does not match the ballot count");
  }
  orders_.reserve(ballots.size() * static_cast<std::size_t>(n_));
  ranks_.reserve(ballots.size() * static_cast<std::size_t>(n_));
  for (const Ranking& r : ballots) {
    if (r.size() != n_) {
      throw InvalidArgument("ballot over " + std::to_string(r.size()) +
                            " candidates in a profile over " + std::to_string(n_));
    }
    orders_.insert(orders_.end(), r.order().begin(), r.order().end());
    for (Candidate c = 0; c < n_; ++c) ranks_.push_back(r.rank_of(c));
  }
}

Profile Profile::from_orders(int n_candidates,
                             const std::vector<std::vector<Candidate>>& orders) {
  std::vector<Ranking> ballots;
  ballots.reserve(orders.size());
  for (const auto& o : orders) ballots.emplace_back(o);
  return Profile(n_candidates, ballots);
}

std::uint64_t Profile::max_original_id() const {
  return *std::max_element(ids_.begin(), ids_.end());
}

std::vector<Ranking> Profile::rankings() const {
  std::vector<Ranking> out;
  out.reserve(ids_.size());
  for (int i = 0; i < num_voters(); ++i) out.push_back(ballot(i).to_ranking());
  return out;
}

Profile remove_voters(const Profile& profile, std::span<const int> voters) {
  const int m = profile.num_voters();
  std::vector<char> drop(static_cast<std::size_t>(m), 0);
  int dropped = 0;
  for (int v : voters) {
    if (v < 0 || v >= m) {
      throw InvalidArgument("unknown voter " + std::to_string(v) + " in a profile of " +
                            std::to_string(m) + " voters");
    }
    if (!drop[v]) ++dropped;
    drop[v] = 1;
  }
  if (dropped == m) throw InvalidArgument("cannot remove every voter from a profile");

  const auto n = static_cast<std::size_t>(profile.n_);
  Profile out;
  out.n_ = profile.n_;
  out.orders_.reserve((m - dropped) * n);
  out.ranks_.reserve((m - dropped) * n);
  out.ids_.reserve(static_cast<std::size_t>(m - dropped));
  for (int v = 0; v < m; ++v) {
    if (drop[v]) continue;
    const auto off = static_cast<std::size_t>(v) * n;
    out.orders_.insert(out.orders_.end(), profile.orders_.begin() + off,
                       profile.orders_.begin() + off + n);
    out.ranks_.insert(out.ranks_.end(), profile.ranks_.begin() + off,
                      profile.ranks_.begin() + off + n);
    out.ids_.push_back(profile.ids_[v]);
  }
  return out;
}

Profile remove_voter(const Profile& profile, int voter) {
  return remove_voters(profile, std::span<const int>(&voter, 1));
}

Profile concat(const Profile& first, const Profile& second) {
  if (first.n_ != second.n_) {
    throw InvalidArgument("cannot concatenate profiles over " + std::to_string(first.n_) +
                          " and " + std::to_string(second.n_) + " candidates");
  }
  Profile out = first;
  out.orders_.insert(out.orders_.end(), second.orders_.begin(), second.orders_.end());
  out.ranks_.insert(out.ranks_.end(), second.ranks_.begin(), second.ranks_.end());
  const std::uint64_t shift = first.max_original_id() + 1;
  for (std::uint64_t id : second.ids_) out.ids_.push_back(id + shift);
  return out;
}

int margin(const Profile& profile, Candidate a, Candidate b) {
  const int n = profile.num_candidates();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw InvalidArgument("candidate index out of range");
  }
  int total = 0;
  for (int v = 0; v < profile.num_voters(); ++v) {
    const BallotView bal = profile.ballot(v);
    if (bal.prefers(a, b)) ++total;
    else if (bal.prefers(b, a)) --total;
  }
  return total;
}

int kendall_tau(const Ranking& lhs, const Ranking& rhs) {
  if (lhs.size() != rhs.size()) throw InvalidArgument("rankings differ in size");
  int discordant = 0;
  for (Candidate a = 0; a < lhs.size(); ++a) {
    for (Candidate b = a + 1; b < lhs.size(); ++b) {
      if (lhs.prefers(a, b) != rhs.prefers(a, b)) ++discordant;
    }
  }
  return discordant;
}

std::vector<long long> scores(const Profile& profile, std::span<const long long> vector) {
  const int n = profile.num_candidates();
  if (static_cast<int>(vector.size()) != n) {
    throw InvalidArgument("scoring vector has length " + std::to_string(vector.size()) +
                          ", expected " + std::to_string(n));
  }
  for (std::size_t k = 1; k < vector.size(); ++k) {
    if (vector[k] > vector[k - 1]) throw InvalidArgument("scoring vector must be non-increasing");
  }
  std::vector<long long> totals(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < profile.num_voters(); ++v) {
    const BallotView bal = profile.ballot(v);
    for (int k = 0; k < n; ++k) totals[bal.at(k)] += vector[k];
  }
  return totals;
}

std::vector<long long> plurality_vector(int n) {
  std::vector<long long> v(static_cast<std::size_t>(n), 0);
  v[0] = 1;
  return v;
}

std::vector<long long> borda_vector(int n) {
  std::vector<long long> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = n - 1 - k;
  return v;
}

}  // namespace pilab
