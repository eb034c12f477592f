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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pilab/candidate_set.hpp"

namespace pilab {

// A strict linear order over candidates 0..n-1.
class Ranking {
 public:
  Ranking() = default;

  // Throws InvalidArgument unless `order` is a permutation of 0..n-1.
  explicit Ranking(std::vector<Candidate> order);

  static Ranking identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const Candidate> order() const { return order_; }

  // Candidate at 0-based position k (the (k+1)-th ranked candidate).
  Candidate at(int k) const { return order_[k]; }
  // 1-based rank.
  int rank_of(Candidate c) const { return rank_[c]; }
  Candidate top() const { return order_.front(); }
  bool prefers(Candidate a, Candidate b) const { return rank_[a] < rank_[b]; }

  Ranking reversed() const;

  bool operator==(const Ranking& other) const { return order_ == other.order_; }

 private:
  std::vector<Candidate> order_;
  std::vector<int> rank_;
};

// Read-only view of one ballot stored inside a Profile.
class BallotView {
 public:
  BallotView(std::span<const Candidate> order, std::span<const int> rank)
      : order_(order), rank_(rank) {}

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const Candidate> order() const { return order_; }
  Candidate at(int k) const { return order_[k]; }
  int rank_of(Candidate c) const { return rank_[c]; }
  Candidate top() const { return order_.front(); }
  bool prefers(Candidate a, Candidate b) const { return rank_[a] < rank_[b]; }

  bool same_order(const BallotView& other) const;
  Ranking to_ranking() const;

 private:
  std::span<const Candidate> order_;
  std::span<const int> rank_;
};

// An ordered list of ballots over a fixed candidate set. Voter positions are
// dense 0-based indices; each voter also carries an original id so that
// non-anonymous methods can find the distinguished voter after removals.
//
// Immutable after construction.
class Profile {
 public:
  // Throws InvalidArgument on an empty ballot list or a ballot of the wrong
  // size. Original ids default to 0..m-1.
  Profile(int n_candidates, std::span<const Ranking> ballots);
  Profile(int n_candidates, std::span<const Ranking> ballots,
          std::vector<std::uint64_t> original_ids);

  static Profile from_orders(int n_candidates,
                             const std::vector<std::vector<Candidate>>& orders);

  int num_candidates() const { return n_; }
  int num_voters() const { return static_cast<int>(ids_.size()); }

  BallotView ballot(int voter) const {
    const auto off = static_cast<std::size_t>(voter) * static_cast<std::size_t>(n_);
    return BallotView(std::span<const Candidate>(orders_).subspan(off, n_),
                      std::span<const int>(ranks_).subspan(off, n_));
  }
  std::uint64_t original_id(int voter) const { return ids_[voter]; }
  std::span<const std::uint64_t> original_ids() const { return ids_; }
  std::uint64_t max_original_id() const;

  std::vector<Ranking> rankings() const;

 private:
  Profile() = default;

  friend Profile remove_voters(const Profile&, std::span<const int>);
  friend Profile concat(const Profile&, const Profile&);

  int n_ = 0;
  std::vector<Candidate> orders_;
  std::vector<int> ranks_;
  std::vector<std::uint64_t> ids_;
};

// P_{-C}: the profile without the voters at the given positions. Survivors
// keep their relative order and original ids. Throws InvalidArgument on an
// unknown position or when no voter would remain.
Profile remove_voters(const Profile& profile, std::span<const int> voters);
Profile remove_voter(const Profile& profile, int voter);

// P + P': ballots of `first` followed by ballots of `second`. The voters of
// `second` are fresh: their original ids are shifted past every id in
// `first`, so they never precede an existing voter.
Profile concat(const Profile& first, const Profile& second);

// Number of voters ranking a above b minus the number ranking b above a.
int margin(const Profile& profile, Candidate a, Candidate b);

// Antisymmetric matrix of pairwise margins.
class MarginGraph {
 public:
  // Weighted tournaments not tied to a voter count skip the parity check.
  static constexpr int kAnyParity = -1;

  // Throws InvalidArgument if `matrix` (row-major n*n) is not antisymmetric
  // with a zero diagonal, or if an off-diagonal entry has the wrong parity.
  MarginGraph(int n, std::vector<int> matrix, int voter_parity);

  struct Edge {
    Candidate from;
    Candidate to;
    int weight;
  };
  // Graph given by its positive edges; all unlisted pairs have margin 0.
  static MarginGraph from_edges(int n, std::span<const Edge> edges, int voter_parity);

  int size() const { return n_; }
  int operator()(Candidate a, Candidate b) const { return m_[a * n_ + b]; }
  int voter_parity() const { return parity_; }

  // Margins of the same profile with one ballot added (+1) or removed (-1).
  void add_ballot(const BallotView& ballot, int sign = 1);
  void add_ballot(const Ranking& ballot, int sign = 1);

  MarginGraph& operator+=(const MarginGraph& other);
  bool operator==(const MarginGraph&) const = default;

 private:
  MarginGraph() = default;
  friend MarginGraph margin_graph(const Profile&);

  int n_ = 0;
  std::vector<int> m_;
  int parity_ = 0;
};

MarginGraph margin_graph(const Profile& profile);
MarginGraph operator+(MarginGraph lhs, const MarginGraph& rhs);

// Number of candidate pairs the two rankings order differently.
int kendall_tau(const Ranking& lhs, const Ranking& rhs);

// Per-candidate totals under a non-increasing scoring vector of length n.
std::vector<long long> scores(const Profile& profile, std::span<const long long> vector);

std::vector<long long> plurality_vector(int n);
std::vector<long long> borda_vector(int n);

}  // namespace pilab
