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

#include <cstdlib>
#include <string>

#include "pilab/core.hpp"
#include "pilab/error.hpp"

namespace pilab {

MarginGraph::MarginGraph(int n, std::vector<int> matrix, int voter_parity)
    : n_(n), m_(std::move(matrix)), parity_(voter_parity) {
  if (n < 1 || n > kMaxCandidates) throw InvalidArgument("bad candidate count for margin graph");
  if (m_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidArgument("margin matrix must be n*n");
  }
  if (parity_ != 0 && parity_ != 1 && parity_ != kAnyParity) {
    throw InvalidArgument("voter parity must be 0, 1 or kAnyParity");
  }
  for (Candidate a = 0; a < n; ++a) {
    if ((*this)(a, a) != 0) throw InvalidArgument("margin matrix diagonal must be zero");
    for (Candidate b = a + 1; b < n; ++b) {
      if ((*this)(a, b) != -(*this)(b, a)) {
        throw InvalidArgument("margin matrix is not antisymmetric at (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
      }
      if (parity_ != kAnyParity && std::abs((*this)(a, b)) % 2 != parity_) {
        throw InvalidArgument("margin (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has the wrong parity for the voter count");
      }
    }
  }
}

MarginGraph MarginGraph::from_edges(int n, std::span<const Edge> edges, int voter_parity) {
  std::vector<int> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n || e.from == e.to) {
      throw InvalidArgument("bad edge endpoints");
    }
    m[e.from * n + e.to] = e.weight;
    m[e.to * n + e.from] = -e.weight;
  }
  return MarginGraph(n, std::move(m), voter_parity);
}

void MarginGraph::add_ballot(const BallotView& ballot, int sign) {
  const auto order = ballot.order();
  for (int i = 0; i < n_; ++i) {
    const Candidate hi = order[i];
    for (int j = i + 1; j < n_; ++j) {
      const Candidate lo = order[j];
      m_[hi * n_ + lo] += sign;
      m_[lo * n_ + hi] -= sign;
    }
  }
  if (parity_ != kAnyParity) parity_ ^= 1;
}

void MarginGraph::add_ballot(const Ranking& ballot, int sign) {
  std::vector<int> rank(static_cast<std::size_t>(n_));
  for (Candidate c = 0; c < n_; ++c) rank[c] = ballot.rank_of(c);
  add_ballot(BallotView(ballot.order(), rank), sign);
}

MarginGraph& MarginGraph::operator+=(const MarginGraph& other) {
  if (other.n_ != n_) throw InvalidArgument("margin graphs differ in size");
  for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += other.m_[k];
  parity_ = (parity_ == kAnyParity || other.parity_ == kAnyParity) ? kAnyParity
                                                                   : parity_ ^ other.parity_;
  return *this;
}

MarginGraph operator+(MarginGraph lhs, const MarginGraph& rhs) {
  lhs += rhs;
  return lhs;
}

MarginGraph margin_graph(const Profile& profile) {
  MarginGraph g;
  g.n_ = profile.num_candidates();
  g.m_.assign(static_cast<std::size_t>(g.n_) * static_cast<std::size_t>(g.n_), 0);
  g.parity_ = 0;
  for (int v = 0; v < profile.num_voters(); ++v) g.add_ballot(profile.ballot(v));
  return g;
}

}  // namespace pilab
