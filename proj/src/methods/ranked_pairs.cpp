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
#include <array>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/methods.hpp"

namespace pilab {

namespace {

// Locked edges kept as reachability rows of their transitive closure.
class LockState {
 public:
  explicit LockState(int n) : n_(n) {}

  // Locks (a, b) unless that closes a cycle, in which case (b, a) is already
  // implied by the closure.
  void consider(Candidate a, Candidate b) {
    if (a == b || reach_[b].contains(a) || reach_[a].contains(b)) return;
    const CandidateSet gained = reach_[b] | CandidateSet::single(b);
    for (Candidate x = 0; x < n_; ++x) {
      if (x == a || reach_[x].contains(a)) reach_[x] |= gained;
    }
  }

  Candidate top() const {
    CandidateSet reached;
    for (Candidate x = 0; x < n_; ++x) reached |= reach_[x];
    return (CandidateSet::all(n_) - reached).first();
  }

  void append_key(std::string& key) const {
    const auto* bytes = reinterpret_cast<const char*>(reach_.data());
    key.append(bytes, sizeof(CandidateSet) * static_cast<std::size_t>(n_));
  }

 private:
  int n_;
  std::array<CandidateSet, kMaxCandidates> reach_{};
};

std::vector<std::vector<CandidatePair>> margin_groups(const MarginGraph& g) {
  struct Weighted {
    int margin;
    CandidatePair pair;
  };
  std::vector<Weighted> agenda;
  for (Candidate x = 0; x < g.size(); ++x) {
    for (Candidate y = 0; y < g.size(); ++y) {
      if (x != y && g(x, y) >= 0) agenda.push_back({g(x, y), {x, y}});
    }
  }
  std::stable_sort(agenda.begin(), agenda.end(),
                   [](const Weighted& l, const Weighted& r) { return l.margin > r.margin; });
  std::vector<std::vector<CandidatePair>> groups;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    if (i == 0 || agenda[i].margin != agenda[i - 1].margin) groups.emplace_back();
    groups.back().push_back(agenda[i].pair);
  }
  return groups;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t tie_orders(const std::vector<std::vector<CandidatePair>>& groups) {
  std::uint64_t total = 1;
  for (const auto& group : groups) {
    for (std::uint64_t k = 2; k <= group.size(); ++k) total = saturating_mul(total, k);
  }
  return total;
}

// Depth-first search over the orders within each equal-margin group. States
// reached by different orders are identical once they lock the same edges,
// so they are visited once.
class TieOrderSearch {
 public:
  TieOrderSearch(int n, const std::vector<std::vector<CandidatePair>>& groups)
      : n_(n), groups_(groups) {}

  WinnerSet run() {
    visit(0, full_mask(0), LockState(n_));
    return winners_;
  }

 private:
  std::uint64_t full_mask(std::size_t group) const {
    if (group >= groups_.size()) return 0;
    const std::size_t size = groups_[group].size();
    return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  }

  void visit(std::size_t group, std::uint64_t pending, const LockState& state) {
    while (pending == 0) {
      if (++group >= groups_.size()) {
        winners_.insert(state.top());
        return;
      }
      pending = full_mask(group);
    }
    if (std::popcount(pending) > 1) {
      std::string key;
      key.append(reinterpret_cast<const char*>(&group), sizeof group);
      key.append(reinterpret_cast<const char*>(&pending), sizeof pending);
      state.append_key(key);
      if (!seen_.insert(std::move(key)).second) return;
    }
    for (std::uint64_t rest = pending; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      LockState next = state;
      const CandidatePair& p = groups_[group][static_cast<std::size_t>(i)];
      next.consider(p.first, p.second);
      visit(group, pending & ~(std::uint64_t{1} << i), next);
    }
  }

  int n_;
  const std::vector<std::vector<CandidatePair>>& groups_;
  std::unordered_set<std::string> seen_;
  WinnerSet winners_;
};

}  // namespace

Candidate ranked_pairs_lock(int n, std::span<const CandidatePair> agenda) {
  LockState state(n);
  for (const CandidatePair& p : agenda) state.consider(p.first, p.second);
  return state.top();
}

std::uint64_t ranked_pairs_tie_orders(const MarginGraph& graph) {
  return tie_orders(margin_groups(graph));
}

WinnerSet ranked_pairs(const MarginGraph& graph, std::uint64_t cap) {
  const auto groups = margin_groups(graph);
  const std::uint64_t orders = tie_orders(groups);
  if (orders > cap) {
    throw RankedPairsCapExceeded("ranked pairs needs " +
                                 (orders == std::numeric_limits<std::uint64_t>::max()
                                      ? std::string("more than 2^64")
                                      : std::to_string(orders)) +
                                 " tie-breaking orders, cap is " + std::to_string(cap));
  }
  return TieOrderSearch(graph.size(), groups).run();
}

WinnerSet ranked_pairs_zt(const Profile& profile) {
  const auto ids = profile.original_ids();
  const int tiebreaker =
      static_cast<int>(std::min_element(ids.begin(), ids.end()) - ids.begin());
  const BallotView bal = profile.ballot(tiebreaker);
  const MarginGraph g = margin_graph(profile);

  std::vector<CandidatePair> agenda;
  for (Candidate x = 0; x < g.size(); ++x) {
    for (Candidate y = 0; y < g.size(); ++y) {
      if (x != y && g(x, y) >= 0) agenda.push_back({x, y});
    }
  }
  std::sort(agenda.begin(), agenda.end(), [&](const CandidatePair& l, const CandidatePair& r) {
    const int ml = g(l.first, l.second);
    const int mr = g(r.first, r.second);
    if (ml != mr) return ml > mr;
    if (l.first != r.first) return bal.rank_of(l.first) < bal.rank_of(r.first);
    return bal.rank_of(l.second) < bal.rank_of(r.second);
  });
  return CandidateSet::single(ranked_pairs_lock(g.size(), agenda));
}

}  // namespace pilab
