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
#include <climits>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/oracle.hpp"

namespace pilab::oracle {

std::optional<Witness> definitional_witness(const MethodId& method, const Profile& profile,
                                            const EvalOptions& opts) {
  const WinnerSet winners = evaluate(method, profile, opts);
  std::vector<std::optional<Witness>> hits;
  for (int i = 0; i < profile.num_voters(); ++i) {
    const Candidate x = profile.ballot(i).top();
    const WinnerSet reduced = evaluate(method, remove_voter(profile, i), opts);
    hits.push_back(reduced.contains(x) && !winners.contains(x) ? std::optional<Witness>({i, x})
                                                               : std::nullopt);
  }
  for (const auto& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

bool definitional_potent(const MethodId& method, const Profile& profile,
                          const EvalOptions& opts) {
  const WinnerSet winners = evaluate(method, profile, opts);
  int potent = 0;
  for (int i = 0; i < profile.num_voters(); ++i) {
    const WinnerSet reduced = evaluate(method, remove_voter(profile, i), opts);
    bool subset = true;
    for (Candidate c : reduced.members()) subset = subset && winners.contains(c);
    potent += !subset;
  }
  return potent > 0;
}

namespace {

struct CycleSearch {
  const MarginGraph& g;
  int n;
  int start = 0;
  std::vector<Candidate> path;
  std::vector<bool> on_path;
  std::vector<bool> deleted;  // n*n, edge a->b

  void close_cycle() {
    int weakest = INT_MAX;
    for (std::size_t k = 0; k < path.size(); ++k) {
      weakest = std::min(weakest, g(path[k], path[(k + 1) % path.size()]));
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      const Candidate a = path[k];
      const Candidate b = path[(k + 1) % path.size()];
      if (g(a, b) == weakest) deleted[a * n + b] = true;
    }
  }

  void extend(Candidate v) {
    for (Candidate w = 0; w < n; ++w) {
      if (g(v, w) <= 0) continue;
      if (w == start) {
        close_cycle();
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = true;
        extend(w);
        on_path[w] = false;
        path.pop_back();
      }
    }
  }
};

struct PathSearch {
  const MarginGraph& g;
  int n;
  std::vector<int> best;  // n*n, 0 when no path
  std::vector<bool> on_path;

  void extend(Candidate source, Candidate v, int strength) {
    for (Candidate w = 0; w < n; ++w) {
      if (g(v, w) <= 0 || on_path[w]) continue;
      const int s = std::min(strength, g(v, w));
      best[source * n + w] = std::max(best[source * n + w], s);
      on_path[w] = true;
      extend(source, w, s);
      on_path[w] = false;
    }
  }
};

// Locks the agenda edge by edge, rejecting any edge that closes a cycle in
// the locked graph (checked by depth-first search).
Candidate naive_lock(int n, const std::vector<CandidatePair>& agenda) {
  std::vector<std::vector<bool>> locked(n, std::vector<bool>(n, false));
  auto reaches = [&](Candidate from, Candidate to) {
    std::vector<bool> seen(n, false);
    std::vector<Candidate> stack{from};
    while (!stack.empty()) {
      const Candidate v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      if (seen[v]) continue;
      seen[v] = true;
      for (Candidate w = 0; w < n; ++w) {
        if (locked[v][w]) stack.push_back(w);
      }
    }
    return false;
  };
  for (const auto& p : agenda) {
    if (!reaches(p.second, p.first)) locked[p.first][p.second] = true;
  }
  for (Candidate c = 0; c < n; ++c) {
    bool beaten = false;
    for (Candidate d = 0; d < n; ++d) beaten = beaten || locked[d][c];
    if (!beaten) return c;
  }
  throw Error("locked graph has no source");
}

}  // namespace

WinnerSet split_cycle_by_cycles(const MarginGraph& graph) {
  const int n = graph.size();
  CycleSearch search{graph, n, 0, {}, std::vector<bool>(n, false),
                     std::vector<bool>(static_cast<std::size_t>(n * n), false)};
  for (Candidate s = 0; s < n; ++s) {
    search.start = s;
    search.path = {s};
    search.on_path.assign(n, false);
    search.on_path[s] = true;
    search.extend(s);
  }
  WinnerSet winners;
  for (Candidate b = 0; b < n; ++b) {
    bool defeated = false;
    for (Candidate a = 0; a < n; ++a) {
      defeated = defeated || (graph(a, b) > 0 && !search.deleted[a * n + b]);
    }
    if (!defeated) winners.insert(b);
  }
  return winners;
}

WinnerSet beat_path_by_paths(const MarginGraph& graph) {
  const int n = graph.size();
  PathSearch search{graph, n, std::vector<int>(static_cast<std::size_t>(n * n), 0),
                    std::vector<bool>(n, false)};
  for (Candidate s = 0; s < n; ++s) {
    search.on_path.assign(n, false);
    search.on_path[s] = true;
    search.extend(s, s, INT_MAX);
  }
  WinnerSet winners;
  for (Candidate a = 0; a < n; ++a) {
    bool beaten = false;
    for (Candidate b = 0; b < n; ++b) {
      beaten = beaten || (b != a && search.best[b * n + a] > search.best[a * n + b]);
    }
    if (!beaten) winners.insert(a);
  }
  return winners;
}

WinnerSet ranked_pairs_by_permutations(const MarginGraph& graph) {
  const int n = graph.size();
  std::vector<CandidatePair> pairs;
  for (Candidate x = 0; x < n; ++x) {
    for (Candidate y = 0; y < n; ++y) {
      if (x != y && graph(x, y) >= 0) pairs.push_back({x, y});
    }
  }
  if (pairs.size() > 10) throw InvalidArgument("too many pairs for full permutation search");
  std::vector<int> perm(pairs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  WinnerSet winners;
  std::vector<CandidatePair> agenda(pairs.size());
  do {
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < perm.size() && sorted; ++i) {
      const auto& p = pairs[perm[i]];
      const auto& q = pairs[perm[i + 1]];
      sorted = graph(p.first, p.second) >= graph(q.first, q.second);
    }
    if (!sorted) continue;
    for (std::size_t i = 0; i < perm.size(); ++i) agenda[i] = pairs[perm[i]];
    winners.insert(naive_lock(n, agenda));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return winners;
}

void enumerate_profiles(int n, int m, const std::function<void(const Profile&)>& visit) {
  std::vector<Candidate> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<Ranking> perms;
  do {
    perms.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::size_t> digits(m, 0);
  std::vector<Ranking> ballots(m, perms.front());
  for (;;) {
    for (int i = 0; i < m; ++i) ballots[i] = perms[digits[i]];
    visit(Profile(n, ballots));
    int k = 0;
    while (k < m && ++digits[k] == perms.size()) digits[k++] = 0;
    if (k == m) return;
  }
}

void enumerate_graphs(int n, const std::vector<int>& values,
                      const std::function<void(const MarginGraph&)>& visit) {
  std::vector<std::pair<Candidate, Candidate>> slots;
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<std::size_t> digits(slots.size(), 0);
  for (;;) {
    std::vector<int> matrix(static_cast<std::size_t>(n * n), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [a, b] = slots[k];
      matrix[a * n + b] = values[digits[k]];
      matrix[b * n + a] = -values[digits[k]];
    }
    visit(MarginGraph(n, std::move(matrix), MarginGraph::kAnyParity));
    std::size_t k = 0;
    while (k < slots.size() && ++digits[k] == values.size()) digits[k++] = 0;
    if (k == slots.size()) return;
  }
}

}  // namespace pilab::oracle
