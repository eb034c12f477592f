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
#include <climits>
#include <vector>

#include "pilab/methods.hpp"

namespace pilab {

namespace {

using Reach = std::array<CandidateSet, kMaxCandidates>;

// Transitive closure of the relation `related(a, b)` as reachability rows.
template <class Related>
Reach closure(int n, Related related) {
  Reach reach{};
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = 0; b < n; ++b) {
      if (a != b && related(a, b)) reach[a].insert(b);
    }
  }
  for (Candidate k = 0; k < n; ++k) {
    for (Candidate a = 0; a < n; ++a) {
      if (reach[a].contains(k)) reach[a] |= reach[k];
    }
  }
  return reach;
}

// Strength of the strongest path between every ordered pair over edges with
// positive margin; 0 where no path exists.
std::vector<int> strongest_paths(const MarginGraph& g) {
  const int n = g.size();
  std::vector<int> s(static_cast<std::size_t>(n * n), 0);
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = 0; b < n; ++b) {
      if (g(a, b) > 0) s[a * n + b] = g(a, b);
    }
  }
  for (Candidate k = 0; k < n; ++k) {
    for (Candidate a = 0; a < n; ++a) {
      if (a == k || s[a * n + k] == 0) continue;
      for (Candidate b = 0; b < n; ++b) {
        if (b == a || b == k) continue;
        const int via = std::min(s[a * n + k], s[k * n + b]);
        if (via > s[a * n + b]) s[a * n + b] = via;
      }
    }
  }
  return s;
}

template <class Defeats>
WinnerSet undefeated(int n, Defeats defeats) {
  WinnerSet out = CandidateSet::all(n);
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = 0; b < n; ++b) {
      if (a != b && defeats(a, b)) out.erase(b);
    }
  }
  return out;
}

}  // namespace

WinnerSet copeland(const MarginGraph& g, CopelandVariant variant) {
  const int n = g.size();
  std::array<int, kMaxCandidates> score{};
  for (Candidate a = 0; a < n; ++a) {
    for (Candidate b = 0; b < n; ++b) {
      if (a == b) continue;
      if (g(a, b) > 0) ++score[a];
      else if (g(a, b) < 0 && variant == CopelandVariant::copeland) --score[a];
      else if (g(a, b) == 0 && variant == CopelandVariant::llull) ++score[a];
    }
  }
  const int best = *std::max_element(score.begin(), score.begin() + n);
  WinnerSet out;
  for (Candidate a = 0; a < n; ++a) {
    if (score[a] == best) out.insert(a);
  }
  return out;
}

WinnerSet top_cycle(const MarginGraph& g, TopCycleVariant variant) {
  const int n = g.size();
  if (variant == TopCycleVariant::getcha) {
    const Reach reach = closure(n, [&](Candidate a, Candidate b) { return g(a, b) >= 0; });
    WinnerSet out;
    for (Candidate a = 0; a < n; ++a) {
      if ((reach[a] | CandidateSet::single(a)) == CandidateSet::all(n)) out.insert(a);
    }
    return out;
  }
  // Schwartz set: a belongs iff everything that strictly reaches a is
  // reachable from a.
  const Reach reach = closure(n, [&](Candidate a, Candidate b) { return g(a, b) > 0; });
  WinnerSet out;
  for (Candidate a = 0; a < n; ++a) {
    bool top = true;
    for (Candidate b = 0; b < n && top; ++b) {
      if (b != a && reach[b].contains(a) && !reach[a].contains(b)) top = false;
    }
    if (top) out.insert(a);
  }
  return out;
}

WinnerSet uncovered_set(const MarginGraph& g, CoverVariant variant) {
  const int n = g.size();
  auto for_all = [n](auto pred) {
    for (Candidate c = 0; c < n; ++c) {
      if (!pred(c)) return false;
    }
    return true;
  };
  auto gillies = [&](Candidate a, Candidate b) {
    return g(a, b) > 0 && for_all([&](Candidate c) { return !(g(c, a) > 0) || g(c, b) > 0; });
  };
  auto bordes = [&](Candidate a, Candidate b) {
    return g(a, b) > 0 && for_all([&](Candidate c) { return !(g(c, a) >= 0) || g(c, b) >= 0; });
  };
  auto fishburn = [&](Candidate a, Candidate b) {
    return for_all([&](Candidate c) { return !(g(c, a) > 0) || g(c, b) > 0; }) &&
           !for_all([&](Candidate c) { return !(g(c, b) > 0 && g(c, a) <= 0); });
  };
  return undefeated(n, [&](Candidate a, Candidate b) {
    switch (variant) {
      case CoverVariant::gillies: return gillies(a, b);
      case CoverVariant::bordes: return bordes(a, b);
      case CoverVariant::mckelvey: return gillies(a, b) && bordes(a, b);
      case CoverVariant::fishburn: return fishburn(a, b);
    }
    return false;
  });
}

WinnerSet beat_path(const MarginGraph& g) {
  const int n = g.size();
  const std::vector<int> s = strongest_paths(g);
  return undefeated(n, [&](Candidate a, Candidate b) { return s[a * n + b] > s[b * n + a]; });
}

// a defeats b iff its margin over b exceeds the strongest path from b back
// to a; any majority cycle through a and b splits into such a path plus a
// path from a to b, so this matches the cycle formulation.
WinnerSet split_cycle(const MarginGraph& g) {
  const int n = g.size();
  const std::vector<int> s = strongest_paths(g);
  return undefeated(n, [&](Candidate a, Candidate b) {
    return g(a, b) > 0 && g(a, b) > s[b * n + a];
  });
}

WinnerSet minimax(const MarginGraph& g) {
  const int n = g.size();
  std::array<int, kMaxCandidates> worst{};
  for (Candidate a = 0; a < n; ++a) {
    worst[a] = INT_MIN;
    for (Candidate b = 0; b < n; ++b) {
      if (b != a) worst[a] = std::max(worst[a], g(b, a));
    }
  }
  if (n == 1) return CandidateSet::single(0);
  const int best = *std::min_element(worst.begin(), worst.begin() + n);
  WinnerSet out;
  for (Candidate a = 0; a < n; ++a) {
    if (worst[a] == best) out.insert(a);
  }
  return out;
}

}  // namespace pilab
