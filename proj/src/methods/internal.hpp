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

#include <array>
#include <optional>
#include <unordered_set>

#include "pilab/candidate_set.hpp"
#include "pilab/core.hpp"
#include "pilab/methods.hpp"

namespace pilab::detail {

using Tally = std::array<long long, kMaxCandidates>;

// Per-candidate counts restricted to the candidates in `remaining`, as if the
// eliminated candidates had been struck from every ballot.
Tally first_place_counts(const Profile& profile, CandidateSet remaining);
Tally last_place_counts(const Profile& profile, CandidateSet remaining);
Tally borda_scores(const Profile& profile, CandidateSet remaining);

CandidateSet argmin(const Tally& tally, CandidateSet among);
CandidateSet argmax(const Tally& tally, CandidateSet among);

// Candidate ranked first among `remaining` by a strict majority, if any.
std::optional<Candidate> majority_winner(const Profile& profile, CandidateSet remaining);

// Iterated elimination. `stop(R)` returns the winners once the procedure
// ends at R; `losers(R)` returns the candidates meeting the elimination
// criterion.
//
// remove_all drops every loser per round and selects all of R when every
// remaining candidate would be dropped. put explores every order in which a
// single loser is dropped per round and returns the union of the outcomes.
template <class Stop, class Losers>
WinnerSet run_elimination(int n, TieHandling ties, Stop stop, Losers losers) {
  if (ties == TieHandling::remove_all) {
    CandidateSet remaining = CandidateSet::all(n);
    while (true) {
      if (remaining.size() == 1) return remaining;
      if (std::optional<WinnerSet> done = stop(remaining)) return *done;
      const CandidateSet out = losers(remaining);
      if (out == remaining) return remaining;
      remaining -= out;
    }
  }

  WinnerSet winners;
  std::unordered_set<std::uint32_t> visited;
  std::vector<CandidateSet> stack{CandidateSet::all(n)};
  while (!stack.empty()) {
    const CandidateSet remaining = stack.back();
    stack.pop_back();
    if (!visited.insert(remaining.bits()).second) continue;
    if (remaining.size() == 1) {
      winners |= remaining;
      continue;
    }
    if (std::optional<WinnerSet> done = stop(remaining)) {
      winners |= *done;
      continue;
    }
    for (Candidate c : losers(remaining)) stack.push_back(remaining - CandidateSet::single(c));
  }
  return winners;
}

}  // namespace pilab::detail
