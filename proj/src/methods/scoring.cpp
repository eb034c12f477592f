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

#include "internal.hpp"

namespace pilab {

WinnerSet scoring_rule(const Profile& profile, std::span<const long long> vector) {
  const std::vector<long long> totals = scores(profile, vector);
  const long long best = *std::max_element(totals.begin(), totals.end());
  WinnerSet out;
  for (Candidate c = 0; c < profile.num_candidates(); ++c) {
    if (totals[c] == best) out.insert(c);
  }
  return out;
}

WinnerSet plurality(const Profile& profile) {
  const auto all = CandidateSet::all(profile.num_candidates());
  return detail::argmax(detail::first_place_counts(profile, all), all);
}

WinnerSet borda(const Profile& profile) {
  const auto all = CandidateSet::all(profile.num_candidates());
  return detail::argmax(detail::borda_scores(profile, all), all);
}

// A candidate qualifies for the runoff if it has the top plurality score, or
// if the top score is unique and it is among the second highest. The
// parallel-universe version holds every duel the runoff could stage (the
// unique leader against each runner-up, or every pair of tied leaders) and
// elects every duel winner; a tied duel elects both.
WinnerSet plurality_runoff(const Profile& profile, RunoffVariant variant) {
  const int n = profile.num_candidates();
  if (n == 1) return CandidateSet::single(0);
  const auto all = CandidateSet::all(n);
  const detail::Tally firsts = detail::first_place_counts(profile, all);
  const CandidateSet leaders = detail::argmax(firsts, all);
  CandidateSet qualified = leaders;
  if (leaders.size() == 1) qualified |= detail::argmax(firsts, all - leaders);

  if (variant == RunoffVariant::naive) {
    return detail::argmax(detail::first_place_counts(profile, qualified), qualified);
  }

  WinnerSet winners;
  auto duel = [&](Candidate x, Candidate y) {
    const int m = margin(profile, x, y);
    if (m >= 0) winners.insert(x);
    if (m <= 0) winners.insert(y);
  };
  if (leaders.size() == 1) {
    const Candidate leader = leaders.first();
    for (Candidate y : qualified - leaders) duel(leader, y);
  } else {
    for (Candidate x : leaders) {
      for (Candidate y : leaders) {
        if (x < y) duel(x, y);
      }
    }
  }
  return winners;
}

// Least level k at which some candidate is ranked k-th or better by a strict
// majority. The full method keeps the majority winners with the largest such
// support; the simplified method keeps all of them.
WinnerSet bucklin(const Profile& profile, BucklinVariant variant) {
  const int n = profile.num_candidates();
  const long long m = profile.num_voters();
  detail::Tally support{};
  for (int level = 0; level < n; ++level) {
    for (int v = 0; v < profile.num_voters(); ++v) ++support[profile.ballot(v).at(level)];
    CandidateSet majority;
    for (Candidate c = 0; c < n; ++c) {
      if (2 * support[c] > m) majority.insert(c);
    }
    if (majority.empty()) continue;
    if (variant == BucklinVariant::simplified) return majority;
    return detail::argmax(support, majority);
  }
  return CandidateSet::all(n);  // unreachable: at level n everyone has full support
}

}  // namespace pilab
