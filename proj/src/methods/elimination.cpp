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

#include "internal.hpp"

namespace pilab {

namespace detail {

Tally first_place_counts(const Profile& profile, CandidateSet remaining) {
  Tally t{};
  for (int v = 0; v < profile.num_voters(); ++v) {
    for (Candidate c : profile.ballot(v).order()) {
      if (remaining.contains(c)) {
        ++t[c];
        break;
      }
    }
  }
  return t;
}

Tally last_place_counts(const Profile& profile, CandidateSet remaining) {
  Tally t{};
  for (int v = 0; v < profile.num_voters(); ++v) {
    const auto order = profile.ballot(v).order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (remaining.contains(*it)) {
        ++t[*it];
        break;
      }
    }
  }
  return t;
}

Tally borda_scores(const Profile& profile, CandidateSet remaining) {
  Tally t{};
  const int k = remaining.size();
  for (int v = 0; v < profile.num_voters(); ++v) {
    int below = k - 1;
    for (Candidate c : profile.ballot(v).order()) {
      if (remaining.contains(c)) t[c] += below--;
    }
  }
  return t;
}

CandidateSet argmin(const Tally& tally, CandidateSet among) {
  CandidateSet out;
  long long best = 0;
  for (Candidate c : among) {
    if (out.empty() || tally[c] < best) {
      out = CandidateSet::single(c);
      best = tally[c];
    } else if (tally[c] == best) {
      out.insert(c);
    }
  }
  return out;
}

CandidateSet argmax(const Tally& tally, CandidateSet among) {
  CandidateSet out;
  long long best = 0;
  for (Candidate c : among) {
    if (out.empty() || tally[c] > best) {
      out = CandidateSet::single(c);
      best = tally[c];
    } else if (tally[c] == best) {
      out.insert(c);
    }
  }
  return out;
}

std::optional<Candidate> majority_winner(const Profile& profile, CandidateSet remaining) {
  const Tally firsts = first_place_counts(profile, remaining);
  for (Candidate c : remaining) {
    if (2 * firsts[c] > profile.num_voters()) return c;
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

std::optional<WinnerSet> majority_stop(const Profile& profile, CandidateSet remaining) {
  if (auto w = detail::majority_winner(profile, remaining)) return CandidateSet::single(*w);
  return std::nullopt;
}

}  // namespace

WinnerSet instant_runoff(const Profile& profile, TieHandling ties) {
  return detail::run_elimination(
      profile.num_candidates(), ties,
      [&](CandidateSet r) { return majority_stop(profile, r); },
      [&](CandidateSet r) { return detail::argmin(detail::first_place_counts(profile, r), r); });
}

WinnerSet coombs(const Profile& profile, TieHandling ties) {
  return detail::run_elimination(
      profile.num_candidates(), ties,
      [&](CandidateSet r) { return majority_stop(profile, r); },
      [&](CandidateSet r) { return detail::argmax(detail::last_place_counts(profile, r), r); });
}

WinnerSet baldwin(const Profile& profile, TieHandling ties) {
  return detail::run_elimination(
      profile.num_candidates(), ties,
      [](CandidateSet) -> std::optional<WinnerSet> { return std::nullopt; },
      [&](CandidateSet r) { return detail::argmin(detail::borda_scores(profile, r), r); });
}

WinnerSet nanson(const Profile& profile, NansonVariant variant) {
  CandidateSet remaining = CandidateSet::all(profile.num_candidates());
  while (remaining.size() > 1) {
    const detail::Tally score = detail::borda_scores(profile, remaining);
    const long long k = remaining.size();
    long long total = 0;
    for (Candidate c : remaining) total += score[c];
    if (detail::argmin(score, remaining) == remaining) return remaining;
    // x is below the average iff k * score(x) < total.
    CandidateSet out;
    for (Candidate c : remaining) {
      const long long scaled = k * score[c];
      if (scaled < total || (variant == NansonVariant::weak && scaled == total)) out.insert(c);
    }
    remaining -= out;
  }
  return remaining;
}

}  // namespace pilab
