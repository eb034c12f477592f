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
#include <optional>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/measures.hpp"

namespace pilab {
namespace {

void require_two_voters(const Profile& profile) {
  if (profile.num_voters() < 2) {
    throw InvalidArgument("profile needs at least two voters");
  }
}

// Visits each voter whose ballot must be examined: all voters for
// non-anonymous methods, otherwise the first voter with each ballot.
// The visitor returns false to stop.
template <typename Visit>
void for_each_representative(const MethodId& method, const Profile& profile, Visit&& visit) {
  const int m = profile.num_voters();
  std::vector<int> seen;
  for (int i = 0; i < m; ++i) {
    if (method.anonymous()) {
      const BallotView b = profile.ballot(i);
      const bool dup = std::any_of(seen.begin(), seen.end(),
                                   [&](int j) { return profile.ballot(j).same_order(b); });
      if (dup) continue;
      seen.push_back(i);
    }
    if (!visit(i)) return;
  }
}

// F(P_{-i}) for each examined voter, with the margin graph updated in place
// for margin-based methods.
class Remover {
 public:
  Remover(const MethodId& method, const Profile& profile, const EvalOptions& opts)
      : method_(method), profile_(profile), opts_(opts) {
    if (method.margin_based()) graph_.emplace(margin_graph(profile));
  }

  WinnerSet full() const {
    return graph_ ? evaluate_margin(method_, *graph_, opts_) : evaluate(method_, profile_, opts_);
  }

  WinnerSet without(int voter) {
    if (!graph_) return evaluate(method_, remove_voter(profile_, voter), opts_);
    const BallotView b = profile_.ballot(voter);
    graph_->add_ballot(b, -1);
    struct Restore {
      MarginGraph& g;
      const BallotView& b;
      ~Restore() { g.add_ballot(b, 1); }
    } restore{*graph_, b};
    return evaluate_margin(method_, *graph_, opts_);
  }

 private:
  const MethodId& method_;
  const Profile& profile_;
  const EvalOptions& opts_;
  std::optional<MarginGraph> graph_;
};

}  // namespace

SingleVoterScan scan_single_voters(const MethodId& method, const Profile& profile,
                                   const EvalOptions& opts) {
  require_two_voters(profile);
  Remover remover(method, profile, opts);
  SingleVoterScan scan;
  scan.winners = remover.full();
  for_each_representative(method, profile, [&](int i) {
    const WinnerSet w = remover.without(i);
    if (!w.is_subset_of(scan.winners)) scan.potent = true;
    const Candidate x = profile.ballot(i).top();
    if (w.contains(x) && !scan.winners.contains(x)) scan.violation = true;
    return !scan.violation;
  });
  return scan;
}

std::optional<Witness> pi_violation_witness(const MethodId& method, const Profile& profile,
                                            const EvalOptions& opts) {
  require_two_voters(profile);
  Remover remover(method, profile, opts);
  const WinnerSet winners = remover.full();
  std::optional<Witness> found;
  for_each_representative(method, profile, [&](int i) {
    const Candidate x = profile.ballot(i).top();
    if (winners.contains(x)) return true;
    if (remover.without(i).contains(x)) found = Witness{i, x};
    return !found;
  });
  return found;
}

bool has_potent_voter(const MethodId& method, const Profile& profile, const EvalOptions& opts) {
  require_two_voters(profile);
  Remover remover(method, profile, opts);
  const WinnerSet winners = remover.full();
  bool potent = false;
  for_each_representative(method, profile, [&](int i) {
    potent = !remover.without(i).is_subset_of(winners);
    return !potent;
  });
  return potent;
}

namespace {

Candidate coalition_top(const Profile& coalition) {
  const Candidate x = coalition.ballot(0).top();
  for (int i = 1; i < coalition.num_voters(); ++i) {
    if (coalition.ballot(i).top() != x) {
      throw InvalidArgument("coalition voters do not share a favourite");
    }
  }
  return x;
}

}  // namespace

bool pair_violation(const MethodId& method, const Profile& profile, const Profile& coalition,
                    const EvalOptions& opts) {
  const Candidate x = coalition_top(coalition);
  if (!evaluate(method, profile, opts).contains(x)) return false;
  return !evaluate(method, concat(profile, coalition), opts).contains(x);
}

bool disagree(const MethodId& f1, const MethodId& f2, const Profile& profile,
              const EvalOptions& opts) {
  if (f1 == f2) return false;
  return evaluate(f1, profile, opts) != evaluate(f2, profile, opts);
}

bool pair_disagree(const MethodId& f1, const MethodId& f2, const Profile& profile,
                   const Profile& coalition, const EvalOptions& opts) {
  if (f1 == f2) return false;
  return disagree(f1, f2, profile, opts) || disagree(f1, f2, concat(profile, coalition), opts);
}

std::vector<CoalitionWitness> brute_force_coalitional_pi(const MethodId& method,
                                                         const Profile& profile,
                                                         int max_coalition,
                                                         const EvalOptions& opts) {
  const int m = profile.num_voters();
  if (m > 8) throw InvalidArgument("brute-force coalition search is limited to 8 voters");
  if (max_coalition < 1) throw InvalidArgument("max_coalition must be positive");
  const WinnerSet winners = evaluate(method, profile, opts);
  std::vector<CoalitionWitness> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> voters;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) voters.push_back(i);
    }
    const int size = static_cast<int>(voters.size());
    if (size > max_coalition || size == m) continue;
    const BallotView first = profile.ballot(voters.front());
    const bool identical = std::all_of(voters.begin(), voters.end(), [&](int i) {
      return profile.ballot(i).same_order(first);
    });
    if (!identical) continue;
    const Candidate x = first.top();
    if (winners.contains(x)) continue;
    if (evaluate(method, remove_voters(profile, voters), opts).contains(x)) {
      out.push_back({std::move(voters), x});
    }
  }
  std::sort(out.begin(), out.end(), [](const CoalitionWitness& a, const CoalitionWitness& b) {
    return a.voters.size() != b.voters.size() ? a.voters.size() < b.voters.size()
                                              : a.voters < b.voters;
  });
  return out;
}

}  // namespace pilab
