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
#include <string>
#include <string_view>
#include <vector>

#include "pilab/candidate_set.hpp"
#include "pilab/core.hpp"

namespace pilab {

enum class Family {
  scoring,
  instant_runoff,
  coombs,
  baldwin,
  nanson,
  bucklin,
  copeland,
  top_cycle,
  uncovered_set,
  ranked_pairs,
  ranked_pairs_zt,
  beat_path,
  split_cycle,
  minimax,
  plurality_runoff,
};

enum class Variant {
  standard,
  plurality,
  borda,
  remove_all,
  put,
  strict,
  weak,
  full,
  simplified,
  copeland,
  llull,
  getcha,
  gocha,
  gillies,
  fishburn,
  bordes,
  mckelvey,
  naive,
};

// A voting rule together with its variant. Only the combinations listed by
// all_methods() are valid.
struct MethodId {
  Family family;
  Variant variant;

  // Short name accepted on the command line, e.g. "coombs_put", "borda".
  std::string_view name() const;
  std::string_view family_name() const;
  std::string_view variant_name() const;
  // "family/variant", or just the family for single-variant families.
  std::string display_name() const;

  bool anonymous() const { return family != Family::ranked_pairs_zt; }
  bool margin_based() const;

  bool operator==(const MethodId&) const = default;
};

// Every registered method, in a fixed order.
std::span<const MethodId> all_methods();

// Accepts a short name ("strict_nanson"), a display name ("nanson/strict")
// or a family name with its default variant ("nanson"). Throws UnknownName
// listing the valid names.
MethodId parse_method(std::string_view name);

struct EvalOptions {
  // Maximum number of tie-breaking orders parallel-universe Ranked Pairs may
  // enumerate before throwing RankedPairsCapExceeded.
  std::uint64_t rp_cap = 10'000;
};

// F(P) for any registered method.
WinnerSet evaluate(const MethodId& method, const Profile& profile, const EvalOptions& opts = {});

// F for margin-based methods, computed from the margin graph alone. Throws
// InvalidArgument for methods that need ballots.
WinnerSet evaluate_margin(const MethodId& method, const MarginGraph& graph,
                          const EvalOptions& opts = {});

enum class TieHandling { remove_all, put };
enum class NansonVariant { strict, weak };
enum class BucklinVariant { full, simplified };
enum class CopelandVariant { copeland, llull };
enum class TopCycleVariant { getcha, gocha };
enum class CoverVariant { gillies, fishburn, bordes, mckelvey };
enum class RunoffVariant { put, naive };

WinnerSet scoring_rule(const Profile& profile, std::span<const long long> vector);
WinnerSet plurality(const Profile& profile);
WinnerSet borda(const Profile& profile);

WinnerSet instant_runoff(const Profile& profile, TieHandling ties = TieHandling::remove_all);
WinnerSet coombs(const Profile& profile, TieHandling ties = TieHandling::remove_all);
WinnerSet baldwin(const Profile& profile, TieHandling ties = TieHandling::remove_all);
WinnerSet nanson(const Profile& profile, NansonVariant variant = NansonVariant::strict);
WinnerSet bucklin(const Profile& profile, BucklinVariant variant = BucklinVariant::full);
WinnerSet plurality_runoff(const Profile& profile, RunoffVariant variant = RunoffVariant::put);

WinnerSet copeland(const MarginGraph& graph, CopelandVariant variant = CopelandVariant::copeland);
WinnerSet top_cycle(const MarginGraph& graph, TopCycleVariant variant = TopCycleVariant::getcha);
WinnerSet uncovered_set(const MarginGraph& graph, CoverVariant variant = CoverVariant::gillies);
WinnerSet beat_path(const MarginGraph& graph);
WinnerSet split_cycle(const MarginGraph& graph);
WinnerSet minimax(const MarginGraph& graph);

// Parallel-universe Ranked Pairs: every candidate that tops the locked
// ranking for some tie-breaking order of equal-margin pairs.
WinnerSet ranked_pairs(const MarginGraph& graph, std::uint64_t cap = EvalOptions{}.rp_cap);

// Number of tie-breaking orders ranked_pairs() would have to consider: the
// product of the factorials of the equal-margin group sizes, saturating at
// UINT64_MAX.
std::uint64_t ranked_pairs_tie_orders(const MarginGraph& graph);

// Ranked Pairs with the tie-breaking order taken from the ballot of the
// voter with the smallest original id.
WinnerSet ranked_pairs_zt(const Profile& profile);

// Ranked Pairs locking with a fixed agenda. `agenda` lists every ordered pair
// (x, y) with margin >= 0 in priority order. Returns the top of the
// resulting linear order.
struct CandidatePair {
  Candidate first;
  Candidate second;
  bool operator==(const CandidatePair&) const = default;
};
Candidate ranked_pairs_lock(int n, std::span<const CandidatePair> agenda);

}  // namespace pilab
