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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pilab/core.hpp"
#include "pilab/methods.hpp"
#include "pilab/sampling.hpp"

namespace pilab {

// ---------------------------------------------------------------------------
// Single-profile events

struct Witness {
  int voter;            // position in the profile
  Candidate candidate;  // the voter's favourite
  bool operator==(const Witness&) const = default;
};

// First voter i (ascending position) whose favourite wins in P_{-i} but not
// in P. Voters whose ballot repeats an already checked ballot are skipped for
// anonymous methods. Requires at least two voters.
std::optional<Witness> pi_violation_witness(const MethodId& method, const Profile& profile,
                                            const EvalOptions& opts = {});

// True iff some voter i has F(P_{-i}) not a subset of F(P).
bool has_potent_voter(const MethodId& method, const Profile& profile,
                      const EvalOptions& opts = {});

// Everything the profile paradigm needs from one profile, in one pass over
// the voters.
struct SingleVoterScan {
  WinnerSet winners;
  bool violation = false;
  bool potent = false;
};
SingleVoterScan scan_single_voters(const MethodId& method, const Profile& profile,
                                   const EvalOptions& opts = {});

// The coalition's common favourite x wins in P but not in P + P_C.
bool pair_violation(const MethodId& method, const Profile& profile, const Profile& coalition,
                    const EvalOptions& opts = {});

bool disagree(const MethodId& f1, const MethodId& f2, const Profile& profile,
              const EvalOptions& opts = {});
// Disagreement in P or in P + P_C.
bool pair_disagree(const MethodId& f1, const MethodId& f2, const Profile& profile,
                   const Profile& coalition, const EvalOptions& opts = {});

struct CoalitionWitness {
  std::vector<int> voters;  // positions, ascending
  Candidate candidate;
  bool operator==(const CoalitionWitness&) const = default;
};

// Every coalition of at most `max_coalition` voters with identical ballots
// whose removal makes their favourite a winner it was not in P. Exhaustive;
// limited to profiles of at most 8 voters.
std::vector<CoalitionWitness> brute_force_coalitional_pi(const MethodId& method,
                                                         const Profile& profile,
                                                         int max_coalition,
                                                         const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// Monte-Carlo estimation

enum class Paradigm { profile, pair };
enum class Measure { raw, conditional, ratio, conditional_ratio };

std::string_view paradigm_name(Paradigm p);
std::string_view measure_name(Measure m);
Paradigm parse_paradigm(std::string_view name);
Measure parse_measure(std::string_view name);

struct TrialTally {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t cond_hits = 0;
  std::uint64_t num_event = 0;
  std::uint64_t num_base = 0;
  std::uint64_t den_event = 0;
  std::uint64_t den_base = 0;

  TrialTally& operator+=(const TrialTally& o);
  bool operator==(const TrialTally&) const = default;
};
TrialTally operator+(TrialTally lhs, const TrialTally& rhs);

struct EstimateRow {
  Paradigm paradigm = Paradigm::profile;
  Measure measure = Measure::raw;
  std::string model;
  std::string method;      // family
  std::string variant;
  std::string comparison;  // "none" or a method name
  int candidates = 0;
  int voters = 0;          // even base m; trials split between m and m+1
  double coalition_frac = 0.0;
  int coalition_size_even = 0;
  int coalition_size_odd = 0;
  TrialTally tally;
  std::optional<double> estimate;
  std::optional<double> stderr_estimate;
  std::uint64_t seed = 0;

  bool operator==(const EstimateRow&) const = default;
};

// Fills estimate and stderr_estimate from the tally. Probabilities are
// num_event/cond_hits; ratios are (num_event/num_base)/(den_event/den_base).
// Undefined estimates stay empty.
void finalize_estimate(EstimateRow& row);

// Strict weak order on the key columns; the CSV row order.
bool row_key_less(const EstimateRow& lhs, const EstimateRow& rhs);

// max(1, round-half-away-from-zero(frac * voters)).
int coalition_size(double frac, int voters);

struct RunConfig {
  std::vector<Paradigm> paradigms{Paradigm::profile};
  std::vector<ProbabilityModel> models{ProbabilityModel::ic()};
  std::vector<MethodId> methods;
  std::vector<MethodId> comparisons;
  std::vector<int> candidates;
  std::vector<int> voters;
  // Split between m voters (ceil half) and m+1 voters (floor half).
  std::uint64_t trials = 50'000;
  std::vector<double> coalition_fracs{0.0};
  std::uint64_t seed = 0;
  std::uint64_t rp_cap = EvalOptions{}.rp_cap;
  CoalitionDraw coalition_draw = CoalitionDraw::continue_process;
  // 0 means the available hardware parallelism.
  unsigned workers = 0;
  // Profile paradigm under IC only: enumerate every profile with m and m+1
  // voters instead of sampling.
  bool exhaustive = false;

  // Throws InvalidArgument describing the first problem.
  void validate() const;
};

// Called with (completed trials, total trials); may be invoked from a worker
// thread, never concurrently.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

std::vector<EstimateRow> run_profile_paradigm(const RunConfig& config,
                                              const ProgressFn& progress = {});
std::vector<EstimateRow> run_pair_paradigm(const RunConfig& config,
                                           const ProgressFn& progress = {});

// Both paradigms as configured, rows in key order. Throws Error if every
// trial of every row was skipped.
std::vector<EstimateRow> run_simulation(const RunConfig& config, const ProgressFn& progress = {});

}  // namespace pilab
