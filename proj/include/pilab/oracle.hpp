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
#include "pilab/measures.hpp"
#include "pilab/methods.hpp"

namespace pilab::oracle {

// Straight from the definitions: every voter is removed and the method
// re-run on the smaller profile. No ballot deduplication, no early exit, no
// margin-graph shortcuts.
std::optional<Witness> definitional_witness(const MethodId& method, const Profile& profile,
                                            const EvalOptions& opts = {});
bool definitional_potent(const MethodId& method, const Profile& profile,
                          const EvalOptions& opts = {});

// Split Cycle by listing every simple majority cycle and deleting its
// weakest edges.
WinnerSet split_cycle_by_cycles(const MarginGraph& graph);

// Beat Path by listing every simple path.
WinnerSet beat_path_by_paths(const MarginGraph& graph);

// Ranked Pairs over every permutation of the pairs with non-negative margin
// that lists them by non-increasing margin. Throws InvalidArgument for more
// than 10 such pairs.
WinnerSet ranked_pairs_by_permutations(const MarginGraph& graph);

// Calls `visit` on each of the (n!)^m profiles with m voters.
void enumerate_profiles(int n, int m, const std::function<void(const Profile&)>& visit);

// Every antisymmetric graph on n candidates whose margins come from `values`.
void enumerate_graphs(int n, const std::vector<int>& values,
                      const std::function<void(const MarginGraph&)>& visit);

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  bool passed() const { return cases > 0 && mismatches == 0; }
};

CheckResult check_witness_functions();
CheckResult check_split_cycle();
CheckResult check_beat_path();
CheckResult check_ranked_pairs();
CheckResult check_coalitional_single();
CheckResult check_zero_violations_exhaustive();
CheckResult check_implication_chain();

// All of the above, in order; `report` sees each result as it completes.
std::vector<CheckResult> run_suite(const std::function<void(const CheckResult&)>& report = {});

// Methods proven to satisfy positive involvement.
std::vector<MethodId> pi_satisfying_methods();

}  // namespace pilab::oracle
