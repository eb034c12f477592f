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

#include <functional>
#include <string>
#include <vector>

#include "pilab/core.hpp"
#include "pilab/methods.hpp"

namespace pilab::appendix {

// A profile before and after one ballot is added; candidates a..e are 0..4.
struct ProfileFixture {
  std::string name;
  MethodId method;
  Profile left;
  Ranking added;
  WinnerSet expected_left;
  WinnerSet expected_right;

  Profile right() const;
};

// The same at the level of margin graphs.
struct GraphFixture {
  std::string name;
  MethodId method;
  MarginGraph left;
  MarginGraph right;
  Ranking added;
  WinnerSet expected_left;
  WinnerSet expected_right;
};

std::vector<ProfileFixture> profile_fixtures();
std::vector<GraphFixture> graph_fixtures();

// Looks a profile fixture up by name ("bucklin", "ranked_pairs_zt", ...).
const ProfileFixture& profile_fixture(const std::string& name);

struct Assertion {
  std::string name;
  std::string expected;
  std::string got;
  bool passed = false;
};

using ProfileEvaluator = std::function<WinnerSet(const MethodId&, const Profile&)>;
using GraphEvaluator = std::function<WinnerSet(const MethodId&, const MarginGraph&)>;

// Winner-set assertions for every fixture (left and right), plus the
// consistency checks: each right graph is its left graph plus the added
// ballot, and each fixture is a PI violation for the added voter's favourite.
// Evaluators default to evaluate() and evaluate_margin().
std::vector<Assertion> run_check(const ProfileEvaluator& profile_eval = {},
                                 const GraphEvaluator& graph_eval = {});

}  // namespace pilab::appendix
