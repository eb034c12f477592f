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

#include <doctest.h>

#include <set>
#include <string>

#include "pilab/appendix.hpp"
#include "pilab/core.hpp"

using namespace pilab;

namespace {

// Coombs that drops only the lowest-numbered of several candidates tied for
// most last places.
WinnerSet coombs_one_at_a_time(const Profile& p) {
  WinnerSet remaining = WinnerSet::all(p.num_candidates());
  while (remaining.size() > 1) {
    std::vector<int> firsts(p.num_candidates(), 0), lasts(p.num_candidates(), 0);
    for (int i = 0; i < p.num_voters(); ++i) {
      const auto order = p.ballot(i).order();
      for (Candidate x : order) {
        if (remaining.contains(x)) {
          ++firsts[x];
          break;
        }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (remaining.contains(*it)) {
          ++lasts[*it];
          break;
        }
      }
    }
    for (Candidate x : remaining.members()) {
      if (2 * firsts[x] > p.num_voters()) return WinnerSet{x};
    }
    Candidate worst = remaining.first();
    for (Candidate x : remaining.members()) {
      if (lasts[x] > lasts[worst]) worst = x;
    }
    remaining.erase(worst);
  }
  return remaining;
}

}  // namespace

TEST_CASE("every appendix assertion passes") {
  const auto results = appendix::run_check();
  CHECK(results.size() >= 14);
  std::set<std::string> names;
  for (const auto& r : results) {
    INFO(r.name, " expected ", r.expected, " got ", r.got);
    CHECK(r.passed);
    CHECK(r.expected == r.got);
    names.insert(r.name);
  }
  CHECK(names.size() == results.size());
}

TEST_CASE("fixtures cover every method family in the appendix") {
  std::set<std::string> methods;
  for (const auto& f : appendix::profile_fixtures()) methods.insert(std::string(f.method.name()));
  for (const auto& f : appendix::graph_fixtures()) methods.insert(std::string(f.method.name()));
  for (const char* m : {"baldwin", "beat_path", "bucklin", "simplified_bucklin", "coombs",
                        "coombs_put", "copeland", "llull", "uncovered_set", "uc_fishburn",
                        "strict_nanson", "ranked_pairs", "ranked_pairs_zt", "top_cycle"}) {
    CHECK_MESSAGE(methods.count(m) == 1, m);
  }
}

TEST_CASE("each fixture right profile adds exactly one ballot") {
  for (const auto& f : appendix::profile_fixtures()) {
    const Profile right = f.right();
    CHECK(right.num_voters() == f.left.num_voters() + 1);
    CHECK(right.ballot(right.num_voters() - 1).top() == f.added.top());
    CHECK(f.expected_left.contains(f.added.top()));
    CHECK_FALSE(f.expected_right.contains(f.added.top()));
  }
}

TEST_CASE("a mis-implemented Coombs is caught") {
  const auto results = appendix::run_check(
      [](const MethodId& m, const Profile& p) {
        if (m == parse_method("coombs")) return coombs_one_at_a_time(p);
        return evaluate(m, p, EvalOptions{1u << 20});
      },
      {});
  int coombs_failures = 0;
  int other_failures = 0;
  for (const auto& r : results) {
    if (r.passed) continue;
    if (r.name.rfind("coombs", 0) == 0 && r.name.rfind("coombs_put", 0) != 0) {
      ++coombs_failures;
    } else {
      ++other_failures;
    }
  }
  CHECK(coombs_failures > 0);
  CHECK(other_failures == 0);
}
