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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pilab/appendix.hpp"
#include "pilab/error.hpp"
#include "pilab/sampling.hpp"

namespace pilab::appendix {
namespace {

constexpr Candidate a = 0, b = 1, c = 2, d = 3, e = 4;

struct Group {
  int count;
  std::vector<Candidate> order;
};

Profile build(int n, const std::vector<Group>& groups) {
  std::vector<Ranking> ballots;
  for (const auto& g : groups) {
    for (int k = 0; k < g.count; ++k) ballots.emplace_back(g.order);
  }
  return Profile(n, ballots);
}

const std::vector<ProfileFixture>& profile_table() {
  static const std::vector<ProfileFixture> table = [] {
    std::vector<ProfileFixture> t;
    auto add = [&](std::string name, const char* method, int n, std::vector<Group> left,
                   std::vector<Candidate> added, WinnerSet wl, WinnerSet wr) {
      t.push_back({std::move(name), parse_method(method), build(n, left), Ranking(std::move(added)),
                   wl, wr});
    };
    const std::vector<Group> baldwin{
        {1, {b, a, d, c}}, {2, {c, b, d, a}}, {1, {d, a, c, b}}, {1, {d, b, a, c}},
        {1, {a, c, b, d}}};
    add("baldwin", "baldwin", 4, baldwin, {c, a, b, d}, {c}, {a});
    add("baldwin_put", "baldwin_put", 4, baldwin, {c, a, b, d}, {c}, {a});

    const std::vector<Group> bucklin{
        {1, {a, b, c, e, d}}, {1, {a, e, c, b, d}}, {1, {b, e, c, d, a}}, {1, {c, d, a, b, e}}};
    add("bucklin", "bucklin", 5, bucklin, {c, e, b, d, a}, {c}, {e});
    add("simplified_bucklin", "simplified_bucklin", 5, bucklin, {c, e, b, d, a}, {a, c}, {e});

    const std::vector<Group> coombs{
        {1, {a, b, d, c}}, {2, {c, a, d, b}}, {1, {a, d, b, c}}, {1, {b, c, d, a}},
        {1, {c, b, a, d}}};
    add("coombs", "coombs", 4, coombs, {a, d, c, b}, {a}, {c});
    add("coombs_put", "coombs_put", 4, coombs, {a, d, c, b}, {a, c}, {c});

    const std::vector<Group> copeland{{2, {a, b, c}}, {1, {b, c, a}}, {2, {c, a, b}}};
    add("copeland", "copeland", 3, copeland, {b, a, c}, {a, b, c}, {a});
    add("llull", "llull", 3, copeland, {b, a, c}, {a, b, c}, {a});
    add("uncovered_set", "uncovered_set", 3, copeland, {b, a, c}, {a, b, c}, {a, c});
    add("uc_fishburn", "uc_fishburn", 3, copeland, {b, a, c}, {a, b, c}, {a});

    add("strict_nanson", "strict_nanson", 4,
        {{1, {a, c, d, b}}, {1, {d, b, c, a}}, {3, {c, b, a, d}}, {3, {a, d, c, b}},
         {1, {d, c, a, b}}, {1, {d, c, b, a}}},
        {c, d, b, a}, {c}, {d});

    // The first voter breaks ties.
    add("ranked_pairs_zt", "ranked_pairs_zt", 4,
        {{1, {c, a, d, b}}, {2, {a, b, d, c}}, {2, {b, d, c, a}}}, {b, a, c, d}, {b}, {a});

    add("top_cycle", "top_cycle", 3, {{1, {a, b, c}}, {1, {c, a, b}}}, {b, a, c}, {a, b, c},
        {a});
    return t;
  }();
  return table;
}

}  // namespace

Profile ProfileFixture::right() const { return concat(left, coalition_profile(added, 1)); }

std::vector<ProfileFixture> profile_fixtures() { return profile_table(); }

const ProfileFixture& profile_fixture(const std::string& name) {
  for (const auto& f : profile_table()) {
    if (f.name == name) return f;
  }
  throw UnknownName("no appendix fixture named '" + name + "'");
}

std::vector<GraphFixture> graph_fixtures() {
  using E = MarginGraph::Edge;
  std::vector<GraphFixture> t;
  {
    const std::vector<E> left{{a, b, 1}, {a, d, 1}, {b, d, 3}, {c, b, 3}, {c, a, 1}, {d, c, 3}};
    const std::vector<E> right{{a, d, 2}, {b, d, 4}, {c, b, 2}, {d, c, 2}};
    t.push_back({"beat_path", parse_method("beat_path"), MarginGraph::from_edges(4, left, 1),
                 MarginGraph::from_edges(4, right, 0), Ranking({b, a, c, d}), {a, b, c, d},
                 {a}});
  }
  {
    const std::vector<E> left{{a, c, 8}, {a, d, 2}, {b, a, 2}, {c, b, 2}, {d, b, 4}, {d, c, 6}};
    const std::vector<E> right{{a, c, 9}, {a, d, 1}, {b, a, 1}, {c, b, 3}, {d, b, 5}, {d, c, 7}};
    t.push_back({"ranked_pairs", parse_method("ranked_pairs"),
                 MarginGraph::from_edges(4, left, 0), MarginGraph::from_edges(4, right, 1),
                 Ranking({d, a, c, b}), {a, d}, {a}});
  }
  return t;
}

std::vector<Assertion> run_check(const ProfileEvaluator& profile_eval,
                                 const GraphEvaluator& graph_eval) {
  const ProfileEvaluator pe = profile_eval ? profile_eval : [](const MethodId& m, const Profile& p) {
    return evaluate(m, p);
  };
  const GraphEvaluator ge = graph_eval ? graph_eval : [](const MethodId& m, const MarginGraph& g) {
    return evaluate_margin(m, g);
  };
  const auto labels = std::vector<std::string>{"a", "b", "c", "d", "e"};
  std::vector<Assertion> out;

  auto winners = [&](std::string name, WinnerSet expected,
                     auto&& compute) -> std::optional<WinnerSet> {
    Assertion r{std::move(name), format_set(expected, labels), "", false};
    std::optional<WinnerSet> got;
    try {
      got = compute();
      r.got = format_set(*got, labels);
      r.passed = *got == expected;
    } catch (const std::exception& ex) {
      r.got = std::string("error: ") + ex.what();
    }
    out.push_back(std::move(r));
    return got;
  };
  auto violation = [](Candidate x, const std::optional<WinnerSet>& before,
                      const std::optional<WinnerSet>& after) {
    return before && after && before->contains(x) && !after->contains(x);
  };
  auto fact = [&](std::string name, bool holds) {
    out.push_back({std::move(name), "true", holds ? "true" : "false", holds});
  };

  for (const auto& f : profile_table()) {
    const Profile right = f.right();
    const std::string m = f.method.display_name();
    const auto before =
        winners(f.name + " left: " + m, f.expected_left, [&] { return pe(f.method, f.left); });
    const auto after =
        winners(f.name + " right: " + m, f.expected_right, [&] { return pe(f.method, right); });
    const Candidate x = f.added.top();
    fact(f.name + ": added voter's favourite " + labels[x] + " wins before, loses after",
         violation(x, before, after));
  }
  for (const auto& f : graph_fixtures()) {
    const std::string m = f.method.display_name();
    const auto before = winners(f.name + " left graph: " + m, f.expected_left,
                                [&] { return ge(f.method, f.left); });
    const auto after = winners(f.name + " right graph: " + m, f.expected_right,
                               [&] { return ge(f.method, f.right); });
    MarginGraph shifted = f.left;
    shifted.add_ballot(f.added);
    fact(f.name + ": right graph is left graph plus the added ballot", shifted == f.right);
    const Candidate x = f.added.top();
    fact(f.name + ": added voter's favourite " + labels[x] + " wins before, loses after",
         violation(x, before, after));
  }
  return out;
}

}  // namespace pilab::appendix
