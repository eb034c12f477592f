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

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "generators.hpp"
#include "pilab/appendix.hpp"
#include "pilab/error.hpp"
#include "pilab/methods.hpp"

using namespace pilab;
using pilab::testing::Gen;
using pilab::testing::profile_of;

namespace {

constexpr Candidate a = 0, b = 1, c = 2, d = 3;

Profile copeland_left() {
  return profile_of(3, {{2, {a, b, c}}, {1, {b, c, a}}, {2, {c, a, b}}});
}

Profile relabel(const Profile& p, const std::vector<Candidate>& sigma) {
  std::vector<Ranking> ballots;
  for (int i = 0; i < p.num_voters(); ++i) {
    std::vector<Candidate> order;
    for (Candidate x : p.ballot(i).order()) order.push_back(sigma[x]);
    ballots.emplace_back(order);
  }
  return Profile(p.num_candidates(), ballots);
}

WinnerSet relabel(WinnerSet w, const std::vector<Candidate>& sigma) {
  WinnerSet out;
  for (Candidate x : w.members()) out.insert(sigma[x]);
  return out;
}

bool has_condorcet_winner(const MarginGraph& g, Candidate& winner) {
  for (Candidate x = 0; x < g.size(); ++x) {
    bool beats_all = true;
    for (Candidate y = 0; y < g.size(); ++y) beats_all = beats_all && (x == y || g(x, y) > 0);
    if (beats_all) {
      winner = x;
      return true;
    }
  }
  return false;
}

const EvalOptions kBigCap{1u << 24};

// Ranked Pairs winners, or nullopt when the tie-breaking cap is hit.
std::optional<WinnerSet> try_evaluate(const MethodId& m, const Profile& p,
                                      const EvalOptions& opts = kBigCap) {
  try {
    return evaluate(m, p, opts);
  } catch (const RankedPairsCapExceeded&) {
    CHECK(m.family == Family::ranked_pairs);
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("method registry") {
  CHECK(all_methods().size() == 27);
  CHECK(parse_method("coombs_put") == MethodId{Family::coombs, Variant::put});
  CHECK(parse_method("nanson/weak") == MethodId{Family::nanson, Variant::weak});
  CHECK(parse_method("nanson") == MethodId{Family::nanson, Variant::strict});
  CHECK(parse_method("scoring") == MethodId{Family::scoring, Variant::plurality});
  CHECK(parse_method("uncovered_set/fishburn").name() == "uc_fishburn");
  CHECK(parse_method("split_cycle").display_name() == "split_cycle");
  CHECK(parse_method("bucklin").display_name() == "bucklin/full");
  for (const MethodId& m : all_methods()) {
    CHECK(parse_method(m.name()) == m);
    CHECK(parse_method(m.display_name()) == m);
  }
  try {
    parse_method("shulze");
    FAIL("expected UnknownName");
  } catch (const UnknownName& e) {
    const std::string what = e.what();
    CHECK(what.find("shulze") != std::string::npos);
    CHECK(what.find("split_cycle") != std::string::npos);
    CHECK(what.find("beat_path") != std::string::npos);
  }
}

TEST_CASE("fixture winner sets") {
  const Profile baldwin_left = appendix::profile_fixture("baldwin").left;
  CHECK(borda(baldwin_left) == WinnerSet{b});

  const MarginGraph left = margin_graph(copeland_left());
  const MarginGraph right = margin_graph(concat(copeland_left(), profile_of(3, {{1, {b, a, c}}})));
  CHECK(split_cycle(left) == WinnerSet{a, c});
  CHECK(split_cycle(right) == WinnerSet{a});
  CHECK(minimax(left) == WinnerSet{a, c});
  CHECK(evaluate(parse_method("split_cycle"), copeland_left()) == WinnerSet{a, c});

  const MarginGraph::Edge top_cycle_right[] = {{a, b, 1}, {a, c, 1}, {b, c, 1}};
  CHECK(split_cycle(MarginGraph::from_edges(3, top_cycle_right, 1)) == WinnerSet{a});
}

TEST_CASE("plurality runoff variants") {
  const Profile p = profile_of(3, {{1, {a, b, c}}, {1, {b, a, c}}, {1, {c, a, b}}});
  CHECK(plurality_runoff(p, RunoffVariant::put) == WinnerSet{a, b});
  CHECK(plurality_runoff(p, RunoffVariant::naive) == WinnerSet{a, b, c});
  const Profile clear = profile_of(3, {{3, {a, b, c}}, {2, {b, c, a}}, {1, {c, a, b}}});
  CHECK(plurality_runoff(clear, RunoffVariant::put) == WinnerSet{a});
  CHECK(plurality_runoff(clear, RunoffVariant::naive) == WinnerSet{a});
}

TEST_CASE("evaluate_margin rejects ballot-based methods") {
  CHECK_THROWS_AS(evaluate_margin(parse_method("borda"), margin_graph(copeland_left())),
                  InvalidArgument);
}

TEST_CASE("ranked pairs cap") {
  const std::vector<int> zeros(16, 0);
  const MarginGraph flat(4, zeros, 0);
  CHECK(ranked_pairs_tie_orders(flat) == 479001600);  // 12 pairs of margin 0
  CHECK_THROWS_AS(ranked_pairs(flat), RankedPairsCapExceeded);
  CHECK(ranked_pairs(flat, 479001600) == WinnerSet::all(4));
  CHECK_THROWS_AS(evaluate(parse_method("ranked_pairs"), profile_of(4, {{1, {a, b, c, d}},
                                                                       {1, {d, c, b, a}}}),
                           EvalOptions{10}),
                  RankedPairsCapExceeded);
}

TEST_CASE("ranked pairs ZT uses the lowest-id voter as tiebreaker") {
  const Profile p = profile_of(3, {{1, {a, b, c}}, {1, {b, a, c}}});
  CHECK(ranked_pairs_zt(p) == WinnerSet{a});
  const Profile q = profile_of(3, {{1, {b, a, c}}, {1, {a, b, c}}});
  CHECK(ranked_pairs_zt(q) == WinnerSet{b});
  const int first[] = {0};
  CHECK(ranked_pairs_zt(remove_voters(p, first)) == WinnerSet{b});
}

TEST_CASE("lock with a fixed agenda") {
  const CandidatePair agenda[] = {{a, b}, {b, c}, {c, a}};
  CHECK(ranked_pairs_lock(3, agenda) == a);
  const CandidatePair other[] = {{c, a}, {b, c}, {a, b}};
  CHECK(ranked_pairs_lock(3, other) == b);
}

TEST_CASE("every method returns a non-empty subset of the candidates") {
  Gen gen(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 6);
    const Profile p = gen.clumpy_profile(n, gen.uniform(1, 9));
    for (const MethodId& m : all_methods()) {
      const auto w = try_evaluate(m, p);
      if (!w) continue;
      CHECK_FALSE(w->empty());
      CHECK(w->is_subset_of(WinnerSet::all(n)));
    }
  }
}

TEST_CASE("a single voter's favourite always wins alone") {
  Gen gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.uniform(1, 7);
    const Ranking r = gen.ranking(n);
    const Profile p = profile_of(n, {{gen.uniform(1, 4), std::vector<Candidate>(r.order().begin(),
                                                                                 r.order().end())}});
    for (const MethodId& m : all_methods()) {
      const auto w = try_evaluate(m, p);
      if (w) CHECK_MESSAGE(*w == WinnerSet{r.top()}, m.display_name());
    }
  }
}

TEST_CASE("anonymity: voter order does not matter except for ranked pairs ZT") {
  Gen gen(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.uniform(2, 5);
    const Profile p = gen.clumpy_profile(n, gen.uniform(2, 8));
    auto ballots = p.rankings();
    std::shuffle(ballots.begin(), ballots.end(), gen.engine());
    const Profile q(n, ballots);
    for (const MethodId& m : all_methods()) {
      if (!m.anonymous()) continue;
      const auto wp = try_evaluate(m, p);
      const auto wq = try_evaluate(m, q);
      CHECK_MESSAGE(wp.has_value() == wq.has_value(), m.display_name());
      if (wp && wq) CHECK_MESSAGE(*wp == *wq, m.display_name());
    }
  }
}

TEST_CASE("neutrality: renaming candidates renames winners") {
  Gen gen(29);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.uniform(2, 5);
    const Profile p = gen.clumpy_profile(n, gen.uniform(1, 8));
    std::vector<Candidate> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), gen.engine());
    const Profile q = relabel(p, sigma);
    for (const MethodId& m : all_methods()) {
      const auto wp = try_evaluate(m, p);
      const auto wq = try_evaluate(m, q);
      CHECK_MESSAGE(wp.has_value() == wq.has_value(), m.display_name());
      if (wp && wq) CHECK_MESSAGE(relabel(*wp, sigma) == *wq, m.display_name());
    }
  }
}

TEST_CASE("Condorcet-consistent methods elect the Condorcet winner") {
  const char* names[] = {"copeland", "llull", "top_cycle", "gocha", "uncovered_set",
                         "uc_fishburn", "uc_bordes", "uc_mckelvey", "ranked_pairs",
                         "ranked_pairs_zt", "beat_path", "split_cycle", "minimax",
                         "strict_nanson", "weak_nanson", "baldwin", "baldwin_put"};
  Gen gen(31);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = gen.uniform(2, 6);
    const Profile p = gen.profile(n, gen.uniform(1, 9));
    Candidate cw = 0;
    if (!has_condorcet_winner(margin_graph(p), cw)) continue;
    ++found;
    for (const char* name : names) {
      const auto w = try_evaluate(parse_method(name), p);
      if (w) CHECK_MESSAGE(*w == WinnerSet{cw}, name);
    }
  }
  CHECK(found > 100);
}

TEST_CASE("refinements among majoritarian methods") {
  Gen gen(37);
  const std::vector<int> values{-5, -3, -1, 0, 1, 3, 5};
  for (int trial = 0; trial < 2000; ++trial) {
    const MarginGraph g = gen.graph(gen.uniform(2, 6), values);
    const WinnerSet sc = split_cycle(g);
    CHECK(beat_path(g).is_subset_of(sc));
    CHECK(sc.is_subset_of(top_cycle(g, TopCycleVariant::getcha)));
    CHECK(top_cycle(g, TopCycleVariant::gocha).is_subset_of(top_cycle(g, TopCycleVariant::getcha)));
    if (ranked_pairs_tie_orders(g) <= 5000) CHECK(ranked_pairs(g, 5000).is_subset_of(sc));
    bool tournament = true;
    for (Candidate x = 0; x < g.size(); ++x) {
      for (Candidate y = x + 1; y < g.size(); ++y) tournament = tournament && g(x, y) != 0;
    }
    if (tournament) CHECK(copeland(g).is_subset_of(uncovered_set(g, CoverVariant::gillies)));
  }
}

TEST_CASE("full Bucklin refines simplified Bucklin") {
  Gen gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Profile p = gen.profile(gen.uniform(2, 6), gen.uniform(1, 9));
    CHECK(bucklin(p, BucklinVariant::full).is_subset_of(bucklin(p, BucklinVariant::simplified)));
  }
}

namespace {

// Instant Runoff elimination order traced by hand; reports whether any round
// had several candidates tied for fewest first places.
bool irv_has_tied_round(const Profile& p) {
  WinnerSet remaining = WinnerSet::all(p.num_candidates());
  while (remaining.size() > 1) {
    std::vector<int> firsts(p.num_candidates(), 0);
    for (int i = 0; i < p.num_voters(); ++i) {
      for (Candidate x : p.ballot(i).order()) {
        if (remaining.contains(x)) {
          ++firsts[x];
          break;
        }
      }
    }
    int low = p.num_voters() + 1;
    for (Candidate x : remaining.members()) low = std::min(low, firsts[x]);
    int at_low = 0;
    for (Candidate x : remaining.members()) at_low += firsts[x] == low;
    if (at_low > 1) return true;
    for (Candidate x : remaining.members()) {
      if (firsts[x] == low) remaining.erase(x);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("remove-all and PUT agree when no round is tied") {
  int compared = 0;
  for (int m = 1; m <= 5; ++m) {
    std::vector<Ranking> perms;
    std::vector<Candidate> order{a, b, c};
    do {
      perms.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<std::size_t> digits(m, 0);
    for (;;) {
      std::vector<Ranking> ballots;
      for (int i = 0; i < m; ++i) ballots.push_back(perms[digits[i]]);
      const Profile p(3, ballots);
      if (!irv_has_tied_round(p)) {
        ++compared;
        CHECK(instant_runoff(p, TieHandling::remove_all) == instant_runoff(p, TieHandling::put));
      }
      int k = 0;
      while (k < m && ++digits[k] == perms.size()) digits[k++] = 0;
      if (k == m) break;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("Baldwin and Nanson on the appendix examples") {
  const auto& baldwin_fx = appendix::profile_fixture("baldwin");
  CHECK(baldwin(baldwin_fx.left, TieHandling::put) == WinnerSet{c});
  CHECK(baldwin(baldwin_fx.right(), TieHandling::put) == WinnerSet{a});
  const auto& nanson_fx = appendix::profile_fixture("strict_nanson");
  CHECK(nanson(nanson_fx.left) == WinnerSet{c});
  CHECK(nanson(nanson_fx.right()) == WinnerSet{d});
}
