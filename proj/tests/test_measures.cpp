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

#include <cmath>
#include <string>
#include <vector>

#include "generators.hpp"
#include "pilab/appendix.hpp"
#include "pilab/error.hpp"
#include "pilab/measures.hpp"
#include "pilab/oracle.hpp"

using namespace pilab;
using pilab::testing::Gen;
using pilab::testing::profile_of;

namespace {

constexpr Candidate a = 0, b = 1, c = 2;

const EstimateRow& find_row(const std::vector<EstimateRow>& rows, Measure measure,
                            const std::string& method, const std::string& comparison,
                            double frac = 0.0) {
  for (const auto& r : rows) {
    const std::string name(parse_method(r.method + "/" + r.variant).name());
    if (r.measure == measure && name == method && r.comparison == comparison &&
        r.coalition_frac == frac) {
      return r;
    }
  }
  FAIL("row not found: ", method, " ", comparison);
  return rows.front();
}

RunConfig small_config() {
  RunConfig config;
  config.candidates = {3};
  config.voters = {2};
  config.trials = 2000;
  config.seed = 9;
  config.workers = 1;
  return config;
}

}  // namespace

TEST_CASE("witness on the top cycle example") {
  const auto& fx = appendix::profile_fixture("top_cycle");
  const Profile right = fx.right();
  const auto w = pi_violation_witness(fx.method, right);
  REQUIRE(w.has_value());
  CHECK(*w == Witness{2, b});
  CHECK(has_potent_voter(fx.method, right));
  const SingleVoterScan scan = scan_single_voters(fx.method, right);
  CHECK(scan.winners == WinnerSet{a});
  CHECK(scan.violation);
  CHECK(scan.potent);
  CHECK_FALSE(pi_violation_witness(fx.method, fx.left).has_value());
}

TEST_CASE("unanimous profiles have no potent voter") {
  const Profile p = profile_of(3, {{5, {a, b, c}}});
  for (const MethodId& m : all_methods()) {
    CHECK_MESSAGE(!has_potent_voter(m, p), m.display_name());
    CHECK_FALSE(pi_violation_witness(m, p).has_value());
  }
}

TEST_CASE("witness functions agree with the definitional oracle") {
  Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = gen.clumpy_profile(gen.uniform(3, 4), gen.uniform(2, 7));
    for (const MethodId& m : all_methods()) {
      if (m.family == Family::ranked_pairs) continue;
      const auto fast = pi_violation_witness(m, p);
      const auto slow = oracle::definitional_witness(m, p);
      CHECK_MESSAGE(fast.has_value() == slow.has_value(), m.display_name());
      CHECK(has_potent_voter(m, p) == oracle::definitional_potent(m, p));
      if (fast && slow && m.anonymous()) CHECK(fast->candidate == slow->candidate);
    }
  }
}

TEST_CASE("pair events") {
  const auto& copeland = appendix::profile_fixture("copeland");
  const Profile bac = coalition_profile(copeland.added, 1);
  CHECK(pair_violation(copeland.method, copeland.left, bac));
  CHECK_FALSE(pair_violation(parse_method("split_cycle"), copeland.left, bac));

  const Profile p = profile_of(3, {{1, {a, b, c}}});
  const Profile bca = profile_of(3, {{1, {b, c, a}}});
  CHECK_FALSE(disagree(parse_method("borda"), parse_method("plurality"), p));
  CHECK(pair_disagree(parse_method("borda"), parse_method("plurality"), p, bca));
  CHECK_FALSE(pair_disagree(parse_method("borda"), parse_method("borda"), p, bca));
}

TEST_CASE("coalition witnesses on the Coombs example") {
  const auto& fx = appendix::profile_fixture("coombs");
  const Profile right = fx.right();
  const int added = fx.left.num_voters();
  const auto found = brute_force_coalitional_pi(fx.method, right, 1);
  bool has_added = false;
  for (const auto& w : found) {
    CHECK(w.voters.size() == 1);
    has_added = has_added || (w.voters == std::vector<int>{added} && w.candidate == a);
  }
  CHECK(has_added);
  const auto pairs = brute_force_coalitional_pi(fx.method, right, 2);
  CHECK(pairs.size() >= found.size());
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    CHECK(pairs[k - 1].voters.size() <= pairs[k].voters.size());
  }
  CHECK(brute_force_coalitional_pi(parse_method("borda"), right, 3).empty());
}

TEST_CASE("tally arithmetic") {
  Gen gen(8);
  auto random_tally = [&] {
    TrialTally t;
    t.trials = gen.uniform(0, 100);
    t.skipped = gen.uniform(0, 100);
    t.cond_hits = gen.uniform(0, 100);
    t.num_event = gen.uniform(0, 100);
    t.num_base = gen.uniform(0, 100);
    t.den_event = gen.uniform(0, 100);
    t.den_base = gen.uniform(0, 100);
    return t;
  };
  for (int k = 0; k < 200; ++k) {
    const TrialTally x = random_tally(), y = random_tally(), z = random_tally();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK(x + TrialTally{} == x);
  }
}

TEST_CASE("coalition sizes round half away from zero with a floor of one") {
  CHECK(coalition_size(0.005, 1000) == 5);
  CHECK(coalition_size(0.0025, 500) == 1);
  CHECK(coalition_size(0.0025, 200) == 1);
  CHECK(coalition_size(0.0, 50) == 1);
  CHECK(coalition_size(0.1, 25) == 3);
  CHECK(coalition_size(0.1, 35) == 4);
  CHECK(coalition_size(1.0, 7) == 7);
  CHECK_THROWS_AS(coalition_size(-0.1, 10), InvalidArgument);
}

TEST_CASE("estimates") {
  EstimateRow row;
  row.measure = Measure::raw;
  row.tally = {100, 0, 100, 25, 100, 0, 0};
  finalize_estimate(row);
  REQUIRE(row.estimate.has_value());
  CHECK(*row.estimate == doctest::Approx(0.25));
  CHECK(*row.stderr_estimate == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));

  row.tally = {10, 10, 0, 0, 0, 0, 0};
  finalize_estimate(row);
  CHECK_FALSE(row.estimate.has_value());
  CHECK_FALSE(row.stderr_estimate.has_value());

  row.measure = Measure::ratio;
  row.tally = {100, 0, 100, 0, 100, 0, 100};
  finalize_estimate(row);
  CHECK_FALSE(row.estimate.has_value());

  row.tally = {100, 0, 100, 10, 100, 40, 100};
  finalize_estimate(row);
  CHECK(*row.estimate == doctest::Approx(0.25));
  CHECK(*row.stderr_estimate == doctest::Approx(std::sqrt(0.25 * 0.75 / 40)));

  row.paradigm = Paradigm::pair;
  row.tally = {100, 0, 80, 10, 80, 40, 100};
  finalize_estimate(row);
  CHECK(*row.estimate == doctest::Approx((10.0 / 80) / (40.0 / 100)));
}

TEST_CASE("names round trip") {
  for (Measure m : {Measure::raw, Measure::conditional, Measure::ratio, Measure::conditional_ratio}) {
    CHECK(parse_measure(measure_name(m)) == m);
  }
  CHECK(parse_paradigm("pair") == Paradigm::pair);
  CHECK_THROWS_AS(parse_paradigm("pairs!"), UnknownName);
}

TEST_CASE("config validation") {
  RunConfig config = small_config();
  config.methods = {parse_method("borda")};
  CHECK_NOTHROW(config.validate());
  RunConfig bad = config;
  bad.candidates = {1};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = config;
  bad.voters = {1};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = config;
  bad.coalition_fracs = {1.5};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = config;
  bad.methods.clear();
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = config;
  bad.exhaustive = true;
  bad.models = {ProbabilityModel::iac()};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("row layout with a comparison") {
  RunConfig config = small_config();
  config.methods = {parse_method("coombs")};
  config.comparisons = {parse_method("split_cycle")};
  const auto rows = run_profile_paradigm(config);
  CHECK(rows.size() == 4);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(row_key_less(rows[k - 1], rows[k]));
  CHECK(find_row(rows, Measure::raw, "coombs", "none").tally.trials == 2000);
  CHECK(find_row(rows, Measure::conditional, "coombs", "split_cycle").comparison == "split_cycle");

  config.paradigms = {Paradigm::profile, Paradigm::pair};
  config.coalition_fracs = {0.0, 0.5};
  CHECK(run_simulation(config).size() == 4 + 8);
}

TEST_CASE("exhaustive mode counts every profile") {
  const MethodId top_cycle = parse_method("top_cycle");
  const MethodId sc = parse_method("split_cycle");
  TrialTally raw, cond;
  std::uint64_t potent = 0;
  for (int m : {2, 3}) {
    oracle::enumerate_profiles(3, m, [&](const Profile& p) {
      const bool violation = oracle::definitional_witness(top_cycle, p).has_value();
      const bool is_potent = oracle::definitional_potent(top_cycle, p);
      ++raw.trials;
      raw.num_event += violation;
      potent += is_potent;
      if (disagree(top_cycle, sc, p)) {
        ++cond.cond_hits;
        cond.num_event += violation;
      }
    });
  }
  REQUIRE(raw.trials == 36 + 216);

  RunConfig config = small_config();
  config.exhaustive = true;
  config.methods = {top_cycle};
  config.comparisons = {sc};
  const auto rows = run_profile_paradigm(config);
  const auto& r = find_row(rows, Measure::raw, "top_cycle", "none");
  CHECK(r.tally.trials == raw.trials);
  CHECK(r.tally.cond_hits == raw.trials);
  CHECK(r.tally.num_event == raw.num_event);
  CHECK(r.tally.num_event > 0);
  const auto& q = find_row(rows, Measure::ratio, "top_cycle", "none");
  CHECK(q.tally.num_event == raw.num_event);
  CHECK(q.tally.den_event == potent);
  const auto& k = find_row(rows, Measure::conditional, "top_cycle", "split_cycle");
  CHECK(k.tally.cond_hits == cond.cond_hits);
  CHECK(k.tally.num_event == cond.num_event);
}

TEST_CASE("sampled estimates agree with exact enumeration") {
  const MethodId top_cycle = parse_method("top_cycle");
  double exact[2] = {0, 0};
  for (int parity = 0; parity < 2; ++parity) {
    std::uint64_t hits = 0, total = 0;
    oracle::enumerate_profiles(3, 2 + parity, [&](const Profile& p) {
      ++total;
      hits += oracle::definitional_witness(top_cycle, p).has_value();
    });
    exact[parity] = static_cast<double>(hits) / static_cast<double>(total);
  }
  const double expected = (exact[0] + exact[1]) / 2;
  REQUIRE(expected > 0.0);

  RunConfig config = small_config();
    config.trials = 20000;
  config.methods = {top_cycle};
  const auto& r = find_row(run_profile_paradigm(config), Measure::raw, "top_cycle", "none");
  CHECK(std::abs(*r.estimate - expected) < 4 * *r.stderr_estimate);
}

TEST_CASE("results do not depend on the number of workers") {
  RunConfig config = small_config();
  config.paradigms = {Paradigm::profile, Paradigm::pair};
  config.models = {ProbabilityModel::ic(), ProbabilityModel::urn(10)};
  config.methods = {parse_method("baldwin"), parse_method("copeland")};
  config.comparisons = {parse_method("split_cycle")};
  config.candidates = {4};
  config.voters = {6};
  config.coalition_fracs = {0.0, 0.2};
  config.trials = 1201;
  const auto one = run_simulation(config);
  config.workers = 4;
  const auto four = run_simulation(config);
  CHECK(one == four);
  config.seed = 10;
  CHECK(run_simulation(config) != one);
}

TEST_CASE("methods satisfying positive involvement never violate it in pairs") {
  RunConfig config = small_config();
  config.paradigms = {Paradigm::pair};
  config.models = {ProbabilityModel::ic(), ProbabilityModel::iac()};
  config.methods = oracle::pi_satisfying_methods();
  config.candidates = {3, 4};
  config.voters = {4, 10};
  config.coalition_fracs = {0.0, 0.3};
  config.trials = 400;
  for (const auto& r : run_pair_paradigm(config)) {
    if (r.measure == Measure::raw || r.measure == Measure::ratio) CHECK(r.tally.num_event == 0);
  }
}

TEST_CASE("pair rows record coalition sizes for both parities") {
  RunConfig config = small_config();
  config.paradigms = {Paradigm::pair};
  config.methods = {parse_method("coombs")};
  config.voters = {24};
  config.coalition_fracs = {0.125};
  config.trials = 50;
  const auto rows = run_pair_paradigm(config);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].coalition_size_even == 3);
  CHECK(rows[0].coalition_size_odd == 3);
  CHECK(rows[0].tally.trials == 50);
}
