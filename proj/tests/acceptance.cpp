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

// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pilab/appendix.hpp"
#include "pilab/error.hpp"
#include "pilab/io.hpp"
#include "pilab/measures.hpp"
#include "pilab/oracle.hpp"

using namespace pilab;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void gate(const char* name, const std::function<Outcome()>& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = criterion();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.passed;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const EstimateRow& row_for(const std::vector<EstimateRow>& rows, Measure measure,
                           const MethodId& method, int candidates, int voters,
                           const std::string& comparison = "none") {
  for (const auto& r : rows) {
    if (r.measure == measure && parse_method(r.method + "/" + r.variant) == method &&
        r.candidates == candidates && r.voters == voters && r.comparison == comparison) {
      return r;
    }
  }
  throw Error("missing row for " + method.display_name());
}

Outcome appendix_suite() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = appendix::run_check();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int winner_sets = 0, failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    const std::string head = r.name.substr(0, r.name.find(':'));
    winner_sets += head.ends_with(" left") || head.ends_with(" right") ||
                   head.ends_with(" graph");
  }
  return {failed == 0 && winner_sets >= 14 && secs < 1.0,
          std::to_string(winner_sets) + " winner-set assertions, " +
              std::to_string(results.size()) + " checks, " + std::to_string(failed) +
              " failed, " + fmt("%.3f s", secs)};
}

Outcome zero_violations() {
  const auto exhaustive = oracle::check_zero_violations_exhaustive();
  std::uint64_t hits = exhaustive.mismatches, skipped = 0, trials[2] = {0, 0};

  RunConfig config;
  config.models = {parse_model("IC"), parse_model("IAC"), parse_model("URN"),
                   parse_model("MALLOWS")};
  config.methods = oracle::pi_satisfying_methods();
  config.candidates = {3, 4, 5, 6};
  config.voters = {4, 10};
  config.seed = 20240601;
  config.trials = 3125;  // 32 cells
  config.paradigms = {Paradigm::profile};
  const auto profile_rows = run_profile_paradigm(config);
  config.paradigms = {Paradigm::pair};
  config.coalition_fracs = {0.0, 0.2};
  config.trials = 1563;  // 64 cells
  const auto pair_rows = run_pair_paradigm(config);

  const MethodId first = config.methods.front();
  for (const auto* rows : {&profile_rows, &pair_rows}) {
    const int k = rows == &profile_rows ? 0 : 1;
    for (const auto& r : *rows) {
      if (r.measure != Measure::raw && r.measure != Measure::ratio) continue;
      hits += r.tally.num_event;
      skipped += r.tally.skipped;
      if (r.measure == Measure::raw && parse_method(r.method + "/" + r.variant) == first) {
        trials[k] += r.tally.trials;
      }
    }
  }
  return {hits == 0 && exhaustive.passed() && trials[0] >= 100000 && trials[1] >= 100000,
          std::to_string(hits) + " violations; exhaustive " + std::to_string(exhaustive.cases) +
              " cases; sampled " + std::to_string(trials[0]) + " profile + " +
              std::to_string(trials[1]) + " pair trials per method, " + std::to_string(skipped) +
              " skipped"};
}

Outcome oracle_equivalence() {
  const oracle::CheckResult checks[] = {oracle::check_witness_functions(),
                                        oracle::check_split_cycle(),
                                        oracle::check_ranked_pairs()};
  bool ok = checks[0].cases >= 216 * all_methods().size() && checks[1].cases >= 1000;
  std::string detail;
  for (const auto& c : checks) {
    ok = ok && c.passed();
    detail += (detail.empty() ? "" : "; ") + c.name + " " + std::to_string(c.cases) + " cases, " +
              std::to_string(c.mismatches) + " mismatches";
  }
  return {ok, detail};
}

Outcome trends() {
  RunConfig config;
  config.methods = {parse_method("coombs"), parse_method("baldwin"), parse_method("strict_nanson")};
  config.trials = 5000;
  config.seed = 31;
  config.candidates = {3, 5, 6};
  config.voters = {20, 100};
  const auto rows = run_profile_paradigm(config);
  bool ok = true;
  std::string detail;
  auto separated = [&](const EstimateRow& hi, const EstimateRow& lo) {
    const double se = std::hypot(*hi.stderr_estimate, *lo.stderr_estimate);
    const double gap = *hi.estimate - *lo.estimate;
    return std::pair<bool, double>{gap >= 2 * se && gap > 0, se > 0 ? gap / se : INFINITY};
  };
  for (const MethodId& m : config.methods) {
    const auto& c3 = row_for(rows, Measure::raw, m, 3, 20);
    const auto& c6 = row_for(rows, Measure::raw, m, 6, 20);
    const auto& v20 = row_for(rows, Measure::raw, m, 5, 20);
    const auto& v100 = row_for(rows, Measure::raw, m, 5, 100);
    const auto [cand_ok, cand_z] = separated(c6, c3);
    const auto [voter_ok, voter_z] = separated(v20, v100);
    ok = ok && cand_ok && voter_ok;
    detail += (detail.empty() ? "" : "; ") + std::string(m.name()) +
              fmt(" 6c %.4f vs 3c %.4f (%.1f SE), m20 %.4f", *c6.estimate, *c3.estimate, cand_z,
                  *v20.estimate) +
              fmt(" vs m100 %.4f (%.1f SE)", *v100.estimate, voter_z);
  }
  return {ok, detail};
}

Outcome conditioning() {
  RunConfig config;
  config.methods = {parse_method("baldwin")};
  config.comparisons = {parse_method("split_cycle")};
  config.candidates = {4};
  config.voters = {10};
  config.trials = 50000;
  config.seed = 47;
  const auto rows = run_profile_paradigm(config);
  const auto& raw = row_for(rows, Measure::raw, config.methods[0], 4, 10);
  const auto& cond = row_for(rows, Measure::conditional, config.methods[0], 4, 10, "split_cycle");
  const double ratio = *cond.estimate / *raw.estimate;
  return {ratio >= 3.0, fmt("raw %.4f, conditional %.4f, ratio %.2f", *raw.estimate,
                            *cond.estimate, ratio)};
}

Outcome regularity() {
  const MethodId sc = parse_method("split_cycle");
  const MethodId methods[] = {parse_method("copeland"), parse_method("top_cycle")};
  std::uint64_t violations[2] = {0, 0}, counterexamples = 0, profiles = 0;
  for (int m : {5, 6}) {
    for (std::uint64_t t = 0; t < 50000; ++t) {
      RngStream rng(73, stream_key({7, static_cast<std::uint64_t>(m), t}));
      const Profile p = sample_profile(ProbabilityModel::ic(), 3, m, rng);
      ++profiles;
      const WinnerSet sc_p = evaluate(sc, p);
      for (int i = 0; i < m; ++i) {
        const int voter[] = {i};
        const Profile rest = remove_voters(p, voter);
        const Candidate fav = p.ballot(i).top();
        const WinnerSet sc_rest = evaluate(sc, rest);
        for (int k = 0; k < 2; ++k) {
          const WinnerSet f_p = evaluate(methods[k], p);
          const WinnerSet f_rest = evaluate(methods[k], rest);
          if (!f_rest.contains(fav) || f_p.contains(fav)) continue;
          ++violations[k];
          counterexamples += !(f_p == sc_p) || f_rest == sc_rest;
        }
      }
    }
  }
  return {counterexamples == 0 && profiles == 100000,
          std::to_string(counterexamples) + " counterexamples over " + std::to_string(profiles) +
              " profiles (" + std::to_string(violations[0]) + " copeland and " +
              std::to_string(violations[1]) + " top_cycle violating voters)"};
}

Outcome determinism() {
  RunConfig config;
  config.paradigms = {Paradigm::profile, Paradigm::pair};
  config.models = {parse_model("IC"), parse_model("MALLOWS")};
  config.methods = {parse_method("coombs"), parse_method("baldwin"), parse_method("ranked_pairs")};
  config.comparisons = {parse_method("split_cycle"), parse_method("borda")};
  config.candidates = {4, 5};
  config.voters = {10};
  config.coalition_fracs = {0.0, 0.1};
  config.trials = 2001;
  config.seed = 99;
  config.workers = 1;
  const std::string one = format_results(run_simulation(config));
  config.workers = 8;
  const std::string eight = format_results(run_simulation(config));
  return {one == eight, std::to_string(one.size()) + " CSV bytes, " +
                            (one == eight ? "identical" : "different")};
}

}  // namespace

int main() {
  gate("appendix golden suite", appendix_suite);
  gate("zero violations for PI-satisfying methods", zero_violations);
  gate("oracle equivalence", oracle_equivalence);
  gate("trends in candidates and voters", trends);
  gate("conditioning amplification", conditioning);
  gate("regularity of copeland and top_cycle violations", regularity);
  gate("determinism across worker counts", determinism);
  std::printf("%s: %d of 7 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
