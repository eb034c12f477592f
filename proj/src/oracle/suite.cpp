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

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pilab/measures.hpp"
#include "pilab/oracle.hpp"
#include "pilab/sampling.hpp"

namespace pilab::oracle {
namespace {

const std::vector<int> kMargins{-3, -1, 0, 1, 3};

std::string describe(const Profile& p) {
  std::ostringstream out;
  for (int i = 0; i < p.num_voters(); ++i) {
    if (i) out << ' ';
    for (Candidate c : p.ballot(i).order()) out << static_cast<char>('a' + c);
  }
  return out.str();
}

std::string describe(const MarginGraph& g) {
  std::ostringstream out;
  out << '[';
  for (Candidate a = 0; a < g.size(); ++a) {
    for (Candidate b = a + 1; b < g.size(); ++b) out << ' ' << g(a, b);
  }
  out << " ]";
  return out.str();
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

void mismatch(CheckResult& r, const std::string& what) {
  if (r.mismatches++ == 0) r.first_mismatch = what;
}

void visit_small_graphs(const std::function<void(const MarginGraph&)>& visit) {
  enumerate_graphs(3, kMargins, visit);
  enumerate_graphs(4, kMargins, visit);
  RngStream rng(20260101, 5);
  for (int k = 0; k < 1000; ++k) {
    std::vector<int> matrix(25, 0);
    for (Candidate a = 0; a < 5; ++a) {
      for (Candidate b = a + 1; b < 5; ++b) {
        const int v = kMargins[rng.below(kMargins.size())];
        matrix[a * 5 + b] = v;
        matrix[b * 5 + a] = -v;
      }
    }
    visit(MarginGraph(5, std::move(matrix), MarginGraph::kAnyParity));
  }
}

}  // namespace

std::vector<MethodId> pi_satisfying_methods() {
  return {parse_method("plurality"),    parse_method("borda"),
          parse_method("instant_runoff"), parse_method("instant_runoff_put"),
          parse_method("split_cycle"),  parse_method("minimax"),
          parse_method("plurality_runoff")};
}

CheckResult check_witness_functions() {
  auto r = named("witness and potency match definitional recomputation (3 candidates, 3 voters)");
  enumerate_profiles(3, 3, [&](const Profile& p) {
    for (const MethodId& m : all_methods()) {
      ++r.cases;
      const auto fast = pilab::pi_violation_witness(m, p);
      const auto slow = definitional_witness(m, p);
      const bool fast_potent = pilab::has_potent_voter(m, p);
      const bool slow_potent = definitional_potent(m, p);
      const SingleVoterScan scan = scan_single_voters(m, p);
      if (fast != slow || fast_potent != slow_potent || scan.violation != slow.has_value() ||
          (!scan.violation && scan.potent != slow_potent) ||
          scan.winners != evaluate(m, p)) {
        mismatch(r, m.display_name() + " on " + describe(p));
      }
    }
  });
  return r;
}

CheckResult check_split_cycle() {
  auto r = named("split_cycle matches cycle enumeration");
  visit_small_graphs([&](const MarginGraph& g) {
    ++r.cases;
    if (split_cycle(g) != split_cycle_by_cycles(g)) mismatch(r, describe(g));
  });
  return r;
}

CheckResult check_beat_path() {
  auto r = named("beat_path matches path enumeration");
  visit_small_graphs([&](const MarginGraph& g) {
    ++r.cases;
    if (beat_path(g) != beat_path_by_paths(g)) mismatch(r, describe(g));
  });
  return r;
}

CheckResult check_ranked_pairs() {
  auto r = named("grouped ranked_pairs matches full tie-order enumeration (<= 4 candidates)");
  auto visit = [&](const MarginGraph& g) {
    int zeros = 0;
    for (Candidate a = 0; a < g.size(); ++a) {
      for (Candidate b = a + 1; b < g.size(); ++b) zeros += g(a, b) == 0;
    }
    if (g.size() == 4 && zeros > 1) return;
    ++r.cases;
    if (ranked_pairs(g, 1u << 30) != ranked_pairs_by_permutations(g)) mismatch(r, describe(g));
  };
  enumerate_graphs(2, kMargins, visit);
  enumerate_graphs(3, kMargins, visit);
  enumerate_graphs(4, kMargins, visit);
  return r;
}

CheckResult check_coalitional_single() {
  auto r = named("single-voter coalitions reproduce the witness scan (3 candidates, 3 voters)");
  enumerate_profiles(3, 3, [&](const Profile& p) {
    for (const MethodId& m : all_methods()) {
      ++r.cases;
      const WinnerSet winners = evaluate(m, p);
      std::vector<CoalitionWitness> expected;
      for (int i = 0; i < p.num_voters(); ++i) {
        const Candidate x = p.ballot(i).top();
        if (!winners.contains(x) && evaluate(m, remove_voter(p, i)).contains(x)) {
          expected.push_back({{i}, x});
        }
      }
      const auto found = brute_force_coalitional_pi(m, p, 1);
      const auto first = pilab::pi_violation_witness(m, p);
      const bool first_ok = found.empty() ? !first
                                          : first && first->voter == found.front().voters[0] &&
                                                first->candidate == found.front().candidate;
      if (found != expected || !first_ok) mismatch(r, m.display_name() + " on " + describe(p));
    }
  });
  return r;
}

CheckResult check_zero_violations_exhaustive() {
  auto r = named("no PI violations for PI-satisfying methods (3 candidates, 3-4 voters)");
  const auto methods = pi_satisfying_methods();
  std::vector<Ranking> ballots;
  enumerate_profiles(3, 1, [&](const Profile& p) { ballots.push_back(p.ballot(0).to_ranking()); });
  for (int m = 3; m <= 4; ++m) {
    enumerate_profiles(3, m, [&](const Profile& p) {
      for (const MethodId& f : methods) {
        ++r.cases;
        if (pilab::pi_violation_witness(f, p)) mismatch(r, f.display_name() + " on " + describe(p));
        for (const Ranking& l : ballots) {
          if (pair_violation(f, p, coalition_profile(l, 1))) {
            mismatch(r, f.display_name() + " pair on " + describe(p));
          }
        }
      }
    });
  }
  const MethodId sc = parse_method("split_cycle");
  for (int m = 2; m <= 5; ++m) {
    enumerate_profiles(3, m, [&](const Profile& p) {
      ++r.cases;
      if (!brute_force_coalitional_pi(sc, p, m - 1).empty()) {
        mismatch(r, "split_cycle coalition on " + describe(p));
      }
    });
  }
  return r;
}

CheckResult check_implication_chain() {
  auto r = named("witness implies potent voter implies pivotal voter (3 candidates, 3-4 voters)");
  for (int m = 3; m <= 4; ++m) {
    enumerate_profiles(3, m, [&](const Profile& p) {
      for (const MethodId& f : all_methods()) {
        ++r.cases;
        const WinnerSet winners = evaluate(f, p);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          const WinnerSet reduced = evaluate(f, remove_voter(p, i));
          const Candidate x = p.ballot(i).top();
          const bool witness = reduced.contains(x) && !winners.contains(x);
          const bool potent = !reduced.is_subset_of(winners);
          const bool pivotal = reduced != winners;
          ok = ok && (!witness || potent) && (!potent || pivotal);
        }
        if (pilab::pi_violation_witness(f, p) && !pilab::has_potent_voter(f, p)) ok = false;
        if (!ok) mismatch(r, f.display_name() + " on " + describe(p));
      }
    });
  }
  return r;
}

std::vector<CheckResult> run_suite(const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> out;
  for (auto check : {check_witness_functions, check_split_cycle, check_beat_path,
                     check_ranked_pairs, check_coalitional_single,
                     check_zero_violations_exhaustive, check_implication_chain}) {
    out.push_back(check());
    if (report) report(out.back());
  }
  return out;
}

}  // namespace pilab::oracle
