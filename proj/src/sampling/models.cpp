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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/sampling.hpp"

namespace pilab {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Probability-weighted urn draw k (0-based): a fresh ranking with probability
// n!/(n! + k*alpha), otherwise a copy of a uniformly chosen earlier draw.
// This is the Polya-Eggenberger urn without materialising its n! tickets.
bool urn_draws_fresh(int n, unsigned alpha, std::uint64_t k, RngStream& rng) {
  if (alpha == 0 || k == 0) return true;
  const std::uint64_t tickets = factorial(n);
  const std::uint64_t copies = k * alpha;
  if (copies > std::numeric_limits<std::uint64_t>::max() - tickets) {
    const long double p = static_cast<long double>(tickets) /
                          (static_cast<long double>(tickets) + static_cast<long double>(copies));
    return rng.unit() < p;
  }
  return rng.below(tickets + copies) < tickets;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

std::string ProbabilityModel::name() const {
  if (kind == Kind::urn) {
    if (alpha == 0) return "IC";
    if (alpha == 1) return "IAC";
    if (alpha == 10) return "URN";
    return "URN-" + std::to_string(alpha);
  }
  if (two_refs && phi == 0.8) return "MALLOWS";
  return (two_refs ? "MALLOWS-" : "MALLOWS1-") + format_real(phi);
}

void ProbabilityModel::validate() const {
  if (kind == Kind::mallows && !(phi > 0.0 && phi <= 1.0)) {
    throw InvalidArgument("Mallows phi must lie in (0, 1], got " + format_real(phi));
  }
}

ProbabilityModel parse_model(std::string_view name) {
  if (name == "IC") return ProbabilityModel::ic();
  if (name == "IAC") return ProbabilityModel::iac();
  if (name == "URN") return ProbabilityModel::urn(10);
  if (name == "MALLOWS") return ProbabilityModel::mallows(0.8, true);
  auto suffix = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix) {
      return name.substr(prefix.size());
    }
    return std::nullopt;
  };
  if (auto rest = suffix("URN-")) {
    unsigned alpha = 0;
    auto [ptr, ec] = std::from_chars(rest->data(), rest->data() + rest->size(), alpha);
    if (ec == std::errc() && ptr == rest->data() + rest->size()) return ProbabilityModel::urn(alpha);
  }
  for (bool two : {true, false}) {
    if (auto rest = suffix(two ? "MALLOWS-" : "MALLOWS1-")) {
      try {
        std::size_t used = 0;
        const double phi = std::stod(std::string(*rest), &used);
        if (used == rest->size()) {
          ProbabilityModel m = ProbabilityModel::mallows(phi, two);
          m.validate();
          return m;
        }
      } catch (const std::logic_error&) {
      }
    }
  }
  throw UnknownName("unknown probability model '" + std::string(name) +
                    "'; valid models: IC, IAC, URN, MALLOWS, URN-<alpha>, MALLOWS-<phi>, "
                    "MALLOWS1-<phi>");
}

Ranking sample_ranking_uniform(int n, RngStream& rng) {
  std::vector<Candidate> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  return Ranking(std::move(order));
}

// Repeated insertion: the i-th reference item goes d places above the bottom
// of the partial list with probability proportional to phi^d, adding d
// discordant pairs.
Ranking sample_ranking_mallows(const Ranking& reference, double phi, RngStream& rng) {
  const int n = reference.size();
  std::vector<Candidate> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    double w = 1.0;
    for (int d = 0; d <= i; ++d, w *= phi) total += w;
    double u = rng.unit() * total;
    int d = 0;
    w = 1.0;
    while (d < i && u >= w) {
      u -= w;
      w *= phi;
      ++d;
    }
    order.insert(order.end() - d, reference.at(i));
  }
  return Ranking(std::move(order));
}

namespace {

Ranking mallows_ballot(const ProbabilityModel& model, int n, RngStream& rng) {
  const Ranking identity = Ranking::identity(n);
  if (model.two_refs && rng.below(2) == 1) {
    return sample_ranking_mallows(identity.reversed(), model.phi, rng);
  }
  return sample_ranking_mallows(identity, model.phi, rng);
}

}  // namespace

Profile sample_profile(const ProbabilityModel& model, int n_candidates, int n_voters,
                       RngStream& rng) {
  model.validate();
  if (n_candidates < 1 || n_candidates > kMaxCandidates) {
    throw InvalidArgument("candidate count out of range: " + std::to_string(n_candidates));
  }
  if (n_voters < 1) throw InvalidArgument("voter count must be positive");
  std::vector<Ranking> ballots;
  ballots.reserve(static_cast<std::size_t>(n_voters));
  for (int k = 0; k < n_voters; ++k) {
    if (model.kind == ProbabilityModel::Kind::mallows) {
      ballots.push_back(mallows_ballot(model, n_candidates, rng));
    } else if (urn_draws_fresh(n_candidates, model.alpha, static_cast<std::uint64_t>(k), rng)) {
      ballots.push_back(sample_ranking_uniform(n_candidates, rng));
    } else {
      ballots.push_back(ballots[rng.below(static_cast<std::uint64_t>(k))]);
    }
  }
  return Profile(n_candidates, ballots);
}

Ranking sample_coalition_ranking(const ProbabilityModel& model, const Profile& electorate,
                                 CoalitionDraw policy, RngStream& rng) {
  const int n = electorate.num_candidates();
  if (model.kind == ProbabilityModel::Kind::mallows) return mallows_ballot(model, n, rng);
  const auto k = static_cast<std::uint64_t>(electorate.num_voters());
  if (policy == CoalitionDraw::fresh || urn_draws_fresh(n, model.alpha, k, rng)) {
    return sample_ranking_uniform(n, rng);
  }
  return electorate.ballot(static_cast<int>(rng.below(k))).to_ranking();
}

Profile coalition_profile(const Ranking& ranking, int size) {
  if (size < 1) throw InvalidArgument("coalition size must be positive");
  const std::vector<Ranking> ballots(static_cast<std::size_t>(size), ranking);
  return Profile(ranking.size(), ballots);
}

Profile sample_coalition(const ProbabilityModel& model, const Profile& electorate, int size,
                         CoalitionDraw policy, RngStream& rng) {
  if (size < 1) throw InvalidArgument("coalition size must be positive");
  return coalition_profile(sample_coalition_ranking(model, electorate, policy, rng), size);
}

Ranking move_to_top(const Ranking& ranking, Candidate a) {
  if (a < 0 || a >= ranking.size()) throw InvalidArgument("candidate index out of range");
  std::vector<Candidate> order{a};
  order.reserve(static_cast<std::size_t>(ranking.size()));
  for (Candidate c : ranking.order()) {
    if (c != a) order.push_back(c);
  }
  return Ranking(std::move(order));
}

}  // namespace pilab
