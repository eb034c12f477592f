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
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>

#include "pilab/core.hpp"

namespace pilab {

// Deterministic random stream. The generator is std::mt19937_64 seeded with
// std::seed_seq over the 32-bit halves of (master_seed, stream_index), so a
// given pair always yields the same draws and distinct indices give
// unrelated streams.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform real in [0, 1).
  double unit();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Mixes several keys into one stream index (SplitMix64 finalizer chain).
std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts);

struct ProbabilityModel {
  enum class Kind { urn, mallows };

  Kind kind = Kind::urn;
  // Urn reinforcement: 0 is impartial culture, 1 impartial anonymous culture.
  unsigned alpha = 0;
  // Mallows dispersion in (0, 1].
  double phi = 1.0;
  // Mallows mixture of the identity reference and its reverse.
  bool two_refs = true;

  static ProbabilityModel ic() { return {Kind::urn, 0, 1.0, true}; }
  static ProbabilityModel iac() { return {Kind::urn, 1, 1.0, true}; }
  static ProbabilityModel urn(unsigned alpha) { return {Kind::urn, alpha, 1.0, true}; }
  static ProbabilityModel mallows(double phi, bool two_refs = true) {
    return {Kind::mallows, 0, phi, two_refs};
  }

  // Presets IC, IAC, URN (alpha 10) and MALLOWS (phi 0.8, two references);
  // other parameters as URN-<alpha>, MALLOWS-<phi> or MALLOWS1-<phi> (one
  // reference).
  std::string name() const;
  void validate() const;

  bool operator==(const ProbabilityModel&) const = default;
};

// Throws UnknownName for anything but the names produced by name().
ProbabilityModel parse_model(std::string_view name);

// How the coalition ranking of the profile-coalition paradigm is drawn.
enum class CoalitionDraw {
  // One more draw of the profile's generative process (urn: from the urn as
  // left after drawing the profile).
  continue_process,
  // A fresh draw from the model's initial single-ballot distribution.
  fresh,
};

Ranking sample_ranking_uniform(int n, RngStream& rng);
Ranking sample_ranking_mallows(const Ranking& reference, double phi, RngStream& rng);

Profile sample_profile(const ProbabilityModel& model, int n_candidates, int n_voters,
                       RngStream& rng);

// One ranking as the next ballot after `electorate` under `policy`.
Ranking sample_coalition_ranking(const ProbabilityModel& model, const Profile& electorate,
                                 CoalitionDraw policy, RngStream& rng);

// `size` voters all casting `ranking`, as a fresh profile.
Profile coalition_profile(const Ranking& ranking, int size);

Profile sample_coalition(const ProbabilityModel& model, const Profile& electorate, int size,
                         CoalitionDraw policy, RngStream& rng);

// `ranking` with candidate a moved to the top; the others keep their order.
Ranking move_to_top(const Ranking& ranking, Candidate a);

}  // namespace pilab
