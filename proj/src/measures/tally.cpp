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

#include <cmath>
#include <string>
#include <tuple>

#include "pilab/error.hpp"
#include "pilab/measures.hpp"

namespace pilab {

std::string_view paradigm_name(Paradigm p) {
  return p == Paradigm::profile ? "profile" : "pair";
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::raw: return "raw";
    case Measure::conditional: return "conditional";
    case Measure::ratio: return "ratio";
    case Measure::conditional_ratio: return "conditional_ratio";
  }
  return "";
}

Paradigm parse_paradigm(std::string_view name) {
  if (name == "profile") return Paradigm::profile;
  if (name == "pair") return Paradigm::pair;
  throw UnknownName("unknown paradigm '" + std::string(name) + "' (expected profile or pair)");
}

Measure parse_measure(std::string_view name) {
  for (Measure m : {Measure::raw, Measure::conditional, Measure::ratio,
                    Measure::conditional_ratio}) {
    if (measure_name(m) == name) return m;
  }
  throw UnknownName("unknown measure '" + std::string(name) + "'");
}

TrialTally& TrialTally::operator+=(const TrialTally& o) {
  trials += o.trials;
  skipped += o.skipped;
  cond_hits += o.cond_hits;
  num_event += o.num_event;
  num_base += o.num_base;
  den_event += o.den_event;
  den_base += o.den_base;
  return *this;
}

TrialTally operator+(TrialTally lhs, const TrialTally& rhs) { return lhs += rhs; }

namespace {

bool is_ratio(Measure m) { return m == Measure::ratio || m == Measure::conditional_ratio; }

double proportion(std::uint64_t k, std::uint64_t n) {
  return static_cast<double>(k) / static_cast<double>(n);
}

}  // namespace

void finalize_estimate(EstimateRow& row) {
  row.estimate.reset();
  row.stderr_estimate.reset();
  const TrialTally& t = row.tally;
  if (!is_ratio(row.measure)) {
    if (t.cond_hits == 0) return;
    const double p = proportion(t.num_event, t.cond_hits);
    row.estimate = p;
    row.stderr_estimate = std::sqrt(p * (1.0 - p) / static_cast<double>(t.cond_hits));
    return;
  }
  if (t.num_base == 0 || t.den_base == 0 || t.den_event == 0) return;
  const double p1 = proportion(t.num_event, t.num_base);
  const double p2 = proportion(t.den_event, t.den_base);
  const double r = p1 / p2;
  row.estimate = r;
  if (row.paradigm == Paradigm::profile && t.num_base == t.den_base) {
    // Numerator events are a subset of denominator events on the same trials.
    const double q = proportion(t.num_event, t.den_event);
    row.stderr_estimate = std::sqrt(q * (1.0 - q) / static_cast<double>(t.den_event));
    return;
  }
  const double v1 = p1 * (1.0 - p1) / static_cast<double>(t.num_base);
  const double v2 = p2 * (1.0 - p2) / static_cast<double>(t.den_base);
  row.stderr_estimate = std::sqrt(v1 / (p2 * p2) + p1 * p1 * v2 / (p2 * p2 * p2 * p2));
}

bool row_key_less(const EstimateRow& a, const EstimateRow& b) {
  auto key = [](const EstimateRow& r) {
    return std::make_tuple(paradigm_name(r.paradigm), measure_name(r.measure),
                           std::string_view(r.model), std::string_view(r.method),
                           std::string_view(r.variant), std::string_view(r.comparison),
                           r.candidates, r.voters, r.coalition_frac);
  };
  return key(a) < key(b);
}

int coalition_size(double frac, int voters) {
  if (!(frac >= 0.0)) throw InvalidArgument("coalition fraction must be non-negative");
  const double c = std::round(frac * static_cast<double>(voters));
  return c < 1.0 ? 1 : static_cast<int>(c);
}

void RunConfig::validate() const {
  if (paradigms.empty()) throw InvalidArgument("no paradigm given");
  if (models.empty()) throw InvalidArgument("no model given");
  if (methods.empty()) throw InvalidArgument("no method given");
  if (candidates.empty()) throw InvalidArgument("no candidate count given");
  if (voters.empty()) throw InvalidArgument("no voter count given");
  if (trials == 0) throw InvalidArgument("trials must be positive");
  if (rp_cap == 0) throw InvalidArgument("rp_cap must be positive");
  for (const auto& model : models) model.validate();
  for (int n : candidates) {
    if (n < 2 || n > kMaxCandidates) {
      throw InvalidArgument("candidate count " + std::to_string(n) + " outside [2, " +
                            std::to_string(kMaxCandidates) + "]");
    }
  }
  for (int m : voters) {
    if (m < 2) throw InvalidArgument("voter count must be at least 2");
  }
  bool pair = false;
  for (Paradigm p : paradigms) pair = pair || p == Paradigm::pair;
  if (pair && coalition_fracs.empty()) throw InvalidArgument("no coalition fraction given");
  for (double f : coalition_fracs) {
    if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("coalition fraction outside [0, 1]");
  }
  if (exhaustive) {
    for (const auto& model : models) {
      if (!(model == ProbabilityModel::ic())) {
        throw InvalidArgument("exhaustive mode requires the IC model");
      }
    }
    if (pair) throw InvalidArgument("exhaustive mode supports only the profile paradigm");
  }
}

}  // namespace pilab
