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

#include "pilab/candidate_set.hpp"

#include "pilab/error.hpp"

namespace pilab {

CandidateSet::CandidateSet(std::initializer_list<Candidate> members) {
  for (Candidate c : members) {
    if (c < 0 || c >= kMaxCandidates) {
      throw InvalidArgument("candidate index out of range: " + std::to_string(c));
    }
    insert(c);
  }
}

std::vector<Candidate> CandidateSet::members() const {
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Candidate c : *this) out.push_back(c);
  return out;
}

std::string format_set(CandidateSet set, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (Candidate c : set) {
    if (!first) out += ',';
    first = false;
    if (static_cast<std::size_t>(c) < labels.size()) {
      out += labels[static_cast<std::size_t>(c)];
    } else {
      out += std::to_string(c);
    }
  }
  out += '}';
  return out;
}

}  // namespace pilab
