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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pilab {

using Candidate = int;

// Candidate sets are bitmasks, which bounds the candidate count.
inline constexpr int kMaxCandidates = 20;

// A set of candidate indices. Winner sets, remaining-candidate sets during
// elimination and reachability rows are all CandidateSets.
class CandidateSet {
 public:
  constexpr CandidateSet() = default;
  constexpr explicit CandidateSet(std::uint32_t bits) : bits_(bits) {}
  CandidateSet(std::initializer_list<Candidate> members);

  static constexpr CandidateSet all(int n) {
    return CandidateSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr CandidateSet single(Candidate c) {
    return CandidateSet(1u << c);
  }

  constexpr bool contains(Candidate c) const { return (bits_ >> c) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  // Lowest member; undefined on an empty set.
  constexpr Candidate first() const { return std::countr_zero(bits_); }

  constexpr void insert(Candidate c) { bits_ |= 1u << c; }
  constexpr void erase(Candidate c) { bits_ &= ~(1u << c); }

  constexpr bool is_subset_of(CandidateSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr CandidateSet operator|(CandidateSet o) const { return CandidateSet(bits_ | o.bits_); }
  constexpr CandidateSet operator&(CandidateSet o) const { return CandidateSet(bits_ & o.bits_); }
  constexpr CandidateSet operator-(CandidateSet o) const { return CandidateSet(bits_ & ~o.bits_); }
  constexpr CandidateSet& operator|=(CandidateSet o) { bits_ |= o.bits_; return *this; }
  constexpr CandidateSet& operator&=(CandidateSet o) { bits_ &= o.bits_; return *this; }
  constexpr CandidateSet& operator-=(CandidateSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const CandidateSet&) const = default;

  // Members in ascending order.
  std::vector<Candidate> members() const;

  // Iteration over members in ascending order.
  class Iterator {
   public:
    constexpr explicit Iterator(std::uint32_t bits) : bits_(bits) {}
    constexpr Candidate operator*() const { return std::countr_zero(bits_); }
    constexpr Iterator& operator++() { bits_ &= bits_ - 1u; return *this; }
    constexpr bool operator!=(const Iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint32_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

// Nonempty subset of the candidates chosen by a voting method.
using WinnerSet = CandidateSet;

// "{a,c}" using the given labels, or candidate indices when labels is empty.
std::string format_set(CandidateSet set, const std::vector<std::string>& labels = {});

}  // namespace pilab
