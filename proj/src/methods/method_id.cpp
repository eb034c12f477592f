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

#include <array>
#include <string>

#include "pilab/error.hpp"
#include "pilab/methods.hpp"

namespace pilab {

namespace {

struct Entry {
  MethodId id;
  std::string_view name;
};

// The first entry of each family is its default variant.
constexpr std::array<Entry, 28> kRegistry{{
    {{Family::scoring, Variant::plurality}, "plurality"},
    {{Family::scoring, Variant::borda}, "borda"},
    {{Family::instant_runoff, Variant::remove_all}, "instant_runoff"},
    {{Family::instant_runoff, Variant::put}, "instant_runoff_put"},
    {{Family::coombs, Variant::remove_all}, "coombs"},
    {{Family::coombs, Variant::put}, "coombs_put"},
    {{Family::baldwin, Variant::remove_all}, "baldwin"},
    {{Family::baldwin, Variant::put}, "baldwin_put"},
    {{Family::nanson, Variant::strict}, "strict_nanson"},
    {{Family::nanson, Variant::weak}, "weak_nanson"},
    {{Family::bucklin, Variant::full}, "bucklin"},
    {{Family::bucklin, Variant::simplified}, "simplified_bucklin"},
    {{Family::copeland, Variant::copeland}, "copeland"},
    {{Family::copeland, Variant::llull}, "llull"},
    {{Family::top_cycle, Variant::getcha}, "top_cycle"},
    {{Family::top_cycle, Variant::gocha}, "gocha"},
    {{Family::uncovered_set, Variant::gillies}, "uncovered_set"},
    {{Family::uncovered_set, Variant::fishburn}, "uc_fishburn"},
    {{Family::uncovered_set, Variant::bordes}, "uc_bordes"},
    {{Family::uncovered_set, Variant::mckelvey}, "uc_mckelvey"},
    {{Family::ranked_pairs, Variant::standard}, "ranked_pairs"},
    {{Family::ranked_pairs_zt, Variant::standard}, "ranked_pairs_zt"},
    {{Family::beat_path, Variant::standard}, "beat_path"},
    {{Family::split_cycle, Variant::standard}, "split_cycle"},
    {{Family::minimax, Variant::standard}, "minimax"},
    {{Family::plurality_runoff, Variant::put}, "plurality_runoff"},
    {{Family::plurality_runoff, Variant::naive}, "plurality_runoff_naive"},
    {{Family::scoring, Variant::plurality}, "scoring"},
}};

// The trailing "scoring" row is only an alias for parsing.
constexpr std::size_t kMethodCount = kRegistry.size() - 1;

const std::array<MethodId, kMethodCount>& method_table() {
  static const auto table = [] {
    std::array<MethodId, kMethodCount> t{};
    for (std::size_t i = 0; i < kMethodCount; ++i) t[i] = kRegistry[i].id;
    return t;
  }();
  return table;
}

std::string_view family_string(Family f) {
  switch (f) {
    case Family::scoring: return "scoring";
    case Family::instant_runoff: return "instant_runoff";
    case Family::coombs: return "coombs";
    case Family::baldwin: return "baldwin";
    case Family::nanson: return "nanson";
    case Family::bucklin: return "bucklin";
    case Family::copeland: return "copeland";
    case Family::top_cycle: return "top_cycle";
    case Family::uncovered_set: return "uncovered_set";
    case Family::ranked_pairs: return "ranked_pairs";
    case Family::ranked_pairs_zt: return "ranked_pairs_zt";
    case Family::beat_path: return "beat_path";
    case Family::split_cycle: return "split_cycle";
    case Family::minimax: return "minimax";
    case Family::plurality_runoff: return "plurality_runoff";
  }
  return "?";
}

std::string_view variant_string(Variant v) {
  switch (v) {
    case Variant::standard: return "standard";
    case Variant::plurality: return "plurality";
    case Variant::borda: return "borda";
    case Variant::remove_all: return "remove_all";
    case Variant::put: return "put";
    case Variant::strict: return "strict";
    case Variant::weak: return "weak";
    case Variant::full: return "full";
    case Variant::simplified: return "simplified";
    case Variant::copeland: return "copeland";
    case Variant::llull: return "llull";
    case Variant::getcha: return "getcha";
    case Variant::gocha: return "gocha";
    case Variant::gillies: return "gillies";
    case Variant::fishburn: return "fishburn";
    case Variant::bordes: return "bordes";
    case Variant::mckelvey: return "mckelvey";
    case Variant::naive: return "naive";
  }
  return "?";
}

bool has_variants(Family f) {
  int count = 0;
  for (const MethodId& m : method_table()) count += (m.family == f);
  return count > 1;
}

}  // namespace

std::string_view MethodId::name() const {
  for (std::size_t i = 0; i < kMethodCount; ++i) {
    if (kRegistry[i].id == *this) return kRegistry[i].name;
  }
  return "?";
}

std::string_view MethodId::family_name() const { return family_string(family); }
std::string_view MethodId::variant_name() const { return variant_string(variant); }

std::string MethodId::display_name() const {
  std::string out(family_name());
  if (has_variants(family)) {
    out += '/';
    out += variant_name();
  }
  return out;
}

bool MethodId::margin_based() const {
  switch (family) {
    case Family::copeland:
    case Family::top_cycle:
    case Family::uncovered_set:
    case Family::ranked_pairs:
    case Family::beat_path:
    case Family::split_cycle:
    case Family::minimax:
      return true;
    default:
      return false;
  }
}

std::span<const MethodId> all_methods() { return method_table(); }

MethodId parse_method(std::string_view name) {
  for (const Entry& e : kRegistry) {
    if (e.name == name) return e.id;
  }
  for (const MethodId& m : method_table()) {
    if (m.display_name() == name || m.family_name() == name) return m;
    std::string full(m.family_name());
    full += '/';
    full += m.variant_name();
    if (full == name) return m;
  }
  std::string valid;
  for (const MethodId& m : method_table()) {
    if (!valid.empty()) valid += ", ";
    valid += m.name();
  }
  throw UnknownName("unknown method '" + std::string(name) + "'; valid methods: " + valid);
}

}  // namespace pilab
