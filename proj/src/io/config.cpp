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

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/io.hpp"

namespace pilab {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = value.find(',', start);
    const auto item = trim(value.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (!item.empty()) out.emplace_back(item);
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
T number(std::string_view key, std::string_view s) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw InvalidArgument(std::string(key) + ": '" + std::string(s) + "' is not a valid number");
  }
  return v;
}

std::uint64_t positive(std::string_view key, std::string_view s) {
  if (!s.empty() && s.front() == '-') {
    throw InvalidArgument(std::string(key) + " must be positive");
  }
  const auto v = number<std::uint64_t>(key, s);
  if (v == 0) throw InvalidArgument(std::string(key) + " must be positive");
  return v;
}

std::string_view single(std::string_view key, const std::vector<std::string>& values) {
  if (values.size() != 1) throw InvalidArgument(std::string(key) + " takes exactly one value");
  return values.front();
}

bool boolean(std::string_view key, std::string_view s) {
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  throw InvalidArgument(std::string(key) + ": expected true or false");
}

std::string canonical_key(std::string_view key) {
  std::string k(key);
  for (char& c : k) {
    if (c == '-') c = '_';
  }
  static const std::pair<const char*, const char*> plurals[] = {
      {"paradigms", "paradigm"},         {"models", "model"},
      {"methods", "method"},             {"comparisons", "comparison"},
      {"coalition_fracs", "coalition_frac"}, {"coalition_fractions", "coalition_frac"},
  };
  for (const auto& [from, to] : plurals) {
    if (k == from) return to;
  }
  return k;
}

void apply_values(RunConfig& c, std::string_view raw_key, const std::vector<std::string>& values) {
  const std::string key = canonical_key(raw_key);
  if (key == "paradigm") {
    c.paradigms.clear();
    for (const auto& v : values) c.paradigms.push_back(parse_paradigm(v));
  } else if (key == "model") {
    c.models.clear();
    for (const auto& v : values) c.models.push_back(parse_model(v));
  } else if (key == "method") {
    c.methods.clear();
    for (const auto& v : values) c.methods.push_back(parse_method(v));
  } else if (key == "comparison") {
    c.comparisons.clear();
    for (const auto& v : values) {
      if (v != "none") c.comparisons.push_back(parse_method(v));
    }
  } else if (key == "candidates" || key == "voters") {
    auto& dst = key == "candidates" ? c.candidates : c.voters;
    dst.clear();
    for (const auto& v : values) dst.push_back(static_cast<int>(positive(key, v)));
  } else if (key == "trials") {
    c.trials = positive(key, single(key, values));
  } else if (key == "coalition_frac") {
    c.coalition_fracs.clear();
    for (const auto& v : values) {
      const double f = number<double>(key, v);
      if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("coalition_frac must lie in [0, 1]");
      c.coalition_fracs.push_back(f);
    }
  } else if (key == "seed") {
    c.seed = number<std::uint64_t>(key, single(key, values));
  } else if (key == "rp_cap") {
    c.rp_cap = positive(key, single(key, values));
  } else if (key == "coalition_draw") {
    c.coalition_draw = parse_coalition_draw(single(key, values));
  } else if (key == "workers") {
    c.workers = static_cast<unsigned>(positive(key, single(key, values)));
  } else if (key == "exhaustive") {
    c.exhaustive = boolean(key, single(key, values));
  } else {
    throw UnknownName("unknown configuration key '" + std::string(raw_key) +
                      "' (valid: paradigm, model, method, comparison, candidates, voters, "
                      "trials, coalition_frac, seed, rp_cap, coalition_draw, workers, "
                      "exhaustive)");
  }
}

std::vector<std::string> node_values(const std::string& key, const YAML::Node& node) {
  std::vector<std::string> out;
  if (node.IsScalar()) {
    out.push_back(node.Scalar());
  } else if (node.IsSequence()) {
    for (const auto& item : node) {
      if (!item.IsScalar()) throw InvalidArgument(key + ": list items must be scalars");
      out.push_back(item.Scalar());
    }
  } else if (!node.IsNull()) {
    throw InvalidArgument(key + ": expected a value or a list");
  }
  return out;
}

}  // namespace

CoalitionDraw parse_coalition_draw(std::string_view name) {
  if (name == "continue") return CoalitionDraw::continue_process;
  if (name == "fresh") return CoalitionDraw::fresh;
  throw UnknownName("unknown coalition_draw '" + std::string(name) +
                    "' (expected continue or fresh)");
}

std::string_view coalition_draw_name(CoalitionDraw draw) {
  return draw == CoalitionDraw::fresh ? "fresh" : "continue";
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  RunConfig updated = config;
  apply_values(updated, key, split_list(value));
  config = std::move(updated);
}

RunConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line + 1));
  }
  RunConfig config;
  if (root.IsNull()) return config;
  if (!root.IsMap()) throw ParseError("configuration must be a mapping", 1);
  for (const auto& entry : root) {
    const std::string key = entry.first.as<std::string>();
    apply_values(config, key, node_values(key, entry.second));
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  RunConfig config = parse_config(read_file(path));
  config.validate();
  return config;
}

}  // namespace pilab
