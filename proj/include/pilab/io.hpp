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

#include <string>
#include <string_view>
#include <vector>

#include "pilab/core.hpp"
#include "pilab/measures.hpp"

namespace pilab {

// ---------------------------------------------------------------------------
// Profile files
//
//   3                 number of candidates
//   0,a               n lines "<id>,<label>", ids 0-based
//   1,b
//   2,c
//   5,5,3             voters, voters, distinct ballots
//   2: 0,1,2          "<count>: <ranking>"
//   1: 1,2,0
//   2: 2,0,1
//
// Lines starting with '#' and blank lines are ignored.

struct LabeledProfile {
  Profile profile;
  std::vector<std::string> labels;
};

// Throws ParseError carrying the 1-based line number.
LabeledProfile parse_profile(std::string_view text);
LabeledProfile read_profile(const std::string& path);

// Ballots are grouped by first appearance. Empty labels default to a, b, ...
std::string format_profile(const Profile& profile, const std::vector<std::string>& labels = {});
void write_profile(const Profile& profile, const std::string& path,
                   const std::vector<std::string>& labels = {});

std::vector<std::string> default_labels(int n);

// ---------------------------------------------------------------------------
// Results CSV

extern const char* const kResultsHeader;

// Rows are written in key order; floats use %.17g and undefined estimates are
// empty fields.
std::string format_results(std::vector<EstimateRow> rows);
std::vector<EstimateRow> parse_results(std::string_view text);
std::vector<EstimateRow> read_results(const std::string& path);
// Writes through a temporary file in the same directory, then renames.
void write_results(const std::vector<EstimateRow>& rows, const std::string& path);

void write_file_atomic(const std::string& path, std::string_view contents);
std::string read_file(const std::string& path);

// ---------------------------------------------------------------------------
// Run configuration (YAML)
//
//   paradigm: [profile, pair]
//   model: [IC, MALLOWS]
//   method: [coombs, baldwin]
//   comparison: [borda, instant_runoff, split_cycle]
//   candidates: [3, 4, 5]
//   voters: [10, 20]
//   trials: 50000
//   coalition_frac: [0, 0.0025]
//   seed: 1
//   rp_cap: 10000
//   coalition_draw: continue
//   workers: 4
//   exhaustive: false
//
// Plural key spellings (models, methods, ...) are accepted too.

RunConfig parse_config(std::string_view yaml_text);
RunConfig load_config(const std::string& path);

// Sets one key from its command-line form; lists are comma separated.
// Throws InvalidArgument or UnknownName and leaves `config` unchanged.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

CoalitionDraw parse_coalition_draw(std::string_view name);
std::string_view coalition_draw_name(CoalitionDraw draw);

}  // namespace pilab
