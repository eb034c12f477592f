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

#include <charconv>
#include <string>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/io.hpp"

namespace pilab {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto raw = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    ++number;
    const auto t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, t});
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long integer(std::string_view s, std::size_t line, const char* what) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i));
  }
  return out;
}

LabeledProfile parse_profile(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size()) {
      throw ParseError(std::string("unexpected end of file, expected ") + what,
                       lines.empty() ? 1 : lines.back().number + 1);
    }
    return lines[at++];
  };

  const Line& header = next("candidate count");
  const long long n = integer(header.text, header.number, "candidate count");
  if (n < 1 || n > kMaxCandidates) {
    throw ParseError("candidate count must be in [1, " + std::to_string(kMaxCandidates) + "]",
                     header.number);
  }

  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  for (long long k = 0; k < n; ++k) {
    const Line& l = next("candidate line");
    const auto comma = l.text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected '<id>,<label>'", l.number);
    const long long id = integer(trim(l.text.substr(0, comma)), l.number, "candidate id");
    if (id < 0 || id >= n) throw ParseError("candidate id out of range", l.number);
    if (seen[id]) throw ParseError("duplicate candidate id " + std::to_string(id), l.number);
    seen[id] = true;
    labels[id] = std::string(trim(l.text.substr(comma + 1)));
  }

  const Line& counts = next("voter counts");
  const auto fields = split(counts.text, ',');
  if (fields.size() != 3) {
    throw ParseError("expected '<voters>,<voters>,<distinct ballots>'", counts.number);
  }
  const long long voters = integer(fields[0], counts.number, "voter count");
  const long long voters2 = integer(fields[1], counts.number, "voter count");
  const long long unique = integer(fields[2], counts.number, "ballot count");
  if (voters != voters2) throw ParseError("voter counts disagree", counts.number);
  if (voters < 1) throw ParseError("profile has no voters", counts.number);
  if (unique < 1 || unique > voters) throw ParseError("invalid distinct ballot count", counts.number);

  std::vector<Ranking> ballots;
  long long total = 0;
  for (long long u = 0; u < unique; ++u) {
    const Line& l = next("ballot line");
    const auto colon = l.text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<count>: <ranking>'", l.number);
    const long long count = integer(trim(l.text.substr(0, colon)), l.number, "ballot count");
    if (count < 1) throw ParseError("ballot count must be positive", l.number);
    std::vector<Candidate> order;
    for (auto f : split(l.text.substr(colon + 1), ',')) {
      order.push_back(static_cast<Candidate>(integer(f, l.number, "candidate id")));
    }
    if (static_cast<long long>(order.size()) != n) {
      throw ParseError("ballot must rank all " + std::to_string(n) + " candidates", l.number);
    }
    std::vector<bool> used(n, false);
    for (Candidate c : order) {
      if (c < 0 || c >= n || used[c]) throw ParseError("ballot is not a permutation", l.number);
      used[c] = true;
    }
    total += count;
    if (total > voters) throw ParseError("ballot counts exceed the voter count", l.number);
    const Ranking r(std::move(order));
    for (long long k = 0; k < count; ++k) ballots.push_back(r);
  }
  if (total != voters) {
    throw ParseError("ballot counts sum to " + std::to_string(total) + ", expected " +
                         std::to_string(voters),
                     lines[at - 1].number);
  }
  if (at != lines.size()) throw ParseError("unexpected trailing content", lines[at].number);
  return {Profile(static_cast<int>(n), ballots), std::move(labels)};
}

LabeledProfile read_profile(const std::string& path) {
  try {
    return parse_profile(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

std::string format_profile(const Profile& profile, const std::vector<std::string>& labels) {
  const int n = profile.num_candidates();
  const auto names = labels.empty() ? default_labels(n) : labels;
  if (static_cast<int>(names.size()) != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " labels");
  }
  std::vector<int> firsts;
  std::vector<int> counts;
  for (int i = 0; i < profile.num_voters(); ++i) {
    const BallotView b = profile.ballot(i);
    std::size_t g = 0;
    while (g < firsts.size() && !profile.ballot(firsts[g]).same_order(b)) ++g;
    if (g == firsts.size()) {
      firsts.push_back(i);
      counts.push_back(0);
    }
    ++counts[g];
  }
  std::string out = std::to_string(n) + "\n";
  for (int c = 0; c < n; ++c) out += std::to_string(c) + "," + names[c] + "\n";
  const std::string m = std::to_string(profile.num_voters());
  out += m + "," + m + "," + std::to_string(firsts.size()) + "\n";
  for (std::size_t g = 0; g < firsts.size(); ++g) {
    out += std::to_string(counts[g]) + ": ";
    const BallotView b = profile.ballot(firsts[g]);
    for (int k = 0; k < n; ++k) {
      if (k) out += ',';
      out += std::to_string(b.at(k));
    }
    out += '\n';
  }
  return out;
}

void write_profile(const Profile& profile, const std::string& path,
                   const std::vector<std::string>& labels) {
  write_file_atomic(path, format_profile(profile, labels));
}

}  // namespace pilab
