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

#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pilab/error.hpp"
#include "pilab/io.hpp"

namespace pilab {

const char* const kResultsHeader =
    "paradigm,measure,model,method,variant,comparison,candidates,voters,coalition_frac,"
    "coalition_size_even,coalition_size_odd,trials,skipped,cond_hits,num_event,num_base,"
    "den_event,den_base,estimate,stderr,seed";

namespace {

constexpr std::size_t kColumns = 21;

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string optional_real(const std::optional<double>& v) { return v ? real(*v) : std::string(); }

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char* column) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("bad value '") + std::string(s) + "' in column " + column, line);
  }
  return v;
}

std::optional<double> parse_optional_real(std::string_view s, std::size_t line,
                                          const char* column) {
  if (s.empty()) return std::nullopt;
  return parse_number<double>(s, line, column);
}

}  // namespace

std::string format_results(std::vector<EstimateRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), row_key_less);
  std::string out = kResultsHeader;
  out += '\n';
  for (const auto& r : rows) {
    const TrialTally& t = r.tally;
    std::ostringstream line;
    line << paradigm_name(r.paradigm) << ',' << measure_name(r.measure) << ',' << r.model << ','
         << r.method << ',' << r.variant << ',' << r.comparison << ',' << r.candidates << ','
         << r.voters << ',' << real(r.coalition_frac) << ',' << r.coalition_size_even << ','
         << r.coalition_size_odd << ',' << t.trials << ',' << t.skipped << ',' << t.cond_hits
         << ',' << t.num_event << ',' << t.num_base << ',' << t.den_event << ',' << t.den_base
         << ',' << optional_real(r.estimate) << ',' << optional_real(r.stderr_estimate) << ','
         << r.seed << '\n';
    out += line.str();
  }
  return out;
}

std::vector<EstimateRow> parse_results(std::string_view text) {
  std::vector<EstimateRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) pos = text.size();
    std::string_view line = text.substr(start, pos - start);
    start = pos + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kResultsHeader) throw ParseError("unexpected results header", line_no);
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t s = 0;
    for (;;) {
      const auto c = line.find(',', s);
      f.push_back(line.substr(s, c == std::string_view::npos ? c : c - s));
      if (c == std::string_view::npos) break;
      s = c + 1;
    }
    if (f.size() != kColumns) {
      throw ParseError("expected " + std::to_string(kColumns) + " columns, got " +
                           std::to_string(f.size()),
                       line_no);
    }
    EstimateRow r;
    try {
      r.paradigm = parse_paradigm(f[0]);
      r.measure = parse_measure(f[1]);
    } catch (const UnknownName& e) {
      throw ParseError(e.what(), line_no);
    }
    r.model = f[2];
    r.method = f[3];
    r.variant = f[4];
    r.comparison = f[5];
    r.candidates = parse_number<int>(f[6], line_no, "candidates");
    r.voters = parse_number<int>(f[7], line_no, "voters");
    r.coalition_frac = parse_number<double>(f[8], line_no, "coalition_frac");
    r.coalition_size_even = parse_number<int>(f[9], line_no, "coalition_size_even");
    r.coalition_size_odd = parse_number<int>(f[10], line_no, "coalition_size_odd");
    r.tally.trials = parse_number<std::uint64_t>(f[11], line_no, "trials");
    r.tally.skipped = parse_number<std::uint64_t>(f[12], line_no, "skipped");
    r.tally.cond_hits = parse_number<std::uint64_t>(f[13], line_no, "cond_hits");
    r.tally.num_event = parse_number<std::uint64_t>(f[14], line_no, "num_event");
    r.tally.num_base = parse_number<std::uint64_t>(f[15], line_no, "num_base");
    r.tally.den_event = parse_number<std::uint64_t>(f[16], line_no, "den_event");
    r.tally.den_base = parse_number<std::uint64_t>(f[17], line_no, "den_base");
    r.estimate = parse_optional_real(f[18], line_no, "estimate");
    r.stderr_estimate = parse_optional_real(f[19], line_no, "stderr");
    r.seed = parse_number<std::uint64_t>(f[20], line_no, "seed");
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError("missing results header", 1);
  return rows;
}

std::vector<EstimateRow> read_results(const std::string& path) {
  return parse_results(read_file(path));
}

void write_results(const std::vector<EstimateRow>& rows, const std::string& path) {
  write_file_atomic(path, format_results(rows));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create '" + tmp + "': " + std::strerror(errno));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("cannot write '" + tmp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
  }
}

}  // namespace pilab
