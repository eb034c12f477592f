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

// pi-lab: command-line front end. Uses only the C API of libpilab.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pilab/pilab.h"

namespace {

int report_error(pilab_status status) {
  std::cerr << "pi-lab: " << pilab_status_name(status) << ": " << pilab_last_error() << "\n";
  return status == PILAB_ERR_CHECK_FAILED ? 1 : 2;
}

struct ConfigDeleter {
  void operator()(pilab_config* c) const { pilab_config_free(c); }
};
struct ProfileDeleter {
  void operator()(pilab_profile* p) const { pilab_profile_free(p); }
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

std::string format_winners(const pilab_profile* profile, uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int c = 0; c < pilab_profile_num_candidates(profile); ++c) {
    if (!(mask & (1u << c))) continue;
    if (!first) out += ',';
    out += pilab_profile_label(profile, c);
    first = false;
  }
  return out + "}";
}

struct SimulateOptions {
  std::string config_path;
  std::string out_path;
  bool quiet = false;
  // Inline overrides, applied in this order after the config file.
  std::vector<std::pair<std::string, std::vector<std::string>>> lists{
      {"paradigm", {}}, {"model", {}}, {"method", {}}, {"comparison", {}},
      {"candidates", {}}, {"voters", {}}, {"coalition_frac", {}}};
  std::optional<std::string> trials, seed, workers, rp_cap, coalition_draw;
  bool exhaustive = false;
};

void progress_to_stderr(uint64_t done, uint64_t total, void* user) {
  auto* last = static_cast<int*>(user);
  const int pct = total ? static_cast<int>(done * 100 / total) : 100;
  if (pct / 10 != *last / 10 || done == total) {
    *last = pct;
    std::fprintf(stderr, "progress: %d%% (%llu/%llu trials)\n", pct,
                 static_cast<unsigned long long>(done), static_cast<unsigned long long>(total));
  }
}

int run_simulate(const SimulateOptions& o) {
  pilab_config* raw = nullptr;
  pilab_status st = o.config_path.empty() ? pilab_config_create(&raw)
                                          : pilab_config_load(o.config_path.c_str(), &raw);
  if (st != PILAB_OK) return report_error(st);
  std::unique_ptr<pilab_config, ConfigDeleter> config(raw);

  auto set = [&](const std::string& key, const std::string& value) {
    const pilab_status s = pilab_config_set(config.get(), key.c_str(), value.c_str());
    if (s != PILAB_OK) throw s;
  };
  try {
    for (const auto& [key, values] : o.lists) {
      if (!values.empty()) set(key, join(values));
    }
    if (o.trials) set("trials", *o.trials);
    if (o.seed) set("seed", *o.seed);
    if (o.rp_cap) set("rp_cap", *o.rp_cap);
    if (o.coalition_draw) set("coalition_draw", *o.coalition_draw);
    if (o.exhaustive) set("exhaustive", "true");
    if (o.workers) {
      set("workers", *o.workers);
    } else if (const char* env = std::getenv("PI_LAB_WORKERS"); env && *env) {
      set("workers", env);
    }
  } catch (pilab_status s) {
    return report_error(s);
  }
  if ((st = pilab_config_validate(config.get())) != PILAB_OK) return report_error(st);

  int last = -1;
  pilab_run_summary summary{};
  st = pilab_simulate(config.get(), o.out_path.c_str(), o.quiet ? nullptr : progress_to_stderr,
                      &last, &summary);
  if (st != PILAB_OK) return report_error(st);
  std::cout << "wrote " << summary.rows << " rows to " << o.out_path << " (" << summary.trials
            << " row-trials, " << summary.skipped << " skipped)\n";
  return 0;
}

int run_winners(const std::string& path, const std::vector<std::string>& methods,
                unsigned long long rp_cap) {
  pilab_profile* raw = nullptr;
  pilab_status st = pilab_profile_read(path.c_str(), &raw);
  if (st != PILAB_OK) return report_error(st);
  std::unique_ptr<pilab_profile, ProfileDeleter> profile(raw);

  std::vector<std::string> names = methods;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names.clear();
    for (size_t i = 0; i < pilab_method_count(); ++i) names.emplace_back(pilab_method_name(i));
  }
  std::ostringstream out;
  for (const auto& name : names) {
    const char* display = nullptr;
    if ((st = pilab_method_resolve(name.c_str(), &display)) != PILAB_OK) return report_error(st);
    uint32_t mask = 0;
    st = pilab_evaluate(profile.get(), name.c_str(), rp_cap, &mask);
    if (st == PILAB_ERR_RP_CAP) {
      out << display << ": skipped (" << pilab_last_error() << ")\n";
      continue;
    }
    if (st != PILAB_OK) return report_error(st);
    out << display << ": " << format_winners(profile.get(), mask) << "\n";
  }
  std::cout << out.str();
  return 0;
}

void print_line(const char* line, int passed, void*) {
  std::cout << (passed ? "PASS " : "FAIL ") << line << "\n";
}

int run_suite(pilab_status (*suite)(pilab_line_fn, void*, int*), const char* what) {
  int failures = 0;
  const pilab_status st = suite(print_line, nullptr, &failures);
  if (st == PILAB_OK) {
    std::cout << what << ": all checks passed\n";
    return 0;
  }
  if (st == PILAB_ERR_CHECK_FAILED) {
    std::cout << what << ": " << failures << " failure(s)\n";
    return 1;
  }
  return report_error(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive-involvement violation lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pilab_version()));

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Run a simulation grid and write a results CSV");
  simulate->add_option("--config", sim.config_path, "YAML configuration file")
      ->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out_path, "Output CSV path")->required();
  const char* list_help[] = {"profile and/or pair",
                             "IC, IAC, URN, MALLOWS, URN-<alpha>, MALLOWS-<phi>",
                             "Voting methods",
                             "Comparison methods for conditioning (or none)",
                             "Candidate counts",
                             "Even base voter counts m (trials split between m and m+1)",
                             "Coalition sizes as fractions of the electorate"};
  for (std::size_t i = 0; i < sim.lists.size(); ++i) {
    auto& [key, values] = sim.lists[i];
    std::string flag = "--" + key;
    for (char& ch : flag) {
      if (ch == '_') ch = '-';
    }
    simulate->add_option(flag, values, list_help[i])->delimiter(',');
  }
  simulate->add_option("--trials", sim.trials, "Trials per grid point (default 50000)");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--workers", sim.workers,
                       "Worker threads (default: PI_LAB_WORKERS, else all cores)");
  simulate->add_option("--rp-cap", sim.rp_cap, "Ranked Pairs tie-order cap (default 10000)");
  simulate->add_option("--coalition-draw", sim.coalition_draw, "continue or fresh");
  simulate->add_flag("--exhaustive", sim.exhaustive,
                     "Enumerate all profiles instead of sampling (IC, profile paradigm)");
  simulate->add_flag("--quiet", sim.quiet, "No progress output");

  std::string profile_path;
  std::vector<std::string> methods;
  unsigned long long rp_cap = 0;
  auto* winners = app.add_subcommand("winners", "Print winner sets for a profile file");
  winners->add_option("--profile", profile_path, "Profile file")->required();
  winners->add_option("--methods", methods, "Methods (default: all)")->delimiter(',');
  winners->add_option("--rp-cap", rp_cap, "Ranked Pairs tie-order cap (default 10000)");

  auto* appendix = app.add_subcommand("appendix-check", "Check the built-in violation examples");
  auto* oracle = app.add_subcommand("oracle", "Run the exhaustive small-space validation suite");
  auto* list = app.add_subcommand("methods", "List method names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*simulate) return run_simulate(sim);
  if (*winners) return run_winners(profile_path, methods, rp_cap);
  if (*appendix) return run_suite(pilab_appendix_check, "appendix-check");
  if (*oracle) return run_suite(pilab_oracle_suite, "oracle");
  if (*list) {
    for (size_t i = 0; i < pilab_method_count(); ++i) {
      std::cout << pilab_method_name(i) << "\t" << pilab_method_display_name(i) << "\n";
    }
    return 0;
  }
  return 2;
}
