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

#include "pilab/pilab.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "pilab/appendix.hpp"
#include "pilab/error.hpp"
#include "pilab/io.hpp"
#include "pilab/measures.hpp"
#include "pilab/methods.hpp"
#include "pilab/oracle.hpp"

struct pilab_profile {
  pilab::Profile profile;
  std::vector<std::string> labels;
};

struct pilab_config {
  pilab::RunConfig config;
};

namespace {

thread_local std::string last_error;

pilab_status fail(pilab_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
pilab_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const pilab::RankedPairsCapExceeded& e) {
    return fail(PILAB_ERR_RP_CAP, e.what());
  } catch (const pilab::UnknownName& e) {
    return fail(PILAB_ERR_UNKNOWN_NAME, e.what());
  } catch (const pilab::ParseError& e) {
    return fail(PILAB_ERR_PARSE, e.what());
  } catch (const pilab::IoError& e) {
    return fail(PILAB_ERR_IO, e.what());
  } catch (const pilab::InvalidArgument& e) {
    return fail(PILAB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PILAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PILAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PILAB_ERR_INTERNAL, "unknown error");
  }
}

#define PILAB_REQUIRE(cond, what) \
  if (!(cond)) return fail(PILAB_ERR_INVALID_ARGUMENT, what)

pilab_profile* wrap(pilab::LabeledProfile p) {
  return new pilab_profile{std::move(p.profile), std::move(p.labels)};
}

}  // namespace

extern "C" {

const char* pilab_last_error(void) { return last_error.c_str(); }

const char* pilab_status_name(pilab_status status) {
  switch (status) {
    case PILAB_OK: return "ok";
    case PILAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PILAB_ERR_UNKNOWN_NAME: return "unknown name";
    case PILAB_ERR_PARSE: return "parse error";
    case PILAB_ERR_IO: return "i/o error";
    case PILAB_ERR_RP_CAP: return "ranked pairs cap exceeded";
    case PILAB_ERR_CHECK_FAILED: return "check failed";
    case PILAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pilab_version(void) { return "1.0.0"; }

pilab_status pilab_profile_read(const char* path, pilab_profile** out) {
  PILAB_REQUIRE(path && out, "null argument");
  return guarded([&] {
    *out = wrap(pilab::read_profile(path));
    return PILAB_OK;
  });
}

pilab_status pilab_profile_parse(const char* text, pilab_profile** out) {
  PILAB_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = wrap(pilab::parse_profile(text));
    return PILAB_OK;
  });
}

pilab_status pilab_profile_create(int n_candidates, int n_voters, const int* orders,
                                  pilab_profile** out) {
  PILAB_REQUIRE(orders && out, "null argument");
  PILAB_REQUIRE(n_candidates >= 1 && n_candidates <= pilab::kMaxCandidates,
                "candidate count out of range");
  PILAB_REQUIRE(n_voters >= 1, "profile needs at least one voter");
  return guarded([&] {
    std::vector<pilab::Ranking> ballots;
    for (int v = 0; v < n_voters; ++v) {
      const int* row = orders + static_cast<std::ptrdiff_t>(v) * n_candidates;
      ballots.emplace_back(std::vector<pilab::Candidate>(row, row + n_candidates));
    }
    *out = new pilab_profile{pilab::Profile(n_candidates, ballots),
                             pilab::default_labels(n_candidates)};
    return PILAB_OK;
  });
}

pilab_status pilab_profile_write(const pilab_profile* profile, const char* path) {
  PILAB_REQUIRE(profile && path, "null argument");
  return guarded([&] {
    pilab::write_profile(profile->profile, path, profile->labels);
    return PILAB_OK;
  });
}

void pilab_profile_free(pilab_profile* profile) { delete profile; }

int pilab_profile_num_candidates(const pilab_profile* profile) {
  return profile ? profile->profile.num_candidates() : 0;
}

int pilab_profile_num_voters(const pilab_profile* profile) {
  return profile ? profile->profile.num_voters() : 0;
}

const char* pilab_profile_label(const pilab_profile* profile, int candidate) {
  if (!profile || candidate < 0 || candidate >= profile->profile.num_candidates()) return nullptr;
  return profile->labels[candidate].c_str();
}

size_t pilab_method_count(void) { return pilab::all_methods().size(); }

const char* pilab_method_name(size_t index) {
  const auto all = pilab::all_methods();
  return index < all.size() ? all[index].name().data() : nullptr;
}

const char* pilab_method_display_name(size_t index) {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& m : pilab::all_methods()) v.push_back(m.display_name());
    return v;
  }();
  return index < names.size() ? names[index].c_str() : nullptr;
}

pilab_status pilab_method_resolve(const char* method, const char** display_name) {
  PILAB_REQUIRE(method && display_name, "null argument");
  return guarded([&] {
    const pilab::MethodId id = pilab::parse_method(method);
    const auto all = pilab::all_methods();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == id) *display_name = pilab_method_display_name(i);
    }
    return PILAB_OK;
  });
}

pilab_status pilab_evaluate(const pilab_profile* profile, const char* method, uint64_t rp_cap,
                            uint32_t* winners) {
  PILAB_REQUIRE(profile && method && winners, "null argument");
  return guarded([&] {
    pilab::EvalOptions opts;
    if (rp_cap != 0) opts.rp_cap = rp_cap;
    *winners = pilab::evaluate(pilab::parse_method(method), profile->profile, opts).bits();
    return PILAB_OK;
  });
}

pilab_status pilab_pi_witness(const pilab_profile* profile, const char* method, int* voter,
                              int* candidate) {
  PILAB_REQUIRE(profile && method && voter && candidate, "null argument");
  return guarded([&] {
    const auto w = pilab::pi_violation_witness(pilab::parse_method(method), profile->profile);
    *voter = w ? w->voter : -1;
    *candidate = w ? w->candidate : -1;
    return PILAB_OK;
  });
}

pilab_status pilab_has_potent_voter(const pilab_profile* profile, const char* method,
                                    int* potent) {
  PILAB_REQUIRE(profile && method && potent, "null argument");
  return guarded([&] {
    *potent = pilab::has_potent_voter(pilab::parse_method(method), profile->profile) ? 1 : 0;
    return PILAB_OK;
  });
}

pilab_status pilab_config_create(pilab_config** out) {
  PILAB_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new pilab_config{};
    return PILAB_OK;
  });
}

pilab_status pilab_config_load(const char* path, pilab_config** out) {
  PILAB_REQUIRE(path && out, "null argument");
  return guarded([&] {
    auto config = pilab::parse_config(pilab::read_file(path));
    *out = new pilab_config{std::move(config)};
    return PILAB_OK;
  });
}

void pilab_config_free(pilab_config* config) { delete config; }

pilab_status pilab_config_set(pilab_config* config, const char* key, const char* value) {
  PILAB_REQUIRE(config && key && value, "null argument");
  return guarded([&] {
    pilab::apply_setting(config->config, key, value);
    return PILAB_OK;
  });
}

pilab_status pilab_config_validate(const pilab_config* config) {
  PILAB_REQUIRE(config, "null argument");
  return guarded([&] {
    config->config.validate();
    return PILAB_OK;
  });
}

pilab_status pilab_simulate(const pilab_config* config, const char* out_path,
                            pilab_progress_fn progress, void* user, pilab_run_summary* summary) {
  PILAB_REQUIRE(config && out_path, "null argument");
  return guarded([&] {
    pilab::ProgressFn fn;
    if (progress) fn = [&](std::uint64_t done, std::uint64_t total) { progress(done, total, user); };
    const auto rows = pilab::run_simulation(config->config, fn);
    pilab::write_results(rows, out_path);
    if (summary) {
      *summary = {rows.size(), 0, 0};
      for (const auto& r : rows) {
        summary->trials += r.tally.trials;
        summary->skipped += r.tally.skipped;
      }
    }
    return PILAB_OK;
  });
}

pilab_status pilab_appendix_check(pilab_line_fn report, void* user, int* failures) {
  return guarded([&] {
    int failed = 0;
    for (const auto& a : pilab::appendix::run_check()) {
      failed += !a.passed;
      if (report) {
        std::string line = a.name + ": expected " + a.expected + ", got " + a.got;
        report(line.c_str(), a.passed ? 1 : 0, user);
      }
    }
    if (failures) *failures = failed;
    return failed ? fail(PILAB_ERR_CHECK_FAILED,
                         std::to_string(failed) + " appendix assertion(s) failed")
                  : PILAB_OK;
  });
}

pilab_status pilab_oracle_suite(pilab_line_fn report, void* user, int* failures) {
  return guarded([&] {
    int failed = 0;
    pilab::oracle::run_suite([&](const pilab::oracle::CheckResult& r) {
      failed += !r.passed();
      if (report) {
        std::string line = r.name + ": " + std::to_string(r.cases) + " cases, " +
                           std::to_string(r.mismatches) + " mismatches";
        if (!r.first_mismatch.empty()) line += " (first: " + r.first_mismatch + ")";
        report(line.c_str(), r.passed() ? 1 : 0, user);
      }
    });
    if (failures) *failures = failed;
    return failed ? fail(PILAB_ERR_CHECK_FAILED, std::to_string(failed) + " oracle check(s) failed")
                  : PILAB_OK;
  });
}

}  // extern "C"
