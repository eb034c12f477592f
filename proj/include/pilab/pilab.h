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

#ifndef PILAB_PILAB_H_
#define PILAB_PILAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PILAB_BUILDING_LIBRARY)
#define PILAB_API __attribute__((visibility("default")))
#else
#define PILAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pilab_status {
  PILAB_OK = 0,
  PILAB_ERR_INVALID_ARGUMENT = 1,
  PILAB_ERR_UNKNOWN_NAME = 2,
  PILAB_ERR_PARSE = 3,
  PILAB_ERR_IO = 4,
  PILAB_ERR_RP_CAP = 5,
  PILAB_ERR_CHECK_FAILED = 6,
  PILAB_ERR_INTERNAL = 7
} pilab_status;

typedef struct pilab_profile pilab_profile;
typedef struct pilab_config pilab_config;

/* Message of the last failed call on this thread; never NULL. */
PILAB_API const char* pilab_last_error(void);
PILAB_API const char* pilab_status_name(pilab_status status);
PILAB_API const char* pilab_version(void);

/* Profiles. Candidates are 0-based; winner sets are bitmasks (bit c set iff
 * candidate c wins). */
PILAB_API pilab_status pilab_profile_read(const char* path, pilab_profile** out);
PILAB_API pilab_status pilab_profile_parse(const char* text, pilab_profile** out);
/* `orders` holds n_voters rankings of n_candidates entries each, best first. */
PILAB_API pilab_status pilab_profile_create(int n_candidates, int n_voters, const int* orders,
                                            pilab_profile** out);
PILAB_API pilab_status pilab_profile_write(const pilab_profile* profile, const char* path);
PILAB_API void pilab_profile_free(pilab_profile* profile);
PILAB_API int pilab_profile_num_candidates(const pilab_profile* profile);
PILAB_API int pilab_profile_num_voters(const pilab_profile* profile);
/* Label of a candidate, or NULL when out of range. */
PILAB_API const char* pilab_profile_label(const pilab_profile* profile, int candidate);

/* Methods, addressed by any accepted name ("coombs_put", "nanson/weak"). */
PILAB_API size_t pilab_method_count(void);
PILAB_API const char* pilab_method_name(size_t index);
PILAB_API const char* pilab_method_display_name(size_t index);
/* Canonical display name ("family/variant") for any accepted name. */
PILAB_API pilab_status pilab_method_resolve(const char* method, const char** display_name);

PILAB_API pilab_status pilab_evaluate(const pilab_profile* profile, const char* method,
                                      uint64_t rp_cap, uint32_t* winners);
/* *voter is -1 when the profile witnesses no violation. */
PILAB_API pilab_status pilab_pi_witness(const pilab_profile* profile, const char* method,
                                        int* voter, int* candidate);
PILAB_API pilab_status pilab_has_potent_voter(const pilab_profile* profile, const char* method,
                                              int* potent);

/* Simulation configuration. */
PILAB_API pilab_status pilab_config_create(pilab_config** out);
/* Reads a YAML file; validation is deferred to pilab_config_validate. */
PILAB_API pilab_status pilab_config_load(const char* path, pilab_config** out);
PILAB_API void pilab_config_free(pilab_config* config);
/* Same keys as the YAML file; list values are comma separated. */
PILAB_API pilab_status pilab_config_set(pilab_config* config, const char* key, const char* value);
PILAB_API pilab_status pilab_config_validate(const pilab_config* config);

typedef void (*pilab_progress_fn)(uint64_t done, uint64_t total, void* user);

typedef struct pilab_run_summary {
  size_t rows;
  uint64_t trials;
  uint64_t skipped;
} pilab_run_summary;

/* Runs the configured grid and writes the results CSV to `out_path`
 * atomically. `progress` and `summary` may be NULL. */
PILAB_API pilab_status pilab_simulate(const pilab_config* config, const char* out_path,
                                      pilab_progress_fn progress, void* user,
                                      pilab_run_summary* summary);

typedef void (*pilab_line_fn)(const char* line, int passed, void* user);

/* Built-in regression suites. Each reports one line per assertion and returns
 * PILAB_ERR_CHECK_FAILED when any fails. */
PILAB_API pilab_status pilab_appendix_check(pilab_line_fn report, void* user, int* failures);
PILAB_API pilab_status pilab_oracle_suite(pilab_line_fn report, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* PILAB_PILAB_H_ */
