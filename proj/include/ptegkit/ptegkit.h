// Copyright 2026 The ptegkit Authors
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

#ifndef PTEGKIT_PTEGKIT_H
#define PTEGKIT_PTEGKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(PTEGKIT_BUILDING_LIBRARY)
#define PTEGKIT_API __attribute__((visibility("default")))
#else
#define PTEGKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ptegkit_net ptegkit_net;

typedef enum ptegkit_status {
  PTEGKIT_OK = 0,
  PTEGKIT_ERR_INVALID_ARGUMENT = 1,
  PTEGKIT_ERR_DIMENSION_MISMATCH = 2,
  PTEGKIT_ERR_FLAVOR_MISMATCH = 3,
  PTEGKIT_ERR_NOT_IN_GAMMA = 4,
  PTEGKIT_ERR_SCHEMA = 5,
  PTEGKIT_ERR_MARKING_NOT_BINARY = 6,
  PTEGKIT_ERR_EMPTY_NET = 7,
  PTEGKIT_ERR_INTERVAL_INVERTED = 8,
  PTEGKIT_ERR_IS_WEAKLY_CONSISTENT = 9,
  PTEGKIT_ERR_HORIZON_INFEASIBLE = 10,
  PTEGKIT_ERR_OVERFLOW = 11,
  PTEGKIT_ERR_INTERNAL = 12
} ptegkit_status;

/* Strings returned through char** out-parameters are owned by the caller
 * and must be released with ptegkit_string_free. On failure the
 * out-parameters are left untouched and ptegkit_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread). */

PTEGKIT_API ptegkit_status ptegkit_net_from_json(const char* json, size_t len, ptegkit_net** out);
PTEGKIT_API void ptegkit_net_free(ptegkit_net* net);
PTEGKIT_API size_t ptegkit_net_transition_count(const ptegkit_net* net);

/* {"weakly_consistent", "certificate", "horizon_bound"} */
PTEGKIT_API ptegkit_status ptegkit_check_wc(const ptegkit_net* net, int* weakly_consistent, char** report_json);

/* bound < 0: search up to the certified horizon bound (fails with
 * PTEGKIT_ERR_IS_WEAKLY_CONSISTENT on a weakly consistent net).
 * bound >= 0: search [0, bound] without verification. */
PTEGKIT_API ptegkit_status ptegkit_first_death(const ptegkit_net* net, int64_t bound, char** report_json);

/* seed_json: NULL for the zero vector, or a JSON array with n(k+1) numbers
 * (flat, or nested per event). Output: {"daters": [[...], ...]}. */
PTEGKIT_API ptegkit_status ptegkit_synthesize(const ptegkit_net* net, uint64_t k, const char* seed_json,
                                              char** trajectory_json);

/* {"consistent", "violation"} */
PTEGKIT_API ptegkit_status ptegkit_validate(const ptegkit_net* net, const char* trajectory_json, int* consistent,
                                            char** report_json);

/* A0, A1, B0, B1, P, I, C and the transition names. */
PTEGKIT_API ptegkit_status ptegkit_matrices(const ptegkit_net* net, char** json);

PTEGKIT_API void ptegkit_string_free(char* s);
PTEGKIT_API const char* ptegkit_last_error(void);
PTEGKIT_API const char* ptegkit_status_name(ptegkit_status status);
/* 0 restores automatic selection (PTEG_THREADS, then hardware). */
PTEGKIT_API void ptegkit_set_threads(unsigned threads);

#ifdef __cplusplus
}
#endif

#endif /* PTEGKIT_PTEGKIT_H */
