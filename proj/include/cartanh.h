/*
 *   Copyright 2026 The cartanh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CARTANH_H
#define CARTANH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CARTANH_API __attribute__((visibility("default")))
#else
#define CARTANH_API
#endif

/* Status codes double as the CLI exit codes. */
typedef enum cartanh_status {
  CARTANH_OK = 0,
  CARTANH_CHECK_FAILED = 1,
  CARTANH_ERR_CONFIG = 2,
  CARTANH_ERR_PARSE = 3,
  CARTANH_ERR_INADMISSIBLE = 4,
  CARTANH_ERR_INTERNAL = 5,
  CARTANH_ERR_ARGUMENT = 6
} cartanh_status;

typedef enum cartanh_op { CARTANH_DELTA = 0, CARTANH_ANTIPODE = 1, CARTANH_COUNIT = 2 } cartanh_op;

typedef enum cartanh_format { CARTANH_FORMAT_TEXT = 0, CARTANH_FORMAT_JSON = 1 } cartanh_format;

/* Integer settings. Unset context parameters keep their defaults for compute
   and leave the suite's own grid in place for verify. */
typedef enum cartanh_param {
  CARTANH_PARAM_N = 0,     /* rank n */
  CARTANH_PARAM_K = 1,     /* twist index k */
  CARTANH_PARAM_M = 2,     /* horizontal partner m */
  CARTANH_PARAM_P = 3,     /* prime p */
  CARTANH_PARAM_Q = 4,     /* t^p = q t */
  CARTANH_PARAM_TRUNC = 5, /* t-truncation N */
  CARTANH_PARAM_JOBS = 6,  /* worker threads, 0 = default */
  CARTANH_PARAM_SEED = 7,
  CARTANH_PARAM_TIMING = 8 /* nonzero: record wall_time_ms */
} cartanh_param;

typedef struct cartanh_session cartanh_session;

typedef struct cartanh_summary {
  size_t total;
  size_t passed;
  size_t failed;
  size_t skipped;
} cartanh_summary;

/* Receives one JSON Lines record (no trailing newline). Records arrive in
   suite order on the calling thread. Return nonzero to stop forwarding. */
typedef int (*cartanh_record_fn)(const char* json_line, void* user);

CARTANH_API const char* cartanh_version(void);

CARTANH_API cartanh_status cartanh_session_new(cartanh_session** out);
CARTANH_API void cartanh_session_free(cartanh_session* s);

/* Message for the last non-OK status on this session; never NULL. */
CARTANH_API const char* cartanh_last_error(const cartanh_session* s);

/* char0-vertical, char0-horizontal, ut-vertical, utq (= utq-vertical),
   ut-horizontal, utq-horizontal, jordanian. */
CARTANH_API cartanh_status cartanh_set_variant(cartanh_session* s, const char* variant);
CARTANH_API cartanh_status cartanh_set_param(cartanh_session* s, cartanh_param param, int64_t value);

/* Delta, S or epsilon of an element, written to *out (free with
   cartanh_string_free). */
CARTANH_API cartanh_status cartanh_compute(cartanh_session* s, cartanh_op op, const char* element,
                                           cartanh_format format, char** out);

/* Runs a suite. Returns CARTANH_OK when nothing failed, CARTANH_CHECK_FAILED
   otherwise. summary may be NULL. */
CARTANH_API cartanh_status cartanh_verify(cartanh_session* s, const char* suite, cartanh_record_fn on_record,
                                          void* user, cartanh_summary* summary);

/* Newline-separated suite names; free with cartanh_string_free. */
CARTANH_API cartanh_status cartanh_suite_names(char** out);

CARTANH_API void cartanh_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* CARTANH_H */
