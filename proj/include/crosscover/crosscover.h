// Copyright 2026 The crosscover Authors
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

/* C interface. Every function returns a cc_status; on failure the message is
 * available from cc_last_error() on the calling thread. Strings returned
 * through char** are owned by the caller and released with cc_string_free. */
#ifndef CROSSCOVER_CROSSCOVER_H
#define CROSSCOVER_CROSSCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define CC_API __attribute__((visibility("default")))
#else
#define CC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT = 1,
  CC_DIMENSION_MISMATCH = 2,
  CC_PRECONDITION = 3,
  CC_PARSE_ERROR = 4,
  CC_REGION_CAP = 5,
  CC_INTERNAL = 6
} cc_status;

typedef enum cc_verify_mode {
  CC_MODE_AUTO = 0,
  CC_MODE_FULL = 1,
  CC_MODE_BOUNDARY = 2
} cc_verify_mode;

typedef struct cc_options {
  unsigned threads;
  cc_verify_mode mode;
  size_t region_cap;
  int pretty;
  int with_regions;
} cc_options;

typedef struct cc_covering cc_covering;

CC_API const char* cc_version(void);
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);
CC_API void cc_options_init(cc_options* options);

CC_API cc_status cc_covering_parse(const char* json, cc_covering** out);
CC_API cc_status cc_covering_construct(int d, int m, cc_covering** out);
CC_API cc_status cc_covering_to_json(const cc_covering* c, int pretty, char** out);
CC_API cc_status cc_covering_verify(const cc_covering* c, const cc_options* options, int* covered,
                             char** result_json);
CC_API void cc_covering_free(cc_covering* c);

/* Covering JSON of the best known construction, tagged with its name. */
CC_API cc_status cc_construct(int d, int m, int pretty, char** out);
CC_API cc_status cc_bound(int d, int m, int pretty, char** out);
/* *valid is 1 or 0; out holds {"valid", "failure"?}. */
CC_API cc_status cc_check(const char* certificate_json, int pretty, int* valid, char** out);
CC_API cc_status cc_gamma(int d, int m, const cc_options* options, char** out);
CC_API cc_status cc_report(const cc_options* options, char** out);
/* config_json: {"d", "m", ...}; absent fields take their defaults. */
CC_API cc_status cc_search(const char* config_json, const cc_options* options, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CROSSCOVER_CROSSCOVER_H */
