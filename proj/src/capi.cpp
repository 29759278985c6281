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

#include "crosscover/crosscover.h"

#include <cstring>
#include <string>

#include "crosscover/error.hpp"
#include "crosscover/json_io.hpp"

struct cc_covering {
  crosscover::Covering value;
};

namespace {

using crosscover::ErrorCode;
using crosscover::Json;

thread_local std::string last_error;

cc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CC_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return CC_DIMENSION_MISMATCH;
    case ErrorCode::Precondition: return CC_PRECONDITION;
    case ErrorCode::Parse: return CC_PARSE_ERROR;
    case ErrorCode::RegionCap: return CC_REGION_CAP;
    case ErrorCode::Internal: return CC_INTERNAL;
  }
  return CC_INTERNAL;
}

template <class Fn>
cc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return CC_OK;
  } catch (const crosscover::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return CC_PARSE_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, int pretty, char** out) {
  if (out == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null output pointer");
  *out = dup(j.dump(pretty ? 2 : -1));
}

Json parse_text(const char* text) {
  if (text == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null input");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw crosscover::Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

crosscover::VerifyOptions verify_options(const cc_options* o) {
  crosscover::VerifyOptions v;
  if (o == nullptr) return v;
  v.threads = o->threads == 0 ? 1 : o->threads;
  if (o->region_cap != 0) v.region_cap = o->region_cap;
  switch (o->mode) {
    case CC_MODE_AUTO: v.mode = crosscover::VerifyMode::Auto; break;
    case CC_MODE_FULL: v.mode = crosscover::VerifyMode::FullBody; break;
    case CC_MODE_BOUNDARY: v.mode = crosscover::VerifyMode::BoundaryOnly; break;
    default: throw crosscover::Error(ErrorCode::InvalidArgument, "unknown verify mode");
  }
  return v;
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { delete[] s; }

void cc_options_init(cc_options* options) {
  if (options == nullptr) return;
  options->threads = 1;
  options->mode = CC_MODE_AUTO;
  options->region_cap = 0;
  options->pretty = 0;
  options->with_regions = 0;
}

cc_status cc_covering_parse(const char* json, cc_covering** out) {
  return guarded([&] {
    if (out == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null output pointer");
    auto c = crosscover::covering_from_json(parse_text(json));
    *out = new cc_covering{std::move(c)};
  });
}

cc_status cc_covering_construct(int d, int m, cc_covering** out) {
  return guarded([&] {
    if (out == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null output pointer");
    *out = new cc_covering{crosscover::best_known(d, m).covering};
  });
}

cc_status cc_covering_to_json(const cc_covering* c, int pretty, char** out) {
  return guarded([&] {
    if (c == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null covering");
    emit(crosscover::to_json(c->value), pretty, out);
  });
}

cc_status cc_covering_verify(const cc_covering* c, const cc_options* options, int* covered,
                             char** result_json) {
  return guarded([&] {
    if (c == nullptr) throw crosscover::Error(ErrorCode::InvalidArgument, "null covering");
    const auto r = crosscover::verify_covering(c->value, verify_options(options));
    if (covered != nullptr) *covered = r.covered ? 1 : 0;
    const bool regions = options != nullptr && options->with_regions != 0;
    if (result_json != nullptr)
      emit(crosscover::to_json(r, regions), options != nullptr && options->pretty, result_json);
  });
}

void cc_covering_free(cc_covering* c) { delete c; }

cc_status cc_construct(int d, int m, int pretty, char** out) {
  return guarded([&] {
    const auto k = crosscover::best_known(d, m);
    Json j = crosscover::to_json(k.covering);
    j["m"] = m;
    j["construction"] = crosscover::to_string(k.name);
    emit(j, pretty, out);
  });
}

cc_status cc_bound(int d, int m, int pretty, char** out) {
  return guarded([&] { emit(crosscover::to_json(crosscover::lower_bound(d, m)), pretty, out); });
}

cc_status cc_check(const char* certificate_json, int pretty, int* valid, char** out) {
  return guarded([&] {
    const auto r = crosscover::check_certificate_json(parse_text(certificate_json));
    if (valid != nullptr) *valid = r.valid ? 1 : 0;
    Json j{{"valid", r.valid}};
    if (!r.valid) j["failure"] = r.failure;
    emit(j, pretty, out);
  });
}

cc_status cc_gamma(int d, int m, const cc_options* options, char** out) {
  return guarded([&] {
    const auto g = crosscover::gamma_interval(d, m, verify_options(options));
    emit(crosscover::to_json(g), options != nullptr && options->pretty, out);
  });
}

cc_status cc_report(const cc_options* options, char** out) {
  return guarded([&] {
    const auto r = crosscover::gamma_report(verify_options(options));
    emit(crosscover::to_json(r), options != nullptr && options->pretty, out);
  });
}

cc_status cc_search(const char* config_json, const cc_options* options, char** out) {
  return guarded([&] {
    auto cfg = crosscover::search_config_from_json(parse_text(config_json));
    const auto verify = verify_options(options);
    if (options != nullptr && options->threads > 1) cfg.threads = options->threads;
    const auto r = crosscover::bisect_lambda(cfg, verify);
    emit(crosscover::to_json(r), options != nullptr && options->pretty, out);
  });
}

}  // extern "C"
