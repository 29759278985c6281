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

#ifndef CROSSCOVER_JSON_IO_HPP
#define CROSSCOVER_JSON_IO_HPP

#include <json.hpp>

#include "crosscover/bounds.hpp"
#include "crosscover/search.hpp"

namespace crosscover {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; malformed input throws Error(Parse).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"d", "lambda", "centers"}
Json to_json(const Covering& c);
/// Parses and validates.
Covering covering_from_json(const Json& j);

/// {"verdict", "witness"?, "margin"?, "regions_explored", ...}
Json to_json(const CoverageResult& r, bool with_regions = false);

/// {"d", "m", "lambda", "kind", "witness_points", "facts", ...}
Json to_json(const LowerBoundCertificate& c);
LowerBoundCertificate certificate_from_json(const Json& j);
/// check_certificate plus consistency of the recorded counting fact.
CheckResult check_certificate_json(const Json& j);

Json to_json(const GammaInterval& g);
Json to_json(const GammaReport& r);

Json to_json(const SearchConfig& c);
/// Fields absent from j take SearchConfig::defaults(d, m).
SearchConfig search_config_from_json(const Json& j);
Json to_json(const SearchReport& r);

}  // namespace crosscover

#endif  // CROSSCOVER_JSON_IO_HPP
