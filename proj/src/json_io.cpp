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

#include "crosscover/json_io.hpp"

#include "crosscover/error.hpp"

namespace crosscover {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

int small_int(const Json& j, const char* key) {
  const long long v = integer(j, key);
  if (v < -1'000'000 || v > 1'000'000) bad(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

const char* relation_name(DistanceFact::Relation r) {
  return r == DistanceFact::Relation::Equal ? "equal" : "at_least_2lambda";
}

std::size_t targets_of(const LowerBoundCertificate& c) {
  return c.kind == CertificateKind::Structured ? c.witness_points.size() - c.anchor_count
                                               : c.witness_points.size();
}

long long copies_of(const LowerBoundCertificate& c) {
  return c.kind == CertificateKind::Structured
             ? static_cast<long long>(c.m) - static_cast<long long>(c.anchor_count)
             : c.m;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational \"p/q\"");
}

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_json(x));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a coordinate array");
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return Point(std::move(coords));
}

Json to_json(const Covering& c) {
  Json centers = Json::array();
  for (const auto& u : c.centers) centers.push_back(to_json(u));
  return {{"d", c.dim}, {"lambda", to_json(c.ratio)}, {"centers", std::move(centers)}};
}

Covering covering_from_json(const Json& j) {
  Covering c;
  c.dim = small_int(j, "d");
  c.ratio = rational_from_json(field(j, "lambda"));
  const Json& centers = field(j, "centers");
  if (!centers.is_array()) bad("\"centers\" must be an array");
  for (const auto& u : centers) c.centers.push_back(point_from_json(u));
  c.validate();
  return c;
}

Json to_json(const CoverageResult& r, bool with_regions) {
  Json j;
  j["verdict"] = r.covered ? "covered" : "uncovered";
  if (!r.covered) {
    j["witness"] = to_json(r.witness);
    j["margin"] = to_json(r.margin);
  }
  j["regions_explored"] = r.trace.regions_explored;
  j["lp_solves"] = r.trace.lp_solves;
  j["peak_live_regions"] = r.trace.peak_live_regions;
  j["mode"] = r.mode_used == VerifyMode::BoundaryOnly ? "boundary" : "full";
  if (with_regions && !r.covered) {
    Json regions = Json::array();
    for (const auto& region : r.uncovered_regions) {
      Json hs = Json::array();
      for (const auto& h : region) {
        Json normal = Json::array();
        for (const auto& a : h.normal) normal.push_back(to_json(a));
        hs.push_back({{"normal", std::move(normal)},
                      {"offset", to_json(h.offset)},
                      {"strict", h.strict}});
      }
      regions.push_back(std::move(hs));
    }
    j["uncovered_regions"] = std::move(regions);
  }
  return j;
}

Json to_json(const LowerBoundCertificate& c) {
  Json pts = Json::array();
  for (const auto& p : c.witness_points) pts.push_back(to_json(p));
  Json facts = Json::array();
  for (const auto& f : c.distance_facts) {
    facts.push_back({{"type", "distance"},
                     {"i", f.i},
                     {"j", f.j},
                     {"value", to_json(f.value)},
                     {"relation", relation_name(f.relation)}});
  }
  if (c.kind == CertificateKind::PigeonholeClique || c.kind == CertificateKind::Structured) {
    facts.push_back({{"type", "maxclique"},
                     {"anchors", c.kind == CertificateKind::Structured ? c.anchor_count : 0},
                     {"bound", c.clique_bound}});
  }
  if (c.kind != CertificateKind::Trivial) {
    const long long bound =
        c.kind == CertificateKind::CompleteConflict ? 1 : static_cast<long long>(c.clique_bound);
    facts.push_back({{"type", "counting"},
                     {"copies", copies_of(c)},
                     {"bound", bound},
                     {"targets", targets_of(c)}});
  }
  Json j;
  j["d"] = c.d;
  j["m"] = c.m;
  j["lambda"] = to_json(c.lambda);
  j["kind"] = to_string(c.kind);
  j["label"] = c.label;
  j["flags"] = c.flags;
  j["witness_points"] = std::move(pts);
  j["facts"] = std::move(facts);
  return j;
}

LowerBoundCertificate certificate_from_json(const Json& j) {
  LowerBoundCertificate c;
  c.d = small_int(j, "d");
  c.m = small_int(j, "m");
  c.lambda = rational_from_json(field(j, "lambda"));
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  try {
    c.kind = certificate_kind_from_string(kind.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
  if (const auto it = j.find("label"); it != j.end() && it->is_string())
    c.label = it->get<std::string>();
  if (const auto it = j.find("flags"); it != j.end()) {
    if (!it->is_array()) bad("\"flags\" must be an array");
    for (const auto& f : *it) {
      if (!f.is_string()) bad("flags must be strings");
      c.flags.push_back(f.get<std::string>());
    }
  }
  const Json& pts = field(j, "witness_points");
  if (!pts.is_array()) bad("\"witness_points\" must be an array");
  for (const auto& p : pts) c.witness_points.push_back(point_from_json(p));
  const Json& facts = field(j, "facts");
  if (!facts.is_array()) bad("\"facts\" must be an array");
  for (const auto& f : facts) {
    const Json& type = field(f, "type");
    if (type == "distance") {
      DistanceFact d;
      const long long i = integer(f, "i");
      const long long k = integer(f, "j");
      if (i < 0 || k < 0) bad("distance fact indices must be non-negative");
      d.i = static_cast<std::size_t>(i);
      d.j = static_cast<std::size_t>(k);
      d.value = rational_from_json(field(f, "value"));
      const Json& rel = field(f, "relation");
      if (rel == "equal") {
        d.relation = DistanceFact::Relation::Equal;
      } else if (rel == "at_least_2lambda") {
        d.relation = DistanceFact::Relation::AtLeastThreshold;
      } else {
        bad("unknown distance relation");
      }
      c.distance_facts.push_back(d);
    } else if (type == "maxclique") {
      const long long a = integer(f, "anchors");
      const long long b = integer(f, "bound");
      if (a < 0 || b < 0) bad("maxclique fields must be non-negative");
      c.anchor_count = static_cast<std::size_t>(a);
      c.clique_bound = static_cast<std::size_t>(b);
    } else if (type != "counting") {
      bad("unknown fact type");
    }
  }
  return c;
}

CheckResult check_certificate_json(const Json& j) {
  const LowerBoundCertificate c = certificate_from_json(j);
  CheckResult r = check_certificate(c);
  if (!r.valid) return r;
  for (const auto& f : field(j, "facts")) {
    if (f.at("type") != "counting") continue;
    const long long bound =
        c.kind == CertificateKind::CompleteConflict ? 1 : static_cast<long long>(c.clique_bound);
    if (integer(f, "copies") != copies_of(c) || integer(f, "bound") != bound ||
        integer(f, "targets") != static_cast<long long>(targets_of(c)))
      return {false, "counting fact disagrees with the certificate"};
  }
  return r;
}

Json to_json(const GammaInterval& g) {
  Json j;
  j["d"] = g.d;
  j["m"] = g.m;
  j["lower"] = to_json(g.lower);
  j["lower_certificate"] = {{"kind", to_string(g.certificate.kind)},
                            {"label", g.certificate.label},
                            {"checked", true}};
  j["upper"] = to_json(g.upper);
  j["upper_covering"] = {{"construction", to_string(g.construction.name)},
                         {"verdict", g.upper_verdict.covered ? "covered" : "uncovered"},
                         {"regions_explored", g.upper_verdict.trace.regions_explored}};
  j["exact"] = g.exact;
  j["status"] = to_string(g.status);
  j["notes"] = g.notes;
  return j;
}

Json to_json(const GammaReport& r) {
  Json rows = Json::array();
  for (const auto& g : r.rows) rows.push_back(to_json(g));
  Json lines = Json::array();
  for (const auto& l : r.covering_number) {
    lines.push_back({{"d", l.d},
                     {"copies", l.copies},
                     {"power", l.power},
                     {"ratio", to_json(l.ratio)},
                     {"verified", l.verified},
                     {"statement", "c^" + std::to_string(l.d) + "(K^" + std::to_string(l.d) +
                                       ") <= " + std::to_string(l.copies) + " < " +
                                       std::to_string(l.power)}});
  }
  return {{"rows", std::move(rows)}, {"covering_number", std::move(lines)}};
}

Json to_json(const SearchConfig& c) {
  return {{"d", c.d},
          {"m", c.m},
          {"lambda_hi", c.lambda_hi},
          {"lambda_lo", c.lambda_lo},
          {"iterations", c.iterations},
          {"restarts", c.restarts},
          {"sample_count", c.sample_count},
          {"seed", c.seed},
          {"max_denominator", c.max_denominator},
          {"bisect_steps", c.bisect_steps},
          {"refine_rounds", c.refine_rounds},
          {"initial_temperature", c.initial_temperature},
          {"final_temperature_ratio", c.final_temperature_ratio},
          {"step", c.step}};
}

SearchConfig search_config_from_json(const Json& j) {
  SearchConfig c = SearchConfig::defaults(small_int(j, "d"), small_int(j, "m"));
  auto take = [&](const char* key, auto& dst) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    using T = std::decay_t<decltype(dst)>;
    if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) bad(std::string("field \"") + key + "\" must be a number");
    } else {
      if (!it->is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    }
    dst = it->get<T>();
  };
  take("lambda_hi", c.lambda_hi);
  take("lambda_lo", c.lambda_lo);
  take("iterations", c.iterations);
  take("restarts", c.restarts);
  take("sample_count", c.sample_count);
  take("seed", c.seed);
  take("max_denominator", c.max_denominator);
  take("bisect_steps", c.bisect_steps);
  take("refine_rounds", c.refine_rounds);
  take("initial_temperature", c.initial_temperature);
  take("final_temperature_ratio", c.final_temperature_ratio);
  take("step", c.step);
  take("threads", c.threads);
  c.validate();
  return c;
}

Json to_json(const SearchReport& r) {
  Json centers = Json::array();
  for (const auto& c : r.centers_float) centers.push_back(c);
  Json curve = Json::array();
  for (const auto& [lambda, def] : r.deficiency_curve)
    curve.push_back({{"lambda", lambda}, {"deficiency", def}});
  Json j;
  j["config"] = to_json(r.config);
  j["heuristic"] = true;
  j["best_lambda_float"] = r.best_lambda_float;
  j["centers_float"] = std::move(centers);
  j["deficiency_curve"] = std::move(curve);
  if (r.snapped && r.exact_verdict) {
    j["snapped"] = to_json(*r.snapped);
    j["exact_verdict"] = to_json(*r.exact_verdict);
    j["proven_upper_bound"] = to_json(r.snapped->ratio);
  }
  return j;
}

}  // namespace crosscover
