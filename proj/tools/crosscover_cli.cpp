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

// crosscover: command-line front end over the C interface.
//
// Exit codes
//   0  success (verify: covered, check: valid)
//   1  verify: uncovered; check: invalid certificate
//   2  invalid arguments or malformed input
//   3  verify: region cap exceeded
//   4  internal consistency failure

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosscover/crosscover.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kRegionCap = 3;
constexpr int kInternal = 4;
constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2d41ULL;

struct Owned {
  char* text = nullptr;
  ~Owned() { cc_string_free(text); }
};

struct Globals {
  unsigned threads = 1;
  bool pretty = false;
  std::string meta_path;
};

int exit_for(cc_status s) {
  switch (s) {
    case CC_OK: return kOk;
    case CC_REGION_CAP: return kRegionCap;
    case CC_INTERNAL: return kInternal;
    default: return kBadInput;
  }
}

int fail(cc_status s) {
  std::cerr << "crosscover: " << cc_last_error() << "\n";
  return exit_for(s);
}

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cell(const Json& row) {
  std::string s = row["lower"].get<std::string>();
  if (!row["exact"].get<bool>()) s = "[" + s + ", " + row["upper"].get<std::string>() + "]";
  return s;
}

void print_report_table(const Json& report) {
  std::printf("%-3s %-3s %-14s %-13s %-18s %s\n", "d", "m", "gamma", "status", "lower", "notes");
  for (const auto& row : report["rows"]) {
    std::string notes;
    for (const auto& n : row["notes"]) {
      if (!notes.empty()) notes += "; ";
      notes += n.get<std::string>();
    }
    std::printf("%-3d %-3d %-14s %-13s %-18s %s\n", row["d"].get<int>(), row["m"].get<int>(),
                cell(row).c_str(), row["status"].get<std::string>().c_str(),
                row["lower_certificate"]["kind"].get<std::string>().c_str(), notes.c_str());
  }
  for (const auto& line : report["covering_number"]) {
    std::printf("%s  (%s copies of ratio %s, %s)\n", line["statement"].get<std::string>().c_str(),
                std::to_string(line["copies"].get<int>()).c_str(),
                line["ratio"].get<std::string>().c_str(),
                line["verified"].get<bool>() ? "verified" : "NOT verified");
  }
}

void print(const char* text) { std::cout << text << "\n"; }

void write_meta(const Globals& g, const std::string& command, std::uint64_t seed,
                std::chrono::steady_clock::time_point start, int code) {
  Json meta;
  meta["tool"] = "crosscover";
  meta["version"] = cc_version();
  meta["command"] = command;
  meta["threads"] = g.threads;
  meta["seed"] = seed;
  meta["exit_code"] = code;
  meta["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const std::string text = Json{{"meta", meta}}.dump();
  if (g.meta_path.empty()) {
    std::cerr << text << "\n";
  } else if (g.meta_path != "none") {
    std::ofstream(g.meta_path) << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact covering verification and certificates for the cross-polytope"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads")
      ->envname("CROSSCOVER_THREADS")
      ->check(CLI::Range(1U, 1024U));
  app.add_flag("--pretty", g.pretty, "Human-readable output");
  app.add_option("--meta", g.meta_path,
                 "Write the run metadata envelope here (default stderr, 'none' to drop)");

  int d = 0;
  int m = 0;
  auto add_dm = [&](CLI::App* sub) {
    sub->add_option("--d", d, "Dimension")->required();
    sub->add_option("--m", m, "Number of copies")->required();
  };

  auto* construct = app.add_subcommand("construct", "Best known covering as JSON");
  add_dm(construct);

  std::string input = "-";
  std::string mode = "auto";
  std::size_t region_cap = 0;
  bool regions = false;
  auto* verify = app.add_subcommand("verify", "Exactly verify a covering file");
  verify->add_option("file", input, "Covering JSON ('-' for stdin)");
  verify->add_option("--mode", mode, "auto, full or boundary")
      ->check(CLI::IsMember({"auto", "full", "boundary"}));
  verify->add_option("--region-cap", region_cap, "Abort above this many live regions");
  verify->add_flag("--regions", regions, "Include every uncovered region");

  auto* bound = app.add_subcommand("bound", "Lower-bound certificate as JSON");
  add_dm(bound);

  auto* check = app.add_subcommand("check", "Independently re-check a certificate");
  check->add_option("file", input, "Certificate JSON ('-' for stdin)");

  auto* gamma = app.add_subcommand("gamma", "Proven interval for gamma^d_m");
  add_dm(gamma);

  app.add_subcommand("report", "Table of intervals for d = 3, 4, 5");

  Json search_cfg = Json::object();
  double lambda_hi = 0;
  double lambda_lo = 0;
  int iterations = 0;
  int restarts = 0;
  int sample_count = 0;
  std::uint64_t seed = kDefaultSeed;
  long max_den = 0;
  int bisect_steps = 0;
  auto* search = app.add_subcommand("search", "Heuristic search with exact re-verification");
  add_dm(search);
  auto* o_hi = search->add_option("--lambda-hi", lambda_hi, "Upper end of the bisection");
  auto* o_lo = search->add_option("--lambda-lo", lambda_lo, "Lower end of the bisection");
  auto* o_it = search->add_option("--iterations", iterations, "Annealing steps per restart");
  auto* o_re = search->add_option("--restarts", restarts, "Restarts per probe");
  auto* o_sc = search->add_option("--sample-count", sample_count, "Boundary samples");
  search->add_option("--seed", seed, "Random seed");
  auto* o_md = search->add_option("--max-denominator", max_den, "Snapping denominator bound");
  auto* o_bs = search->add_option("--bisect-steps", bisect_steps, "Bisection steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  cc_options opts;
  cc_options_init(&opts);
  opts.threads = g.threads;
  opts.pretty = g.pretty ? 1 : 0;
  Owned out;
  int code = kOk;
  const std::string name = app.get_subcommands().front()->get_name();

  if (name == "construct") {
    const cc_status s = cc_construct(d, m, opts.pretty, &out.text);
    if (s != CC_OK) {
      std::cerr << "crosscover: " << cc_last_error() << "\n" << construct->help();
      code = kBadInput;
    } else {
      print(out.text);
    }
  } else if (name == "verify") {
    const auto text = slurp(input);
    cc_covering* covering = nullptr;
    if (!text) {
      std::cerr << "crosscover: cannot read " << input << "\n";
      code = kBadInput;
    } else if (cc_status s = cc_covering_parse(text->c_str(), &covering); s != CC_OK) {
      code = fail(s);
    } else {
      std::unique_ptr<cc_covering, void (*)(cc_covering*)> guard(covering, cc_covering_free);
      opts.mode = mode == "full" ? CC_MODE_FULL : (mode == "boundary" ? CC_MODE_BOUNDARY : CC_MODE_AUTO);
      opts.region_cap = region_cap;
      opts.with_regions = regions ? 1 : 0;
      int covered = 0;
      const cc_status v = cc_covering_verify(covering, &opts, &covered, &out.text);
      if (v != CC_OK) {
        code = fail(v);
      } else {
        print(out.text);
        code = covered ? kOk : kNegative;
      }
    }
  } else if (name == "bound") {
    const cc_status s = cc_bound(d, m, opts.pretty, &out.text);
    if (s != CC_OK) code = fail(s); else print(out.text);
  } else if (name == "check") {
    const auto text = slurp(input);
    int valid = 0;
    if (!text) {
      std::cerr << "crosscover: cannot read " << input << "\n";
      code = kBadInput;
    } else if (cc_status s = cc_check(text->c_str(), opts.pretty, &valid, &out.text); s != CC_OK) {
      code = fail(s);
    } else {
      print(out.text);
      code = valid ? kOk : kNegative;
    }
  } else if (name == "gamma") {
    const cc_status s = cc_gamma(d, m, &opts, &out.text);
    if (s != CC_OK) code = fail(s); else print(out.text);
  } else if (name == "report") {
    opts.pretty = 0;
    const cc_status s = cc_report(&opts, &out.text);
    if (s != CC_OK) {
      code = fail(s);
    } else if (g.pretty) {
      print_report_table(Json::parse(out.text));
    } else {
      print(out.text);
    }
  } else if (name == "search") {
    search_cfg["d"] = d;
    search_cfg["m"] = m;
    search_cfg["seed"] = seed;
    if (*o_hi) search_cfg["lambda_hi"] = lambda_hi;
    if (*o_lo) search_cfg["lambda_lo"] = lambda_lo;
    if (*o_it) search_cfg["iterations"] = iterations;
    if (*o_re) search_cfg["restarts"] = restarts;
    if (*o_sc) search_cfg["sample_count"] = sample_count;
    if (*o_md) search_cfg["max_denominator"] = max_den;
    if (*o_bs) search_cfg["bisect_steps"] = bisect_steps;
    const std::string cfg_text = search_cfg.dump();
    const cc_status s = cc_search(cfg_text.c_str(), &opts, &out.text);
    if (s != CC_OK) code = fail(s); else print(out.text);
  }
  write_meta(g, name, seed, start, code);
  return code;
}
