/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// rkcd command-line front end. Every subcommand reads JSON files, calls the
// C API and writes JSON to -o or standard output.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rkcd/rkcd.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kInvalid = 2, kNotEquivalent = 3, kUndecided = 4, kVerification = 5 };

struct Failure {
  int code;
  std::string message;
};

struct KernelDeleter {
  void operator()(rkcd_kernel* k) const { rkcd_kernel_free(k); }
};
struct HoloDeleter {
  void operator()(rkcd_holo* h) const { rkcd_holo_free(h); }
};
struct StringDeleter {
  void operator()(char* s) const { rkcd_string_free(s); }
};
using Kernel = std::unique_ptr<rkcd_kernel, KernelDeleter>;
using Holo = std::unique_ptr<rkcd_holo, HoloDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

struct Config {
  int degree = 8;
  std::optional<double> tau_zero;
  double tau_psd = 1e-9;
  double tau_rank = 1e-8;
  double delta_gap = 1e-6;
  std::uint64_t seed = 0;
  std::string output;
};

int exit_for(rkcd_status s) {
  switch (s) {
    case RKCD_VERIFICATION_FAILED:
    case RKCD_INCONSISTENT:
    case RKCD_INTERNAL:
      return kVerification;
    default:
      return kInvalid;
  }
}

void check(rkcd_status s, const std::string& context) {
  if (s != RKCD_OK) throw Failure{exit_for(s), context + ": " + rkcd_last_error()};
}

rkcd_tolerances tolerances(const Config& c) {
  rkcd_tolerances t;
  rkcd_default_tolerances(&t);
  if (const char* env = std::getenv("RKHS_CD_TOLERANCE"); !c.tau_zero && env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(v > 0.0)) throw Failure{kInvalid, "RKHS_CD_TOLERANCE must be a positive number"};
    t.tau_zero = v;
  }
  if (c.tau_zero) t.tau_zero = *c.tau_zero;
  t.tau_psd = c.tau_psd;
  t.tau_rank = c.tau_rank;
  t.delta_gap = c.delta_gap;
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInvalid, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Failure{kInvalid, "cannot write '" + c.output + "'"};
  out << text << "\n";
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    // Re-parse through the library for its line/column diagnostic.
    rkcd_kernel* k = nullptr;
    if (rkcd_kernel_from_json(text.c_str(), &k) == RKCD_OK) rkcd_kernel_free(k);
    throw Failure{kInvalid, source + ": " + rkcd_last_error()};
  }
}

Json take(char* s) {
  Text owned(s);
  return Json::parse(owned.get());
}

// Loads a kernel and truncates it to the configured degree when larger.
Kernel load_kernel(const std::string& path, const Config& c) {
  const std::string text = read_file(path);
  rkcd_kernel* raw = nullptr;
  check(rkcd_kernel_from_json(text.c_str(), &raw), path);
  Kernel k(raw);
  if (rkcd_kernel_degree(k.get()) > c.degree) {
    rkcd_kernel* t = nullptr;
    check(rkcd_kernel_truncate(k.get(), c.degree, &t), path);
    k.reset(t);
  }
  return k;
}

Json kernel_json(const rkcd_kernel* k) {
  char* s = nullptr;
  check(rkcd_kernel_to_json(k, &s), "serialize");
  return take(s);
}

Json holo_json(const rkcd_holo* h) {
  char* s = nullptr;
  check(rkcd_holo_to_json(h, &s), "serialize");
  return take(s);
}

int run_validate(const std::string& file, const Config& c) {
  const Kernel k = load_kernel(file, c);
  const rkcd_tolerances t = tolerances(c);
  int passed = 0;
  char* report = nullptr;
  check(rkcd_validate(k.get(), &t, &passed, &report), file);
  write_output(c, take(report).dump(2));
  return passed ? kOk : kInvalid;
}

int run_curvature(const std::string& file, int order, const std::string& convention, const Config& c) {
  const Kernel k = load_kernel(file, c);
  const rkcd_tolerances t = tolerances(c);
  char* out = nullptr;
  check(rkcd_curvature(k.get(), order, convention == "direct" ? RKCD_METRIC_DIRECT : RKCD_METRIC_OMEGA, &t, &out),
        file);
  write_output(c, take(out).dump(2));
  return kOk;
}

int run_normalize(const std::string& file, const Config& c) {
  const Kernel k = load_kernel(file, c);
  const rkcd_tolerances t = tolerances(c);
  rkcd_kernel* n = nullptr;
  rkcd_holo* g = nullptr;
  check(rkcd_normalize(k.get(), &t, &n, &g), file);
  const Kernel normalized(n);
  const Holo gauge(g);
  write_output(c, Json{{"K0", kernel_json(normalized.get())}, {"gauge", holo_json(gauge.get())}}.dump(2));
  return kOk;
}

int run_decompose(const std::string& file, const Config& c) {
  const Kernel k = load_kernel(file, c);
  const rkcd_tolerances t = tolerances(c);
  char* out = nullptr;
  const rkcd_status s = rkcd_decompose(k.get(), c.seed, &t, &out);
  if (out != nullptr) write_output(c, take(out).dump(2));
  if (s == RKCD_VERIFICATION_FAILED) {
    std::cerr << "rkcd: " << file << ": " << rkcd_last_error() << "\n";
    return kVerification;
  }
  check(s, file);
  return kOk;
}

int run_equiv(const std::string& a, const std::string& b, const Config& c) {
  const Kernel ka = load_kernel(a, c);
  const Kernel kb = load_kernel(b, c);
  const rkcd_tolerances t = tolerances(c);
  rkcd_verdict verdict = RKCD_VERDICT_FAILED;
  char* out = nullptr;
  check(rkcd_equivalent(ka.get(), kb.get(), c.seed, &t, &verdict, nullptr, &out), a + " vs " + b);
  write_output(c, take(out).dump(2));
  switch (verdict) {
    case RKCD_EQUIVALENT: return kOk;
    case RKCD_NOT_EQUIVALENT: return kNotEquivalent;
    case RKCD_UNDECIDED: return kUndecided;
    case RKCD_VERDICT_FAILED: return kVerification;
  }
  return kVerification;
}

int run_structure(const std::string& file, const std::vector<int>& pa, const std::vector<int>& pb,
                  const Config& c) {
  Json j = parse(read_file(file), file);
  if (j.is_object() && j.contains("witness")) j = j["witness"];
  rkcd_holo* raw = nullptr;
  check(rkcd_holo_from_json(j.dump().c_str(), &raw), file);
  const Holo phi(raw);
  const rkcd_tolerances t = tolerances(c);
  int passed = 0;
  char* out = nullptr;
  check(rkcd_structure(phi.get(), pa.data(), pa.size(), pb.data(), pb.size(), &t, &passed, &out), file);
  write_output(c, take(out).dump(2));
  return passed ? kOk : kVerification;
}

int run_gen(const Json& spec, const std::string& truth_path, const Config& c) {
  rkcd_kernel* raw = nullptr;
  char* truth = nullptr;
  check(rkcd_generate(spec.dump().c_str(), &raw, &truth), "gen");
  const Kernel k(raw);
  Text owned(truth);
  write_output(c, kernel_json(k.get()).dump(2));
  if (!truth_path.empty()) {
    if (!owned) throw Failure{kInvalid, "--truth is only available for disguised instances"};
    std::ofstream out(truth_path, std::ios::binary);
    if (!out) throw Failure{kInvalid, "cannot write '" + truth_path + "'"};
    out << Json::parse(owned.get()).dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued reproducing kernels: curvature, normalization, decomposition and equivalence"};
  app.require_subcommand(1);
  Config config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--degree", config.degree, "Truncation degree D")->check(CLI::PositiveNumber);
    sub->add_option("--tau-zero", config.tau_zero, "Zero tolerance (overrides RKHS_CD_TOLERANCE)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tau-psd", config.tau_psd, "Positivity tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tau-rank", config.tau_rank, "Relative rank threshold")->check(CLI::PositiveNumber);
    sub->add_option("--delta-gap", config.delta_gap, "Relative eigenvalue gap")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", config.output, "Output file (default: standard output)");
  };

  std::string file_a;
  std::string file_b;

  CLI::App* validate = app.add_subcommand("validate", "Check Hermitian symmetry and positivity");
  validate->add_option("kernel", file_a)->required();
  common(validate);

  int order = 2;
  std::string convention = "omega";
  CLI::App* curvature = app.add_subcommand("curvature", "Curvature and covariant derivative table");
  curvature->add_option("kernel", file_a)->required();
  curvature->add_option("--order", order, "Table order r (entries with i + j <= r)")->check(CLI::NonNegativeNumber);
  curvature->add_option("--convention", convention, "Metric convention")->check(CLI::IsMember({"direct", "omega"}));
  common(curvature);

  CLI::App* normalize = app.add_subcommand("normalize", "Normalize a kernel at the origin");
  normalize->add_option("kernel", file_a)->required();
  common(normalize);

  CLI::App* decompose = app.add_subcommand("decompose", "Irreducible decomposition of a kernel");
  decompose->add_option("kernel", file_a)->required();
  decompose->add_option("--seed", config.seed, "Random seed");
  common(decompose);

  CLI::App* equiv = app.add_subcommand("equiv", "Decide unitary equivalence of two kernels");
  equiv->add_option("a", file_a)->required();
  equiv->add_option("b", file_b)->required();
  equiv->add_option("--seed", config.seed, "Random seed");
  common(equiv);

  std::vector<int> partition_a;
  std::vector<int> partition_b;
  CLI::App* structure = app.add_subcommand("structure", "Block structure of an intertwining witness");
  structure->add_option("witness", file_a, "Holomorphic series JSON or equiv output")->required();
  structure->add_option("--partition-a", partition_a, "Block sizes of the witness rows")
      ->required()
      ->delimiter(',');
  structure->add_option("--partition-b", partition_b, "Block sizes of the witness columns")
      ->required()
      ->delimiter(',');
  common(structure);

  std::string kind;
  double alpha = 2.0;
  std::vector<double> weights;
  std::string base = "szego";
  std::vector<std::string> components;
  int rank = 1;
  int width = 0;
  std::string truth_path;
  CLI::App* gen = app.add_subcommand("gen", "Generate a kernel");
  gen->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"szego", "bergman", "exp", "diagonal", "jet", "direct-sum", "disguised", "random-psd"}));
  gen->add_option("--alpha", alpha, "Bergman parameter");
  gen->add_option("--weights", weights, "Diagonal weights a_0..a_D")->delimiter(',');
  gen->add_option("--base", base, "Jet base component");
  gen->add_option("--components", components, "Component tokens such as szego*2,bergman")->delimiter(',');
  gen->add_option("--rank", rank, "Rank of random-psd kernels")->check(CLI::PositiveNumber);
  gen->add_option("--width", width, "Width r of the random factor (default rank + 2)");
  gen->add_option("--seed", config.seed, "Random seed");
  gen->add_option("--truth", truth_path, "Ground-truth output for disguised instances");
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate) return run_validate(file_a, config);
    if (*curvature) return run_curvature(file_a, order, convention, config);
    if (*normalize) return run_normalize(file_a, config);
    if (*decompose) return run_decompose(file_a, config);
    if (*equiv) return run_equiv(file_a, file_b, config);
    if (*structure) return run_structure(file_a, partition_a, partition_b, config);
    if (*gen) {
      Json spec = {{"kind", kind}, {"degree", config.degree}, {"alpha", alpha}, {"base", base},
                   {"rank", rank}, {"width", width},          {"seed", config.seed}};
      if (!weights.empty()) spec["weights"] = weights;
      if (!components.empty()) spec["components"] = components;
      return run_gen(spec, truth_path, config);
    }
  } catch (const Failure& f) {
    std::cerr << "rkcd: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "rkcd: " << e.what() << "\n";
    return kVerification;
  }
  return kInvalid;
}
