//
// Copyright 2026 The corrdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// corrdp: seeded experiment runner for the correlated-noise mechanism.
//
//   corrdp calibrate --n 1024 --epsilon 0.1 --delta 1e-9 --mode tree
//   corrdp errors --mechanism correlated --workload nodal --n 16
//
// Exit codes: 0 success, 2 bad flags, 3 IO error, 4 validation failure.

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "corrdp/baselines.h"
#include "corrdp/mechanism.h"
#include "corrdp/metrics.h"
#include "corrdp/privacy.h"
#include "corrdp/sampler.h"
#include "corrdp/scaling.h"
#include "corrdp/serialization.h"
#include "corrdp/version.h"
#include "corrdp/workload.h"
#include "json.hpp"

namespace corrdp {
namespace {

constexpr int kExitFlags = 2;
constexpr int kExitIo = 3;
constexpr int kExitValidation = 4;

using Json = nlohmann::ordered_json;

// Result of one subcommand: the data file body plus extra sidecar fields.
struct Output {
  std::string body;
  Json extra = Json::object();
  bool binary = false;
};

// IO failures carry this code so that they map to their own exit status.
absl::Status IoError(const std::string& msg) {
  return absl::UnavailableError(msg);
}

int ExitCodeFor(const absl::Status& s) {
  return s.code() == absl::StatusCode::kUnavailable ? kExitIo : kExitValidation;
}

std::string Num(double v) { return absl::StrFormat("%.17g", v); }

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("CORRDP_SEED");
  std::uint64_t seed = 0;
  if (env != nullptr && absl::SimpleAtoi(env, &seed)) return seed;
  return 0;
}

absl::StatusOr<PrivacyBudget> Budget(double eps, double delta) {
  return PrivacyBudget::Create(eps, delta);
}

// ---- calibrate ----

struct CalibrateFlags {
  std::uint64_t n = 1024;
  double epsilon = 0.1;
  double delta = 1e-9;
  std::string mode = "tree";
};

absl::StatusOr<Output> RunCalibrate(const CalibrateFlags& f) {
  absl::StatusOr<PrivacyBudget> b = Budget(f.epsilon, f.delta);
  if (!b.ok()) return b.status();
  absl::StatusOr<CalibratedSigma> s;
  double diag = 1.0;
  if (f.mode == "tree") {
    s = CalibrateTree(f.n, *b);
    diag = PrecisionDiagMax(CeilLog2(f.n));
  } else if (f.mode == "iid") {
    s = CalibrateIid(*b);
  } else if (f.mode == "btree") {
    diag = CeilLog2(f.n) + 1.0;
    s = CalibrateGeneral(diag, *b);
  } else if (f.mode.rfind("general:", 0) == 0) {
    if (!absl::SimpleAtod(f.mode.substr(8), &diag)) {
      return absl::InvalidArgumentError("general:<diag> needs a number");
    }
    s = CalibrateGeneral(diag, *b);
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown mode ", f.mode));
  }
  if (!s.ok()) return s.status();
  Json j;
  j["mode"] = f.mode;
  j["n"] = f.n;
  j["epsilon"] = f.epsilon;
  j["delta"] = f.delta;
  j["diag_max"] = diag;
  j["sigma"] = s->sigma;
  j["sigma_squared"] = s->sigma_squared;
  j["source"] = std::string(SigmaSourceName(s->source));
  return Output{j.dump(2) + "\n"};
}

// ---- sample ----

struct SampleFlags {
  int depth = 10;
  double sigma = 1.0;
  std::string format = "csv";
};

absl::StatusOr<Output> RunSample(const SampleFlags& f, std::uint64_t seed) {
  SeededRng rng(seed);
  absl::StatusOr<NoiseTree> t = CascadeSample(f.depth, f.sigma, rng);
  if (!t.ok()) return t.status();
  Output out;
  if (f.format == "json") {
    out.body = NoiseTreeToJson(*t) + "\n";
  } else if (f.format == "binary") {
    std::ostringstream buf;
    if (absl::Status s = WriteNoiseTreeBinary(*t, buf); !s.ok()) return s;
    out.body = buf.str();
    out.binary = true;
  } else if (f.format == "csv") {
    out.body = "node,level,label,value\n";
    for (std::size_t m = 0; m < t->node_count(); ++m) {
      absl::StrAppend(&out.body, m, ",", std::bit_width(m + 1) - 1, ",",
                      NoiseTree::Label(m), ",", Num((*t)[m]), "\n");
    }
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown format ", f.format));
  }
  return out;
}

// ---- perturb ----

struct PerturbFlags {
  std::string input;
  std::size_t synthetic = 0;
  std::string mechanism = "correlated";
  double epsilon = 0.1;
  double delta = 1e-9;
};

absl::StatusOr<DataVector> ReadCsvVector(const std::string& path) {
  std::ifstream in(path);
  if (!in) return IoError(absl::StrCat("cannot open ", path));
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    double v = 0.0;
    if (!absl::SimpleAtod(line, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", line_no, ": not a number: ", line));
    }
    values.push_back(v);
  }
  return DataVector::Create(std::move(values));
}

absl::StatusOr<Output> RunPerturb(const PerturbFlags& f, std::uint64_t seed) {
  absl::StatusOr<PrivacyBudget> b = Budget(f.epsilon, f.delta);
  if (!b.ok()) return b.status();
  absl::StatusOr<MechanismKind> mech = ParseMechanism(f.mechanism);
  if (!mech.ok()) return mech.status();
  SeededRng rng(seed);
  absl::StatusOr<DataVector> x = absl::InvalidArgumentError(
      "give exactly one of --input and --synthetic");
  if (!f.input.empty() && f.synthetic == 0) {
    x = ReadCsvVector(f.input);
  } else if (f.input.empty() && f.synthetic > 0) {
    x = DataVector::SyntheticUniform(f.synthetic, rng);
  }
  if (!x.ok()) return x.status();

  Output out;
  const int depth = CeilLog2(x->size());
  if (*mech == MechanismKind::kBinaryTree) {
    absl::StatusOr<BinaryTreeRelease> r = BtPerturb(*x, *b, rng);
    if (!r.ok()) return r.status();
    out.body = "node,noisy_sum\n";
    for (std::size_t m = 0; m < r->noisy_nodes().size(); ++m) {
      absl::StrAppend(&out.body, m, ",", Num(r->noisy_nodes()[m]), "\n");
    }
    out.extra["noise"] = {{"mechanism", "btree"},
                          {"sigma", r->sigma().sigma},
                          {"depth", depth},
                          {"covariance", "identity over tree nodes"}};
    return out;
  }
  absl::StatusOr<CalibratedSigma> s = MechanismSigma(*mech, depth, *b);
  if (!s.ok()) return s.status();
  absl::StatusOr<PrivatizedVector> p =
      *mech == MechanismKind::kCorrelated ? Perturb(*x, *s, rng)
                                          : IidPerturb(*x, *s, rng);
  if (!p.ok()) return p.status();
  out.body = "index,value\n";
  for (std::size_t i = 0; i < p->size(); ++i) {
    absl::StrAppend(&out.body, i, ",", Num(p->values()[i]), "\n");
  }
  const NoiseMeta& meta = p->meta();
  out.extra["noise"] = {{"mechanism", std::string(MechanismName(meta.mechanism))},
                        {"sigma", meta.sigma},
                        {"depth", meta.depth},
                        {"padded_size", meta.padded_size},
                        {"covariance", meta.covariance}};
  return out;
}

// ---- errors ----

struct ErrorsFlags {
  std::string mechanism = "correlated";
  std::string workload = "continuous";
  std::vector<std::size_t> n = {1024};
  double epsilon = 0.1;
  double delta = 1e-9;
  std::size_t replicates = 10;
  std::size_t queries = 5000;
  std::size_t random_rows = 2500;
  bool exhaustive = false;
  unsigned threads = 0;
  std::string gnuplot;
};

absl::StatusOr<Output> RunErrors(const ErrorsFlags& f, std::uint64_t seed) {
  absl::StatusOr<PrivacyBudget> b = Budget(f.epsilon, f.delta);
  if (!b.ok()) return b.status();
  absl::StatusOr<MechanismKind> mech = ParseMechanism(f.mechanism);
  if (!mech.ok()) return mech.status();
  Output out;
  out.body = "n,mechanism,metric,value,stderr\n";
  std::string plot = "# n err_l2 bar err_worst_expected bar err_expected_worst bar\n";
  for (std::size_t n : f.n) {
    if (n == 0) return absl::InvalidArgumentError("--n must be positive");
    Workload w = Workload::ContinuousAll(n);
    if (f.workload == "nodal") {
      if (!std::has_single_bit(n)) {
        return absl::InvalidArgumentError("nodal workload needs power-of-two n");
      }
      w = Workload::Nodal(std::countr_zero(n));
    } else if (f.workload == "random") {
      w = Workload::Random(n, f.random_rows, DeriveSeed(seed, n));
    } else if (f.workload != "continuous") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown workload ", f.workload));
    }
    MonteCarloOptions opt;
    opt.mechanism = *mech;
    opt.replicates = f.replicates;
    opt.queries_per_replicate = f.queries;
    opt.exhaustive = f.exhaustive;
    opt.seed = DeriveSeed(seed, n);
    opt.threads = f.threads;
    absl::StatusOr<ErrorReport> r = MonteCarloErrors(w, *b, opt);
    if (!r.ok()) return r.status();
    const std::string name(MechanismName(*mech));
    const std::pair<const char*, std::pair<double, double>> rows[] = {
        {"err_l2", {r->err_l2, r->se_l2}},
        {"err_worst_expected", {r->err_worst_expected, r->se_worst_expected}},
        {"err_expected_worst", {r->err_expected_worst, r->se_expected_worst}},
        {"sigma", {r->sigma, 0.0}},
    };
    // Plot bars are +-0.25 standard deviations across replicates.
    const double to_sd = std::sqrt(static_cast<double>(r->replicates));
    absl::StrAppend(&plot, n);
    for (const auto& [metric, v] : rows) {
      absl::StrAppend(&out.body, n, ",", name, ",", metric, ",", Num(v.first),
                      ",", Num(v.second), "\n");
      if (std::string_view(metric) != "sigma") {
        absl::StrAppend(&plot, " ", Num(v.first), " ",
                        Num(0.25 * v.second * to_sd));
      }
    }
    absl::StrAppend(&plot, "\n");
    out.extra["reports"].push_back(
        {{"n", n},
         {"workload", std::string(WorkloadName(w.kind()))},
         {"replicates", r->replicates},
         {"queries_sampled", r->queries_sampled},
         {"total_queries", r->total_queries},
         {"sd_l2", r->se_l2 * to_sd},
         {"sd_worst_expected", r->se_worst_expected * to_sd},
         {"sd_expected_worst", r->se_expected_worst * to_sd}});
  }
  if (!f.gnuplot.empty()) {
    std::ofstream g(f.gnuplot, std::ios::binary);
    if (!(g << plot)) return IoError(absl::StrCat("cannot write ", f.gnuplot));
  }
  return out;
}

// ---- scaling ----

struct ScalingFlags {
  int min_k = 10;
  int max_k = 20;
  int repeats = 3;
};

absl::StatusOr<Output> RunScalingCmd(const ScalingFlags& f, std::uint64_t seed) {
  absl::StatusOr<ScalingResult> r = RunScaling(f.min_k, f.max_k, f.repeats, seed);
  if (!r.ok()) return r.status();
  Output out;
  out.body = "k,n,seconds\n";
  for (const ScalingPoint& p : r->points) {
    absl::StrAppend(&out.body, p.depth, ",", p.n, ",", Num(p.seconds), "\n");
  }
  out.extra["log_log_slope"] = r->log_log.slope;
  out.extra["log_log_r_squared"] = r->log_log.r_squared;
  std::cerr << "log-log slope " << r->log_log.slope << "\n";
  return out;
}

// ---- levels ----

struct LevelsFlags {
  std::string mechanism = "correlated";
  int depth = 10;
  double epsilon = 0.1;
  double delta = 1e-9;
  std::size_t replicates = 1000;
  unsigned threads = 0;
};

absl::StatusOr<Output> RunLevels(const LevelsFlags& f, std::uint64_t seed) {
  absl::StatusOr<PrivacyBudget> b = Budget(f.epsilon, f.delta);
  if (!b.ok()) return b.status();
  absl::StatusOr<MechanismKind> mech = ParseMechanism(f.mechanism);
  if (!mech.ok()) return mech.status();
  absl::StatusOr<std::vector<LevelVariance>> levels =
      VarianceByLevel(*mech, f.depth, *b, f.replicates, seed, f.threads);
  if (!levels.ok()) return levels.status();
  Output out;
  out.body = "level,mechanism,mean_variance,stderr\n";
  for (const LevelVariance& lv : *levels) {
    absl::StrAppend(&out.body, lv.level, ",", std::string(MechanismName(*mech)), ",",
                    Num(lv.mean_variance), ",", Num(lv.std_error), "\n");
  }
  return out;
}

// Every flag of the chosen subcommand, as given or defaulted.
Json CollectConfig(const CLI::App& sub, std::uint64_t seed) {
  Json config = Json::object();
  config["subcommand"] = sub.get_name();
  config["seed"] = seed;
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name(false, false);
    if (name == "--help" || name == "-h" || name == "--out") continue;
    std::string value;
    if (opt->count() > 0) {
      for (const std::string& r : opt->results()) {
        if (!value.empty()) value += ",";
        value += r;
      }
    } else {
      value = opt->get_default_str();
    }
    config[opt->get_lnames().empty() ? name : opt->get_lnames().front()] = value;
  }
  return config;
}

absl::Status WriteFile(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return IoError(absl::StrCat("cannot open ", path, " for writing"));
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) return IoError(absl::StrCat("write to ", path, " failed"));
  return absl::OkStatus();
}

}  // namespace
}  // namespace corrdp

int main(int argc, char** argv) {
  using namespace corrdp;
  CLI::App app{"corrdp: correlated Gaussian input perturbation toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = DefaultSeed();
  app.add_option("--seed", seed, "RNG seed (default: $CORRDP_SEED or 0)");
  std::string out_path;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path,
                    "data file; a .meta.json sidecar is written next to it");
  };

  CalibrateFlags cf;
  CLI::App* calibrate = app.add_subcommand("calibrate", "noise scale for a budget");
  calibrate->add_option("--n", cf.n, "data length")->capture_default_str();
  calibrate->add_option("--epsilon", cf.epsilon)->capture_default_str();
  calibrate->add_option("--delta", cf.delta)->capture_default_str();
  calibrate->add_option("--mode", cf.mode, "tree | iid | btree | general:<diag>")
      ->capture_default_str();
  add_out(calibrate);

  SampleFlags sf;
  CLI::App* sample = app.add_subcommand("sample", "one cascade noise tree");
  sample->add_option("--depth,-k", sf.depth)->capture_default_str();
  sample->add_option("--sigma", sf.sigma)->capture_default_str();
  sample->add_option("--format", sf.format, "csv | json | binary")
      ->capture_default_str();
  add_out(sample);

  PerturbFlags pf;
  CLI::App* perturb = app.add_subcommand("perturb", "privatize a data vector");
  perturb->add_option("--input", pf.input, "CSV, one value per line");
  perturb->add_option("--synthetic", pf.synthetic,
                      "generate this many uniform integers 1..1000");
  perturb->add_option("--mechanism", pf.mechanism, "correlated | iid | btree")
      ->capture_default_str();
  perturb->add_option("--epsilon", pf.epsilon)->capture_default_str();
  perturb->add_option("--delta", pf.delta)->capture_default_str();
  add_out(perturb);

  ErrorsFlags ef;
  CLI::App* errors = app.add_subcommand("errors", "Monte Carlo error metrics");
  errors->add_option("--mechanism", ef.mechanism, "correlated | iid | btree")
      ->capture_default_str();
  errors->add_option("--workload", ef.workload, "continuous | nodal | random")
      ->capture_default_str();
  errors->add_option("--n", ef.n, "data length(s)")
      ->delimiter(',')
      ->capture_default_str();
  errors->add_option("--epsilon", ef.epsilon)->capture_default_str();
  errors->add_option("--delta", ef.delta)->capture_default_str();
  errors->add_option("--replicates", ef.replicates)->capture_default_str();
  errors->add_option("--queries", ef.queries, "sampled queries per replicate")
      ->capture_default_str();
  errors->add_option("--random-rows", ef.random_rows)->capture_default_str();
  errors->add_flag("--exhaustive", ef.exhaustive, "evaluate every query");
  errors->add_option("--threads", ef.threads, "0 = all cores")
      ->capture_default_str();
  errors->add_option("--gnuplot", ef.gnuplot, "also write a gnuplot data file");
  add_out(errors);

  ScalingFlags scf;
  CLI::App* scaling = app.add_subcommand("scaling", "cascade sampling runtime");
  scaling->add_option("--min-k", scf.min_k)->capture_default_str();
  scaling->add_option("--max-k", scf.max_k)->capture_default_str();
  scaling->add_option("--repeats", scf.repeats)->capture_default_str();
  add_out(scaling);

  LevelsFlags lf;
  CLI::App* levels = app.add_subcommand("levels", "nodal error variance by level");
  levels->add_option("--mechanism", lf.mechanism)->capture_default_str();
  levels->add_option("--depth,-k", lf.depth)->capture_default_str();
  levels->add_option("--epsilon", lf.epsilon)->capture_default_str();
  levels->add_option("--delta", lf.delta)->capture_default_str();
  levels->add_option("--replicates", lf.replicates)->capture_default_str();
  levels->add_option("--threads", lf.threads)->capture_default_str();
  add_out(levels);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFlags;
  }

  CLI::App* chosen = app.get_subcommands().front();
  absl::StatusOr<Output> result;
  if (chosen == calibrate) result = RunCalibrate(cf);
  if (chosen == sample) result = RunSample(sf, seed);
  if (chosen == perturb) result = RunPerturb(pf, seed);
  if (chosen == errors) result = RunErrors(ef, seed);
  if (chosen == scaling) result = RunScalingCmd(scf, seed);
  if (chosen == levels) result = RunLevels(lf, seed);
  if (!result.ok()) {
    std::cerr << "corrdp " << chosen->get_name() << ": " << result.status().message()
              << "\n";
    return ExitCodeFor(result.status());
  }

  if (out_path.empty()) {
    std::cout.write(result->body.data(),
                    static_cast<std::streamsize>(result->body.size()));
    return std::cout ? 0 : kExitIo;
  }
  const Json config = CollectConfig(*chosen, seed);
  const std::string config_text = config.dump();
  Json meta;
  meta["tool"] = "corrdp";
  meta["version"] = std::string(kVersion);
  meta["seed"] = seed;
  meta["config"] = config;
  meta["config_hash"] = absl::StrFormat("%016x", Fnv1a(config_text));
  meta["data_file"] = out_path;
  for (auto& [k, v] : result->extra.items()) meta[k] = v;
  if (absl::Status s = WriteFile(out_path, result->body); !s.ok()) {
    std::cerr << "corrdp: " << s.message() << "\n";
    return kExitIo;
  }
  if (absl::Status s = WriteFile(out_path + ".meta.json", meta.dump(2) + "\n");
      !s.ok()) {
    std::cerr << "corrdp: " << s.message() << "\n";
    return kExitIo;
  }
  return 0;
}
