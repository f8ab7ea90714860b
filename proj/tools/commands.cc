//
// Copyright 2026 The ldpkit Authors
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

#include "commands.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldpkit/bounds.h"
#include "ldpkit/contraction.h"
#include "ldpkit/errors.h"
#include "ldpkit/grid.h"
#include "ldpkit/info.h"
#include "ldpkit/io.h"
#include "ldpkit/kernel.h"
#include "ldpkit/ldp.h"
#include "ldpkit/oracle.h"

namespace ldpkit::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20210119;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
// Reference values printed next to the two Bayes bounds.
constexpr double kReferenceMiBound = 0.03;
constexpr double kReferenceEgammaBound = 0.08;

std::string ResolveOutput(const std::string& path) {
  if (path.empty() || path == "-") return path;
  std::filesystem::path p(path);
  const char* dir = std::getenv(kOutputDirEnv);
  if (p.is_relative() && dir != nullptr && *dir != '\0') {
    std::filesystem::create_directories(dir);
    p = std::filesystem::path(dir) / p;
  }
  return p.string();
}

// "lo:hi:steps", optionally followed by ":log" or ":lin".
Grid ParseGridFlag(std::string text, bool log_by_default) {
  bool log_spaced = log_by_default;
  const auto ends_with = [&](const std::string& suffix) {
    return text.size() > suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(":log")) {
    log_spaced = true;
    text.resize(text.size() - 4);
  } else if (ends_with(":lin")) {
    log_spaced = false;
    text.resize(text.size() - 4);
  }
  Grid grid = Grid::Parse(text);
  grid.log_spaced = log_spaced;
  grid.Validate();
  return grid;
}

void CollectArgs(const CLI::App& app, std::map<std::string, std::string>& args) {
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0) continue;
    std::string joined;
    for (const std::string& r : opt->results()) {
      if (!joined.empty()) joined += ' ';
      joined += r;
    }
    args[opt->get_name()] = joined;
  }
  for (const CLI::App* sub : app.get_subcommands()) CollectArgs(*sub, args);
}

std::string CommandPath(const CLI::App& app) {
  std::string path;
  const CLI::App* current = &app;
  while (!current->get_subcommands().empty()) {
    current = current->get_subcommands().front();
    if (!path.empty()) path += ' ';
    path += current->get_name();
  }
  return path;
}

// Written after every other output of the command.
void WriteManifest(const CLI::App& root, std::uint64_t seed,
                   const std::vector<std::string>& outputs) {
  if (outputs.empty()) return;
  RunManifest manifest;
  manifest.command = CommandPath(root);
  CollectArgs(root, manifest.args);
  manifest.seed = seed;
  manifest.tool_version = kToolVersion;
  manifest.outputs = outputs;
  WriteFile(outputs.front() + ".manifest.json", manifest.ToJson().dump(2) + "\n");
}

// ----- audit -----

struct AuditOptions {
  std::string kernel_file;
  double epsilon = kNan;
  double delta = 0.0;
  std::string profile_grid;
  std::string profile_out = "-";
  std::uint64_t seed = kDefaultSeed;
  int trials = 1000;
};

int RunAudit(const AuditOptions& o, const CLI::App& root, std::ostream& out,
             std::ostream& err) {
  const Kernel k = LoadKernelFile(o.kernel_file);
  json report;
  report["kernel"] = o.kernel_file;
  report["input_size"] = k.input_size();
  report["output_size"] = k.output_size();
  report["delta"] = JsonNumber(o.delta);

  const TightestEpsilon tightest = TightestEpsilonFor(k, o.delta);
  report["tightest_epsilon"] = JsonNumber(tightest.epsilon);
  report["tightest_epsilon_saturated"] = tightest.saturated;

  bool certified = std::isfinite(tightest.epsilon) && !tightest.saturated;
  if (!std::isnan(o.epsilon)) {
    const PrivacyParams params(o.epsilon, o.delta);
    const ContractionReport contraction = EtaGammaTwoPoint(k, params.gamma());
    const EquivalenceReport equivalence = VerifyEquivalence(k, params, o.trials, o.seed);
    certified = equivalence.certified;
    report["epsilon"] = JsonNumber(o.epsilon);
    report["delta_tight"] = JsonNumber(contraction.eta_gamma);
    report["certified"] = certified;
    report["contraction"] = ToJson(contraction);
    report["equivalence"] = ToJson(equivalence);
    report["seed"] = o.seed;
    report["trials"] = o.trials;
  } else {
    report["certified"] = certified;
  }

  std::vector<std::string> outputs;
  bool report_to_stdout = true;
  if (!o.profile_grid.empty()) {
    const Grid grid = ParseGridFlag(o.profile_grid, false);
    const PrivacyProfile profile = ComputeProfile(
        k, grid, std::filesystem::path(o.kernel_file).filename().string());
    const std::string csv = ProfileToCsv(profile);
    if (o.profile_out == "-") {
      out << csv;
      report_to_stdout = false;
    } else {
      const std::string path = ResolveOutput(o.profile_out);
      WriteFile(path, csv);
      outputs.push_back(path);
      report["profile_out"] = path;
    }
  }
  (report_to_stdout ? out : err) << report.dump() << "\n";
  WriteManifest(root, o.seed, outputs);
  return certified ? kExitOk : kExitNotCertified;
}

// ----- figure1 -----

struct Figure1Options {
  int n = 20;
  double delta = 1e-4;
  std::string eps_grid = "0.01:3:60";
  int panels = 20000;
  std::string zeta_grid;
  std::string out = "figure1.csv";
};

int RunFigure1(const Figure1Options& o, const CLI::App& root, std::ostream& out) {
  const Grid eps_grid = ParseGridFlag(o.eps_grid, false);
  const BernoulliUniformModel model{o.n, o.panels};
  model.Validate();
  const double mi = BuMutualInformation(model);

  BayesConfig cfg;
  cfg.n = o.n;
  if (!o.zeta_grid.empty()) cfg.zeta_grid = ParseGridFlag(o.zeta_grid, true);

  CsvWriter csv({"epsilon", "bound_cor3", "bound_thm3"});
  for (double eps : eps_grid.Points()) {
    cfg.params = PrivacyParams(eps, o.delta);
    cfg.info_value = mi;
    const double cor3 = BayesXuRaginskyPrivate(cfg).value;
    cfg.info_value = BuIgamma(model, cfg.params.gamma());
    const double thm3 = BayesEgammaLb(cfg).value;
    csv.AddRow({eps, cor3, thm3});
  }

  if (o.out == "-") {
    out << csv.str();
    return kExitOk;
  }
  const std::string path = ResolveOutput(o.out);
  WriteFile(path, csv.str());
  out << json{{"out", path},
              {"rows", eps_grid.steps},
              {"n", o.n},
              {"delta", o.delta},
              {"panels", o.panels},
              {"mutual_information", JsonNumber(mi)}}
             .dump()
      << "\n";
  WriteManifest(root, 0, {path});
  return kExitOk;
}

// ----- bound -----

struct BoundOptions {
  double epsilon = 0.0;
  double delta = 0.0;
  int n = 1;
  double tau = 1.0;
  double kl = 0.0;
  double k_moment = 2.0;
  int v_count = 2;
  double avg_kl = 0.0;
  double mi_xv = kNan;
  int d = 1;
  double r = 1.0;
  double info = kNan;
  bool bu_model = false;
  int panels = 20000;
  double entropy = 0.0;
  std::string zeta_grid;
  std::string gamma_grid;
  std::vector<std::string> sweep;
  std::string out;
};

using Calculator = std::function<BoundReport(const PrivacyParams&)>;

BoundReport ScalarReport(const std::string& name, double value,
                         std::map<std::string, double> inputs) {
  BoundReport report;
  report.bound_name = name;
  report.value = value;
  report.inputs = std::move(inputs);
  return report;
}

BayesConfig BayesFrom(const BoundOptions& o, const PrivacyParams& params) {
  BayesConfig cfg;
  cfg.n = o.n;
  cfg.params = params;
  if (!o.zeta_grid.empty()) cfg.zeta_grid = ParseGridFlag(o.zeta_grid, true);
  if (!o.gamma_grid.empty()) cfg.gamma_grid = ParseGridFlag(o.gamma_grid, false);
  return cfg;
}

void RequireInfoSource(const BoundOptions& o) {
  if (std::isnan(o.info) == !o.bu_model) {
    throw DomainError("give exactly one of --info or --bu-model");
  }
}

// Builds the calculator for `which`, along with its witness column names.
Calculator MakeCalculator(const std::string& which, const BoundOptions& o,
                          std::vector<std::string>& witness_columns) {
  if (which == "lecam") {
    return [o](const PrivacyParams& p) {
      return LeCamPrivate(LeCamConfig{o.tau, o.kl, o.n, p});
    };
  }
  if (which == "moment") {
    witness_columns = {"omega"};
    return [o](const PrivacyParams& p) { return MomentEstimationLb(o.k_moment, o.n, p); };
  }
  if (which == "fano") {
    return [o](const PrivacyParams& p) {
      FanoConfig cfg;
      cfg.v_count = o.v_count;
      cfg.avg_pairwise_kl = o.avg_kl;
      cfg.tau = o.tau;
      cfg.n = o.n;
      cfg.params = p;
      if (!std::isnan(o.mi_xv)) cfg.mi_xv = o.mi_xv;
      return FanoLb(cfg);
    };
  }
  if (which == "highdim") {
    witness_columns = {"omega", "k"};
    return [o](const PrivacyParams& p) { return HighDimMeanLb(o.d, o.r, o.n, p); };
  }
  if (which == "bayes-mi") {
    RequireInfoSource(o);
    witness_columns = {"zeta"};
    const double mi =
        o.bu_model ? BuMutualInformation(BernoulliUniformModel{o.n, o.panels}) : o.info;
    return [o, mi](const PrivacyParams& p) {
      BayesConfig cfg = BayesFrom(o, p);
      cfg.info_value = mi;
      return BayesXuRaginskyPrivate(cfg);
    };
  }
  if (which == "bayes-egamma") {
    RequireInfoSource(o);
    witness_columns = {"zeta"};
    return [o](const PrivacyParams& p) {
      BayesConfig cfg = BayesFrom(o, p);
      cfg.info_value = o.bu_model
                           ? BuIgamma(BernoulliUniformModel{o.n, o.panels}, p.gamma())
                           : o.info;
      return BayesEgammaLb(cfg);
    };
  }
  if (which == "bayes-gammaopt") {
    witness_columns = {"zeta", "gamma"};
    return [o](const PrivacyParams& p) {
      const BernoulliUniformModel model{o.n, o.panels};
      model.Validate();
      IgammaFunction igamma = [model](double g) { return BuIgamma(model, g); };
      if (o.n == 1) igamma = BuIgammaClosedN1;
      BoundReport report = BayesGammaOptLb(BayesFrom(o, p), igamma);
      report.inputs["n"] = o.n;
      return report;
    };
  }
  if (which == "ht") {
    return [o](const PrivacyParams& p) {
      return ScalarReport("ht_exponent", HtExponent(o.kl, p),
                          {{"kl", o.kl}, {"epsilon", p.epsilon()}, {"delta", p.delta()}});
    };
  }
  if (which == "micap") {
    return [o](const PrivacyParams& p) {
      return ScalarReport("mi_cap", MiCap(o.entropy, p),
                          {{"entropy", o.entropy}, {"epsilon", p.epsilon()},
                           {"delta", p.delta()}});
    };
  }
  throw DomainError("unknown bound '" + which + "'");
}

int RunBound(const std::string& which, const BoundOptions& o, const CLI::App& root,
             std::ostream& out) {
  std::vector<std::string> witness_columns;
  const Calculator calculator = MakeCalculator(which, o, witness_columns);
  std::string text;
  if (o.sweep.empty()) {
    text = ToJson(calculator(PrivacyParams(o.epsilon, o.delta))).dump() + "\n";
  } else {
    if (o.sweep.size() != 2 || o.sweep[0] != "epsilon") {
      throw DomainError("--sweep expects: epsilon lo:hi:steps");
    }
    const Grid grid = ParseGridFlag(o.sweep[1], false);
    std::vector<std::string> header = {"epsilon", "value"};
    header.insert(header.end(), witness_columns.begin(), witness_columns.end());
    CsvWriter csv(header);
    for (double eps : grid.Points()) {
      const BoundReport report = calculator(PrivacyParams(eps, o.delta));
      std::vector<double> row = {eps, report.value};
      for (const std::string& column : witness_columns) {
        const auto it = report.witness.find(column);
        row.push_back(it == report.witness.end() ? kNan : it->second);
      }
      csv.AddRow(row);
    }
    text = csv.str();
  }
  if (o.out.empty() || o.out == "-") {
    out << text;
    return kExitOk;
  }
  const std::string path = ResolveOutput(o.out);
  WriteFile(path, text);
  out << json{{"out", path}}.dump() << "\n";
  WriteManifest(root, 0, {path});
  return kExitOk;
}

// ----- remark -----

struct RemarkOptions {
  std::string zeta_grid;
  std::string gamma_grid;
  bool as_json = false;
};

std::string Fixed(double value) {
  if (std::isnan(value)) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

int RunRemark(const RemarkOptions& o, std::ostream& out) {
  BayesConfig cfg;
  if (!o.zeta_grid.empty()) cfg.zeta_grid = ParseGridFlag(o.zeta_grid, true);
  if (!o.gamma_grid.empty()) cfg.gamma_grid = ParseGridFlag(o.gamma_grid, false);
  const double mi = std::log(2.0) - 0.5;
  const BoundReport mi_bound =
      BayesXuRaginsky(UniformAbsoluteLossSmallBall, mi, cfg.zeta_grid);
  const BoundReport egamma_bound = BayesGammaOptLb(cfg, BuIgammaClosedN1);
  const bool ordered = egamma_bound.value > mi_bound.value;

  if (o.as_json) {
    json j;
    j["mutual_information"] = JsonNumber(mi);
    j["mi_bound"] = ToJson(mi_bound);
    j["mi_bound"]["reference"] = kReferenceMiBound;
    j["egamma_bound"] = ToJson(egamma_bound);
    j["egamma_bound"]["reference"] = kReferenceEgammaBound;
    j["egamma_exceeds_mi"] = ordered;
    out << j.dump() << "\n";
    return kExitOk;
  }
  const auto witness = [](const BoundReport& r, const char* key) {
    const auto it = r.witness.find(key);
    return it == r.witness.end() ? kNan : it->second;
  };
  out << "Bernoulli-uniform prior, n = 1, L(zeta) = min(2 zeta, 1), I = ln 2 - 1/2 = "
      << Fixed(mi) << " nats\n";
  out << std::left << std::setw(26) << "bound" << std::setw(12) << "value"
      << std::setw(12) << "zeta*" << std::setw(12) << "gamma*"
      << "reference\n";
  out << std::setw(26) << "mutual-information" << std::setw(12) << Fixed(mi_bound.value)
      << std::setw(12) << Fixed(witness(mi_bound, "zeta")) << std::setw(12) << "-"
      << Fixed(kReferenceMiBound) << "\n";
  out << std::setw(26) << "E_gamma (gamma optimized)" << std::setw(12)
      << Fixed(egamma_bound.value) << std::setw(12) << Fixed(witness(egamma_bound, "zeta"))
      << std::setw(12) << Fixed(witness(egamma_bound, "gamma"))
      << Fixed(kReferenceEgammaBound) << "\n";
  out << "E_gamma bound exceeds mutual-information bound: " << (ordered ? "yes" : "no")
      << "\n";
  return kExitOk;
}

// ----- oracle -----

struct OracleOptions {
  std::string kernel_file;
  std::string f = "tv";
  double gamma = 1.0;
  double epsilon = 0.0;
  std::uint64_t seed = kDefaultSeed;
  int trials = 1000;
  bool no_point_masses = false;
  double alpha = 1.0;
};

FGenerator GeneratorByName(const std::string& name, double gamma) {
  if (name == "tv") return FGenerator::TotalVariation();
  if (name == "kl") return FGenerator::KL();
  if (name == "chi2") return FGenerator::ChiSquared();
  if (name == "hellinger2") return FGenerator::HellingerSquared();
  if (name == "egamma") return FGenerator::Egamma(gamma);
  throw DomainError("--f must be one of tv, kl, chi2, hellinger2, egamma");
}

int RunOracleEtaF(const OracleOptions& o, std::ostream& out) {
  const Kernel k = LoadKernelFile(o.kernel_file);
  const FGenerator f = GeneratorByName(o.f, o.gamma);
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.include_point_masses = !o.no_point_masses;
  cfg.dirichlet_alpha = o.alpha;
  json j = ToJson(BruteEtaF(k, f, cfg));
  j["f"] = f.name();
  j["seed"] = o.seed;
  j["trials"] = o.trials;
  if (f.kind == FGenerator::Kind::kTotalVariation) {
    j["two_point"] = JsonNumber(EtaTvDobrushin(k));
  } else if (f.kind == FGenerator::Kind::kEgamma && f.gamma >= 1.0) {
    j["two_point"] = JsonNumber(EtaGammaTwoPoint(k, f.gamma).eta_gamma);
  }
  out << j.dump() << "\n";
  return kExitOk;
}

int RunOracleProfile(const OracleOptions& o, std::ostream& out) {
  const Kernel k = LoadKernelFile(o.kernel_file);
  json j = ToJson(BruteProfileCheck(k, o.epsilon));
  j["epsilon"] = JsonNumber(o.epsilon);
  j["delta_at"] = JsonNumber(DeltaAt(k, o.epsilon));
  out << j.dump() << "\n";
  return kExitOk;
}

void AddPrivacyFlags(CLI::App* app, double& epsilon, double& delta) {
  app->add_option("--eps,--epsilon", epsilon, "privacy parameter epsilon >= 0")
      ->capture_default_str();
  app->add_option("--delta", delta, "privacy parameter delta in [0,1]")
      ->capture_default_str();
}

}  // namespace

int Run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ldpkit: divergences, contraction coefficients, LDP audits and lower bounds"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  AuditOptions audit;
  CLI::App* audit_cmd = app.add_subcommand("audit", "exact (epsilon, delta)-LDP audit");
  audit_cmd->add_option("kernel_file", audit.kernel_file, "kernel as JSON or CSV")
      ->required();
  audit_cmd->add_option("--eps,--epsilon", audit.epsilon, "epsilon to certify");
  audit_cmd->add_option("--delta", audit.delta, "delta to certify")->capture_default_str();
  audit_cmd->add_option("--profile-grid", audit.profile_grid,
                        "epsilon grid lo:hi:steps for the privacy profile");
  audit_cmd->add_option("--profile-out", audit.profile_out,
                        "profile CSV path; '-' prints it instead of the report")
      ->capture_default_str();
  audit_cmd->add_option("--seed", audit.seed)->capture_default_str();
  audit_cmd->add_option("--trials", audit.trials, "random pairs for the equivalence check")
      ->capture_default_str();

  Figure1Options figure1;
  CLI::App* figure1_cmd =
      app.add_subcommand("figure1", "Bayes bound curves for the Bernoulli-uniform model");
  figure1_cmd->add_option("--n", figure1.n)->capture_default_str();
  figure1_cmd->add_option("--delta", figure1.delta)->capture_default_str();
  figure1_cmd->add_option("--eps-grid", figure1.eps_grid)->capture_default_str();
  figure1_cmd->add_option("--panels", figure1.panels)->capture_default_str();
  figure1_cmd->add_option("--zeta-grid", figure1.zeta_grid, "lo:hi:steps[:log|:lin]");
  figure1_cmd->add_option("--out", figure1.out, "CSV path, '-' for stdout")
      ->capture_default_str();

  BoundOptions bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "lower/upper bound calculators");
  bound_cmd->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> calculators = {
      {"lecam", "two-point minimax lower bound"},
      {"moment", "k-th moment mean estimation, explicit constant"},
      {"fano", "Fano minimax lower bound"},
      {"highdim", "l2-ball mean estimation in R^d, explicit constant"},
      {"bayes-mi", "Bayes risk via mutual information"},
      {"bayes-egamma", "Bayes risk via E_gamma information"},
      {"bayes-gammaopt", "Bayes risk optimized over gamma"},
      {"ht", "type-II error exponent"},
      {"micap", "mutual information cap"},
  };
  for (const auto& [name, help] : calculators) {
    CLI::App* sub = bound_cmd->add_subcommand(name, help);
    AddPrivacyFlags(sub, bound.epsilon, bound.delta);
    sub->add_option("--n", bound.n, "sample size")->capture_default_str();
    sub->add_option("--sweep", bound.sweep, "epsilon lo:hi:steps")->expected(2);
    sub->add_option("--out", bound.out, "write the report or sweep CSV here");
    if (name == "lecam" || name == "fano") sub->add_option("--tau", bound.tau);
    if (name == "lecam" || name == "ht") sub->add_option("--kl", bound.kl, "D_KL(P0||P1)");
    if (name == "moment") sub->add_option("--k", bound.k_moment, "moment order > 1");
    if (name == "fano") {
      sub->add_option("--v-count", bound.v_count, "packing size");
      sub->add_option("--avg-kl", bound.avg_kl, "average pairwise KL");
      sub->add_option("--mi-xv", bound.mi_xv, "I(X^n; V) when known");
    }
    if (name == "highdim") {
      sub->add_option("--d", bound.d, "dimension");
      sub->add_option("--r", bound.r, "radius");
    }
    if (name.rfind("bayes", 0) == 0) {
      if (name != "bayes-gammaopt") {
        sub->add_option("--info", bound.info, "information value in nats");
        sub->add_flag("--bu-model", bound.bu_model,
                      "compute the information from the Bernoulli-uniform model");
      }
      sub->add_option("--panels", bound.panels)->capture_default_str();
      sub->add_option("--zeta-grid", bound.zeta_grid, "lo:hi:steps[:log|:lin]");
      if (name == "bayes-gammaopt") sub->add_option("--gamma-grid", bound.gamma_grid);
    }
    if (name == "micap") sub->add_option("--entropy", bound.entropy, "H(X) in nats");
  }

  RemarkOptions remark;
  CLI::App* remark_cmd =
      app.add_subcommand("remark", "E_gamma versus mutual-information Bayes bound, n = 1");
  remark_cmd->add_option("--zeta-grid", remark.zeta_grid);
  remark_cmd->add_option("--gamma-grid", remark.gamma_grid);
  remark_cmd->add_flag("--json", remark.as_json);

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference checks");
  oracle_cmd->require_subcommand(1);
  CLI::App* eta_cmd = oracle_cmd->add_subcommand("eta-f", "sampled lower estimate of eta_f");
  eta_cmd->add_option("kernel_file", oracle.kernel_file)->required();
  eta_cmd->add_option("--f", oracle.f, "tv, kl, chi2, hellinger2 or egamma")
      ->capture_default_str();
  eta_cmd->add_option("--gamma", oracle.gamma)->capture_default_str();
  eta_cmd->add_option("--seed", oracle.seed)->capture_default_str();
  eta_cmd->add_option("--trials", oracle.trials)->capture_default_str();
  eta_cmd->add_option("--alpha", oracle.alpha, "Dirichlet concentration")
      ->capture_default_str();
  eta_cmd->add_flag("--no-point-masses", oracle.no_point_masses);
  CLI::App* profile_cmd =
      oracle_cmd->add_subcommand("profile", "exhaustive set supremum at one epsilon");
  profile_cmd->add_option("kernel_file", oracle.kernel_file)->required();
  profile_cmd->add_option("--eps,--epsilon", oracle.epsilon)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (audit_cmd->parsed()) return RunAudit(audit, app, out, err);
    if (figure1_cmd->parsed()) return RunFigure1(figure1, app, out);
    if (bound_cmd->parsed()) {
      return RunBound(bound_cmd->get_subcommands().front()->get_name(), bound, app, out);
    }
    if (remark_cmd->parsed()) return RunRemark(remark, out);
    if (eta_cmd->parsed()) return RunOracleEtaF(oracle, out);
    if (profile_cmd->parsed()) return RunOracleProfile(oracle, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace ldpkit::cli
