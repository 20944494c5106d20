// Copyright 2026 The mtadequacy Authors
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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "mtadequacy/adequacy.hpp"
#include "mtadequacy/error.hpp"
#include "mtadequacy/execution.hpp"
#include "mtadequacy/generation.hpp"
#include "mtadequacy/metrics.hpp"
#include "mtadequacy/rational.hpp"
#include "project.hpp"

namespace mta::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string config = "project.json";
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
};

struct MeasureOptions {
  std::optional<int> k;
  std::optional<std::string> distinctness;
  std::optional<std::string> min_adequacy;
};

struct GenerateOptions {
  std::string mode;
  std::optional<int> k;
  std::optional<std::string> level;
  int replicas = 1;
  std::optional<std::int64_t> max_iterations;
};

struct RunOptions {
  std::optional<std::string> mutant;
  std::optional<std::int64_t> timeout_ms;
};

struct EvaluateOptions {
  std::vector<std::string> suites;
  bool crash_counts = false;
  std::optional<std::int64_t> timeout_ms;
};

struct ReportOptions {
  std::optional<std::string> verdicts;
  bool csv = false;
};

// Shared state of one invocation.
struct Context {
  GlobalOptions global;
  std::ostream& out;
  std::ostream& err;

  int Fail(const absl::Status& status) const {
    err << "error: " << status.message() << "\n";
    return ExitCodeFor(status);
  }
};

fs::path OutputDir(const Context& ctx, const ProjectConfig& project) {
  return ctx.global.out.empty() ? project.output_dir : fs::path(ctx.global.out);
}

std::string DegreeLine(const AdequacyReport& report) {
  return absl::StrCat(report.DegreeFraction(), " (", ToDecimal(report.degree), ")");
}

absl::Status CheckInputsCovered(const TestSuite& suite, const CoverageMap& coverage) {
  const auto& ids = coverage.input_ids();
  for (const auto& input : suite.inputs()) {
    if (std::find(ids.begin(), ids.end(), input.id) == ids.end()) {
      return MakeError(ErrorKind::kUnknownInputId,
                       absl::StrCat("input ", input.id, " has no coverage data"));
    }
  }
  return absl::OkStatus();
}

// Coverage over the generation pool plus any suite inputs outside it.
absl::StatusOr<CoverageMap> ProjectCoverage(const ProjectConfig& project,
                                            const TestSuite* suite) {
  auto pool = LoadPool(project);
  if (!pool.ok()) return pool.status();
  std::vector<TestInput> inputs = pool->inputs;
  if (suite != nullptr) {
    for (const auto& input : suite->inputs()) {
      const bool known = std::any_of(inputs.begin(), inputs.end(),
                                     [&](const TestInput& t) { return t.id == input.id; });
      if (!known) inputs.push_back(input);
    }
  }
  return LoadCoverage(project, inputs);
}

absl::StatusOr<AdequacyConfig> EffectiveConfig(const ProjectConfig& project,
                                               std::optional<int> k,
                                               const std::optional<std::string>& mode) {
  AdequacyConfig cfg = project.adequacy;
  if (k) cfg.k = *k;
  if (mode) {
    auto parsed = ParseDistinctness(*mode);
    if (!parsed.ok()) return parsed.status();
    cfg.distinctness = *parsed;
  }
  if (cfg.k < 1) return MakeError(ErrorKind::kInvalidDefinition, "k must be >= 1");
  return cfg;
}

void ApplyTimeout(SutAdapter& sut, std::optional<std::int64_t> timeout_ms) {
  if (timeout_ms) sut.timeout = std::chrono::milliseconds(*timeout_ms);
}

absl::Status WriteVerdictLog(const fs::path& path, std::span<const MgVerdict> verdicts) {
  std::string text;
  for (const auto& v : verdicts) text += VerdictToJsonLine(v);
  return WriteTextFile(path.string(), text);
}

bool AnyLaunchFailure(std::span<const MgVerdict> verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const MgVerdict& v) { return v.launch_failure; });
}

// Decile level holding `degree`; zero has a level of its own.
std::string LevelLabel(const Rational& degree) {
  if (degree == Rational(0)) return "0";
  const std::int64_t tenths = (degree.numerator() * 10 + degree.denominator() - 1) /
                              degree.denominator();
  return absl::StrFormat("(%.1f, %.1f]", (tenths - 1) / 10.0, tenths / 10.0);
}

int Measure(const Context& ctx, const MeasureOptions& opts) {
  auto project = LoadProject(ctx.global.config);
  if (!project.ok()) return ctx.Fail(project.status());
  auto suite = LoadSuite(project->suite_path);
  if (!suite.ok()) return ctx.Fail(suite.status());
  auto coverage = ProjectCoverage(*project, &*suite);
  if (!coverage.ok()) return ctx.Fail(coverage.status());
  auto cfg = EffectiveConfig(*project, opts.k, opts.distinctness);
  if (!cfg.ok()) return ctx.Fail(cfg.status());
  cfg->output_classes = OutputClassesOf(suite->mrs());
  std::optional<Rational> gate;
  if (opts.min_adequacy) {
    auto parsed = ParseRational(*opts.min_adequacy);
    if (!parsed.ok()) return ctx.Fail(parsed.status());
    gate = *parsed;
  }

  auto report = MeasureAdequacy(*coverage, suite->Association(), *cfg);
  if (!report.ok()) return ctx.Fail(report.status());
  const fs::path dir = OutputDir(ctx, *project);
  if (auto s = WriteTextFile((dir / "report.txt").string(), FormatReportText(*report));
      !s.ok()) {
    return ctx.Fail(s);
  }
  if (auto s = WriteTextFile((dir / "report.csv").string(), FormatReportCsv(*report));
      !s.ok()) {
    return ctx.Fail(s);
  }
  ctx.out << "degree: " << DegreeLine(*report) << "\n"
          << "k: " << report->k << "  distinctness: "
          << DistinctnessName(report->distinctness)
          << "  requirements: " << report->num_requirements() << "\n";
  if (!report->infeasible.empty()) {
    ctx.out << "infeasible: " << absl::StrJoin(report->infeasible, ",") << "\n";
  }
  ctx.out << "report: " << (dir / "report.txt").string() << "\n";
  if (gate && report->degree < *gate) {
    ctx.err << "adequacy " << report->DegreeFraction() << " is below the gate "
            << ToString(*gate) << "\n";
    return kExitBelowGate;
  }
  return kExitOk;
}

int Generate(const Context& ctx, const GenerateOptions& opts) {
  auto project = LoadProject(ctx.global.config);
  if (!project.ok()) return ctx.Fail(project.status());
  auto pool = LoadPool(*project);
  if (!pool.ok()) return ctx.Fail(pool.status());
  auto coverage = LoadCoverage(*project, pool->inputs);
  if (!coverage.ok()) return ctx.Fail(coverage.status());
  auto cfg = EffectiveConfig(*project, opts.k, std::nullopt);
  if (!cfg.ok()) return ctx.Fail(cfg.status());

  std::string mode = opts.mode;
  if (mode.empty()) mode = opts.level ? "level" : "satisfy";
  std::optional<AdequacyLevel> level;
  if (mode == "level") {
    if (!opts.level) {
      return ctx.Fail(MakeError(ErrorKind::kInvalidDefinition, "--mode level needs --level"));
    }
    auto parsed = ParseLevel(*opts.level);
    if (!parsed.ok()) return ctx.Fail(parsed.status());
    level = *parsed;
  } else if (mode != "satisfy") {
    return ctx.Fail(
        MakeError(ErrorKind::kInvalidDefinition, absl::StrCat("unknown mode '", mode, "'")));
  }
  if (opts.replicas < 1) {
    return ctx.Fail(MakeError(ErrorKind::kInvalidDefinition, "--replicas must be >= 1"));
  }

  const fs::path dir = OutputDir(ctx, *project);
  std::string summary = "file,seed,degree,mgs,used_search\n";
  for (int i = 0; i < opts.replicas; ++i) {
    GenerationBudget budget;
    budget.seed = ctx.global.seed + static_cast<std::uint64_t>(i);
    budget.max_iterations = opts.max_iterations.value_or(project->max_iterations);
    budget.pool = pool->inputs;
    budget.mr_pool = pool->mrs;
    auto result = level ? GenerateSuiteInLevel(*coverage, *cfg, *level, budget)
                        : GenerateSatisfyingSuite(*coverage, *cfg, budget);
    if (!result.ok()) return ctx.Fail(result.status());
    const std::string name =
        opts.replicas == 1 ? "suite.json" : absl::StrFormat("suite-%03d.json", i);
    if (auto s = WriteTextFile((dir / name).string(), SerializeSuite(result->suite));
        !s.ok()) {
      return ctx.Fail(s);
    }
    absl::StrAppend(&summary, name, ",", budget.seed, ",", result->report.DegreeFraction(),
                    ",", result->suite.mgs().size(), ",",
                    result->used_search ? "true" : "false", "\n");
    ctx.out << (dir / name).string() << ": degree " << DegreeLine(result->report) << ", "
            << result->suite.mgs().size() << " MGs\n";
  }
  if (auto s = WriteTextFile((dir / "generation.csv").string(), summary); !s.ok()) {
    return ctx.Fail(s);
  }
  return kExitOk;
}

int Run(const Context& ctx, const RunOptions& opts) {
  auto project = LoadProject(ctx.global.config);
  if (!project.ok()) return ctx.Fail(project.status());
  auto suite = LoadSuite(project->suite_path);
  if (!suite.ok()) return ctx.Fail(suite.status());

  SutAdapter sut;
  std::string log_name = "verdicts.jsonl";
  if (opts.mutant) {
    auto mutants = LoadMutants(*project);
    if (!mutants.ok()) return ctx.Fail(mutants.status());
    auto it = std::find_if(mutants->mutants.begin(), mutants->mutants.end(),
                           [&](const Mutant& m) { return m.id == *opts.mutant; });
    if (it == mutants->mutants.end()) {
      return ctx.Fail(MakeError(ErrorKind::kInvalidDefinition,
                                absl::StrCat("no mutant named ", *opts.mutant)));
    }
    sut = it->sut;
    log_name = absl::StrCat("verdicts-", *opts.mutant, ".jsonl");
  } else {
    auto loaded = LoadSut(*project);
    if (!loaded.ok()) return ctx.Fail(loaded.status());
    sut = *std::move(loaded);
  }
  ApplyTimeout(sut, opts.timeout_ms);

  const auto verdicts = RunSuite(*suite, sut, ctx.global.workers);
  const fs::path log = OutputDir(ctx, *project) / log_name;
  if (auto s = WriteVerdictLog(log, verdicts); !s.ok()) return ctx.Fail(s);

  std::map<VerdictStatus, int> counts;
  for (const auto& v : verdicts) ++counts[v.status];
  ctx.out << verdicts.size() << " MGs: " << counts[VerdictStatus::kSatisfied]
          << " satisfied, " << counts[VerdictStatus::kViolated] << " violated, "
          << counts[VerdictStatus::kExecutionError] << " execution-error\n"
          << "log: " << log.string() << "\n";
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::kViolated) ctx.out << "violated: " << v.mg_id << "\n";
  }
  if (AnyLaunchFailure(verdicts)) {
    ctx.err << "error: SUT " << sut.id << " could not be launched\n";
    return kExitExecution;
  }
  return kExitOk;
}

absl::StatusOr<std::vector<fs::path>> ExpandSuitePaths(const std::vector<std::string>& args) {
  std::vector<fs::path> paths;
  for (const auto& arg : args) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.path().extension() == ".json") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      paths.push_back(p);
    } else {
      return MakeError(ErrorKind::kInvalidDefinition, absl::StrCat("no such suite: ", arg));
    }
  }
  return paths;
}

int Evaluate(const Context& ctx, const EvaluateOptions& opts) {
  auto project = LoadProject(ctx.global.config);
  if (!project.ok()) return ctx.Fail(project.status());
  auto mutants = LoadMutants(*project);
  if (!mutants.ok()) return ctx.Fail(mutants.status());
  if (mutants->mutants.empty()) {
    return ctx.Fail(MakeError(ErrorKind::kEmptyMutantSet, "the mutant manifest is empty"));
  }
  ApplyTimeout(mutants->original, opts.timeout_ms);
  for (auto& m : mutants->mutants) ApplyTimeout(m.sut, opts.timeout_ms);

  std::vector<fs::path> paths{project->suite_path};
  if (!opts.suites.empty()) {
    auto expanded = ExpandSuitePaths(opts.suites);
    if (!expanded.ok()) return ctx.Fail(expanded.status());
    paths = *std::move(expanded);
  }
  std::optional<CoverageMap> coverage;
  if (!project->coverage.is_null()) {
    auto loaded = ProjectCoverage(*project, nullptr);
    if (!loaded.ok()) return ctx.Fail(loaded.status());
    coverage = *std::move(loaded);
  }
  const DetectionOptions detection{opts.crash_counts};
  const fs::path dir = OutputDir(ctx, *project);

  VerdictStore store;
  std::vector<std::string> suite_ids;
  std::map<std::string, std::string> level_of;
  std::string fde_csv = "suite,degree,level,mutants,detected,fde\n";
  bool launch_failure = false;
  for (const auto& path : paths) {
    const std::string id = path.stem().string();
    if (level_of.contains(id)) {
      return ctx.Fail(MakeError(ErrorKind::kInvalidDefinition,
                                absl::StrCat("two suites named ", id)));
    }
    auto suite = LoadSuite(path);
    if (!suite.ok()) return ctx.Fail(suite.status());
    std::string degree = "-";
    std::string level = "all";
    if (coverage) {
      if (auto s = CheckInputsCovered(*suite, *coverage); !s.ok()) return ctx.Fail(s);
      AdequacyConfig cfg = project->adequacy;
      cfg.output_classes = OutputClassesOf(suite->mrs());
      auto report = MeasureAdequacy(*coverage, suite->Association(), cfg);
      if (!report.ok()) return ctx.Fail(report.status());
      degree = report->DegreeFraction();
      level = LevelLabel(report->degree);
    }
    auto result = Fde(*suite, *mutants, detection, ctx.global.workers, &store, id);
    if (!result.ok()) return ctx.Fail(result.status());
    std::int64_t detected = 0;
    for (const auto& [mutant_id, verdicts] : result->verdicts) {
      if (Detects(verdicts, detection)) ++detected;
      launch_failure |= AnyLaunchFailure(verdicts);
      if (auto s = WriteVerdictLog(dir / "verdicts" / id / (mutant_id + ".jsonl"), verdicts);
          !s.ok()) {
        return ctx.Fail(s);
      }
    }
    absl::StrAppend(&fde_csv, id, ",", degree, ",", level, ",", mutants->mutants.size(), ",",
                    detected, ",", ToString(result->fde), "\n");
    ctx.out << "suite " << id << ": degree " << degree << ", FDE " << ToString(result->fde)
            << " (" << detected << "/" << mutants->mutants.size() << ")\n";
    suite_ids.push_back(id);
    level_of[id] = level;
  }

  // FDR per mutant, over all suites and within each level.
  std::map<std::string, std::vector<std::string>> by_level;
  for (const auto& id : suite_ids) by_level[level_of[id]].push_back(id);
  std::string fdr_csv = "mutant,level,suites,detecting,fdr\n";
  for (const auto& mutant : mutants->mutants) {
    std::vector<std::pair<std::string, std::vector<std::string>>> groups{{"all", suite_ids}};
    if (by_level.size() > 1 || !by_level.contains("all")) {
      for (const auto& [label, ids] : by_level) groups.emplace_back(label, ids);
    }
    for (const auto& [label, ids] : groups) {
      auto fdr = Fdr(mutant.id, ids, store, detection);
      if (!fdr.ok()) return ctx.Fail(fdr.status());
      const auto detecting = static_cast<std::int64_t>(std::count_if(
          ids.begin(), ids.end(),
          [&](const std::string& s) { return store.Detected(s, mutant.id, detection); }));
      absl::StrAppend(&fdr_csv, mutant.id, ",", label, ",", ids.size(), ",", detecting, ",",
                      ToString(*fdr), "\n");
      if (label == "all") {
        ctx.out << "mutant " << mutant.id << ": FDR " << ToString(*fdr) << " (" << detecting
                << "/" << ids.size() << ")\n";
      }
    }
  }
  if (auto s = WriteTextFile((dir / "fde.csv").string(), fde_csv); !s.ok()) return ctx.Fail(s);
  if (auto s = WriteTextFile((dir / "fdr.csv").string(), fdr_csv); !s.ok()) return ctx.Fail(s);
  if (launch_failure) {
    ctx.err << "error: a mutant SUT could not be launched\n";
    return kExitExecution;
  }
  return kExitOk;
}

int Report(const Context& ctx, const ReportOptions& opts) {
  auto project = LoadProject(ctx.global.config);
  if (!project.ok()) return ctx.Fail(project.status());
  if (!project->coverage.is_null()) {
    auto suite = LoadSuite(project->suite_path);
    if (!suite.ok()) return ctx.Fail(suite.status());
    auto coverage = ProjectCoverage(*project, &*suite);
    if (!coverage.ok()) return ctx.Fail(coverage.status());
    AdequacyConfig cfg = project->adequacy;
    cfg.output_classes = OutputClassesOf(suite->mrs());
    auto report = MeasureAdequacy(*coverage, suite->Association(), cfg);
    if (!report.ok()) return ctx.Fail(report.status());
    ctx.out << (opts.csv ? FormatReportCsv(*report) : FormatReportText(*report));
  }
  if (opts.verdicts) {
    auto text = ReadTextFile(*opts.verdicts);
    if (!text.ok()) return ctx.Fail(text.status());
    auto verdicts = ParseVerdictLog(*text);
    if (!verdicts.ok()) return ctx.Fail(verdicts.status());
    std::map<std::string, std::map<VerdictStatus, int>> per_mr;
    for (const auto& v : *verdicts) ++per_mr[v.mr_id][v.status];
    ctx.out << "mr,satisfied,violated,execution-error\n";
    for (auto& [mr, counts] : per_mr) {
      ctx.out << mr << "," << counts[VerdictStatus::kSatisfied] << ","
              << counts[VerdictStatus::kViolated] << ","
              << counts[VerdictStatus::kExecutionError] << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  switch (GetErrorKind(status).value_or(ErrorKind::kInvalidDefinition)) {
    case ErrorKind::kInfeasible:
    case ErrorKind::kOvershoot:
    case ErrorKind::kUnachievable:
      return kExitGeneration;
    case ErrorKind::kLaunchFailure:
      return kExitExecution;
    default:
      return kExitConfig;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metamorphic test suite adequacy under the k-MR coverage criterion", "mta"};
  app.require_subcommand(1);
  Context ctx{GlobalOptions{}, out, err};
  app.add_option("--config", ctx.global.config, "Project file")->capture_default_str();
  app.add_option("--seed", ctx.global.seed, "Base seed for generation");
  app.add_option("--workers", ctx.global.workers, "Parallel MG executions")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", ctx.global.out, "Output directory (overrides the project)");

  MeasureOptions measure;
  auto* measure_cmd = app.add_subcommand("measure", "Measure the adequacy of the project suite");
  measure_cmd->add_option("--k", measure.k, "Distinct MRs required per requirement");
  measure_cmd->add_option("--distinctness", measure.distinctness, "by-id or by-output-class");
  measure_cmd->add_option("--min-adequacy", measure.min_adequacy,
                          "Exit 5 when the degree is below this value");

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Generate suites from the pool");
  generate_cmd->add_option("--mode", generate.mode, "satisfy or level");
  generate_cmd->add_option("--k", generate.k, "Distinct MRs required per requirement");
  generate_cmd->add_option("--level", generate.level, "Target interval \"lo,hi\"");
  generate_cmd->add_option("--replicas", generate.replicas, "Suites to generate");
  generate_cmd->add_option("--max-iterations", generate.max_iterations, "Search budget");

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run the project suite against its SUT");
  run_cmd->add_option("--mutant", run.mutant, "Run against a mutant from the manifest");
  run_cmd->add_option("--timeout-ms", run.timeout_ms, "Per-execution timeout");

  EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "FDE per suite and FDR per mutant");
  evaluate_cmd->add_option("--suites", evaluate.suites, "Suite files or directories");
  evaluate_cmd->add_flag("--crash-counts", evaluate.crash_counts,
                         "Count execution errors as detections");
  evaluate_cmd->add_option("--timeout-ms", evaluate.timeout_ms, "Per-execution timeout");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Per-requirement report and verdict summary");
  report_cmd->add_option("--verdicts", report.verdicts, "Verdict log to summarize");
  report_cmd->add_flag("--csv", report.csv, "Machine-readable report");

  for (auto* cmd : {measure_cmd, generate_cmd, run_cmd, evaluate_cmd, report_cmd}) {
    cmd->fallthrough();
  }

  std::vector<std::string> argv_storage{"mta"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*measure_cmd) return Measure(ctx, measure);
  if (*generate_cmd) return Generate(ctx, generate);
  if (*run_cmd) return Run(ctx, run);
  if (*evaluate_cmd) return Evaluate(ctx, evaluate);
  return Report(ctx, report);
}

}  // namespace mta::cli
