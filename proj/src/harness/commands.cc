/*
 * Copyright 2026 The Entropy Lab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "entropy_lab/harness/commands.h"

#include <spdlog/sinks/basic_file_sink.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "entropy_lab/datagen/labeled_set_csv.h"
#include "entropy_lab/estimators/calibration.h"
#include "entropy_lab/harness/csv.h"
#include "entropy_lab/harness/experiments.h"
#include "entropy_lab/harness/svg.h"
#include "entropy_lab/nnet/serialize.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"
#include "entropy_lab/tta/trace_csv.h"

namespace entropy_lab::harness {

namespace fs = std::filesystem;
using numcore::FormatDouble;

namespace {

template <typename Writer>
void SaveWith(const fs::path& path, Writer&& write) {
  std::ostringstream s;
  write(s);
  SaveText(s.str(), path);
}

fs::path ModelPath(const RunConfig& cfg) { return cfg.out / "model.bin"; }

std::string CurveFile(int degree, bool weighted) {
  return "curve-" + estimators::CurveName(degree, weighted) + ".csv";
}

Lab LoadLab(const RunConfig& cfg) {
  const fs::path model = ModelPath(cfg);
  if (!fs::exists(model))
    throw PreconditionError("missing model " + model.string() + "; run `pretrain` first");
  return BuildLab(cfg, nnet::LoadClassifier(model));
}

void GenData(const RunConfig& cfg) {
  const auto world = MakeWorld(cfg);
  const auto src = datagen::GenSource(world);
  const fs::path dir = cfg.out / "data";
  datagen::SaveLabeledSetCsv(src.train, dir / "train.csv");
  datagen::SaveLabeledSetCsv(src.val, dir / "val.csv");
  datagen::SaveLabeledSetCsv(src.holdout_fit, dir / "holdout_fit.csv");
  datagen::SaveLabeledSetCsv(src.test_clean, dir / "test_clean.csv");
  const Seeds seeds{numcore::Seed{cfg.seed}};
  const auto suite = datagen::MakeShiftSuite(world, cfg.suite.kinds, cfg.suite.severities,
                                             seeds.suite(), cfg.suite.per_class);
  for (const auto& [name, set] : suite) datagen::SaveLabeledSetCsv(set, dir / "suite" / (name + ".csv"));
  spdlog::info("wrote 4 splits and {} suite sets to {}", suite.size(), dir.string());
}

void PretrainCmd(const RunConfig& cfg) {
  const Lab lab = BuildLab(cfg);
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  nnet::SaveClassifier(lab.pretrained, ModelPath(cfg));
  Table t{{"val_accuracy", "test_clean_accuracy"}, {}};
  t.Add({FormatDouble(lab.val_accuracy),
         FormatDouble(nnet::EvaluateAccuracy(lab.pretrained, lab.source.test_clean,
                                             nnet::BnMode::kFrozenStats))});
  SaveTable(t, cfg.out / "pretrain.csv");
}

void AdaptCmd(const RunConfig& cfg) {
  const Lab lab = LoadLab(cfg);
  const auto& dc = cfg.dynamics;
  auto [stream, holdout] = DynamicsData(lab, dc.dataset);
  const std::size_t holdout_rows = holdout.size();
  holdout = ApplyExclusion(lab, holdout, dc);
  spdlog::info("adapt on {}: {} stream rows, holdout {} of {} rows kept", dc.dataset,
               stream.size(), holdout.size(), holdout_rows);
  const auto run = RunDynamics(lab, dc.dataset, stream, holdout, dc, lab.seeds.adapt().Derive("dynamics"));
  const fs::path dir = cfg.out / "adapt";
  SaveWith(dir / "trace.csv", [&](std::ostream& o) { tta::WriteTraceCsv(run.trace, o); });
  SaveWith(dir / "flips.csv", [&](std::ostream& o) { tta::WriteFlipsCsv(run.tracker, o); });
  SaveTable(PhaseTable({run}), dir / "phases.csv");
  Table ex{{"holdout_rows", "kept_rows", "topk", "entropy_threshold"}, {}};
  ex.Add({std::to_string(holdout_rows), std::to_string(holdout.size()),
          std::to_string(dc.topk_exclusion), FormatDouble(dc.entropy_exclusion)});
  SaveTable(ex, dir / "exclusion.csv");
  if (dc.projection) SaveTable(ProjectionTable(run.trace, holdout.labels), dir / "projection.csv");
  SaveText(TracePlotSvg(run.trace, "Tent on " + dc.dataset), dir / "accuracy.svg");
}

void FitCurveCmd(const RunConfig& cfg) {
  const Lab lab = LoadLab(cfg);
  const auto pool = MakeFitPool(lab);
  const auto points = MeasureFlipPoints(lab, pool, cfg.tta, "fit");
  const auto curve =
      estimators::FitCurve(ToFitPairs(points, cfg.fit.weighted), cfg.fit.degree, cfg.fit.weighted);
  const fs::path dir = cfg.out / "fit";
  SaveTable(FlipPointsTable(points), dir / "points.csv");
  SaveWith(dir / CurveFile(curve.degree, curve.weighted),
           [&](std::ostream& o) { estimators::WriteCurveCsv(curve, o); });
  SaveText(FitPlotSvg(points, curve),
           dir / ("curve-" + estimators::CurveName(curve.degree, curve.weighted) + ".svg"));
}

std::string EstimatesSvg(const std::vector<estimators::EstimateRow>& rows) {
  std::vector<Series> series;
  for (const auto& r : rows) {
    if (!r.truth) continue;
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series& s) { return s.name == r.method; });
    if (it == series.end()) {
      series.push_back({r.method, {}, {}, Series::Style::kPoints, {}});
      it = series.end() - 1;
    }
    it->x.push_back(*r.truth);
    it->y.push_back(r.estimate);
  }
  Series diag{"ideal", {0.0, 100.0}, {0.0, 100.0}, Series::Style::kLine, {}};
  series.push_back(diag);
  return RenderSvg({"Estimated vs true accuracy", "true accuracy (%)", "estimate (%)", series});
}

void EstimateCmd(const RunConfig& cfg) {
  const Lab lab = LoadLab(cfg);
  std::optional<estimators::CalibrationCurve> curve;
  const bool wants_wf = std::find(cfg.estimate.methods.begin(), cfg.estimate.methods.end(),
                                  estimators::Method::kWf) != cfg.estimate.methods.end();
  if (wants_wf) {
    const fs::path path = cfg.out / "fit" / CurveFile(cfg.fit.degree, cfg.fit.weighted);
    std::ifstream in(path);
    if (!in) throw PreconditionError("WF needs a fitted curve; missing " + path.string());
    curve = estimators::ReadCurveCsv(in);
  }
  const auto suite = MakeSuite(lab);
  const auto outcome = EstimateSuite(lab, suite, curve, cfg.estimate.methods);
  const fs::path dir = cfg.out / "estimate";
  SaveWith(dir / "estimates.csv", [&](std::ostream& o) { estimators::WriteReportCsv(outcome.rows, o); });
  SaveWith(dir / "summary.csv", [&](std::ostream& o) {
    estimators::WriteSummaryCsv(estimators::Summarize(outcome.rows), o);
  });
  if (!outcome.flips.empty()) SaveTable(FlipPointsTable(outcome.flips), dir / "flips.csv");
  SaveText(EstimatesSvg(outcome.rows), dir / "estimates.svg");
  if (!cfg.estimate.logits_path.empty()) {
    const auto rows = EstimateFromLogits(lab, cfg.estimate.logits_path, cfg.estimate.methods);
    SaveWith(dir / "logits.csv", [&](std::ostream& o) { estimators::WriteReportCsv(rows, o); });
  }
  for (const auto& s : estimators::Summarize(outcome.rows))
    spdlog::info("{:>4}: average {:.2f}, worst {:.2f}", s.method, s.average, s.worst);
}

std::string SubsetSvg(const Table& t) {
  Series mean{"mean MAE", {}, {}, Series::Style::kLine, {}};
  Series lo{"mean - std", {}, {}, Series::Style::kLine, {}};
  Series hi{"mean + std", {}, {}, Series::Style::kLine, {}};
  const auto cs = t.Column("size"), cm = t.Column("mae_mean"), cd = t.Column("mae_std");
  for (const auto& r : t.rows) {
    const double x = numcore::ParseDouble(r[cs], "size");
    const double m = numcore::ParseDouble(r[cm], "mae_mean");
    const double d = numcore::ParseDouble(r[cd], "mae_std");
    mean.x.push_back(x), mean.y.push_back(m);
    lo.x.push_back(x), lo.y.push_back(m - d);
    hi.x.push_back(x), hi.y.push_back(m + d);
  }
  return RenderSvg({"WF MAE vs fitting-set size", "fitting datasets", "MAE (points)", {mean, lo, hi}});
}

std::string ColumnSvg(const Table& t, const std::string& x, const std::string& y,
                      const std::string& title) {
  Series s{y, {}, {}, Series::Style::kLine, {}};
  const auto cx = t.Column(x), cy = t.Column(y);
  for (const auto& r : t.rows) {
    s.x.push_back(numcore::ParseDouble(r[cx], x));
    s.y.push_back(numcore::ParseDouble(r[cy], y));
  }
  return RenderSvg({title, x, y, {s}});
}

void AblateCmd(const RunConfig& cfg) {
  const Lab lab = LoadLab(cfg);
  const auto result = RunAblations(lab, MakeFitPool(lab), MakeSuite(lab));
  const fs::path dir = cfg.out / "ablate";
  Table stops{{"stop_iter", "wf_mae"}, {}};
  for (const auto& c : result.stop_iters) {
    stops.Add({std::to_string(c.stop_iter), FormatDouble(c.wf_mae)});
    SaveWith(dir / ("curve-stop" + std::to_string(c.stop_iter) + ".csv"),
             [&](std::ostream& o) { estimators::WriteCurveCsv(c.curve, o); });
  }
  Table tracks{{"track_n", "wf_mae", "correlation"}, {}};
  for (const auto& c : result.track_sizes)
    tracks.Add({std::to_string(c.track_n), FormatDouble(c.wf_mae), FormatDouble(c.correlation)});
  Table subsets{{"size", "resamples", "mae_mean", "mae_std"}, {}};
  for (const auto& c : result.subsets)
    subsets.Add({std::to_string(c.size), std::to_string(c.resamples), FormatDouble(c.mae_mean),
                 FormatDouble(c.mae_std)});
  SaveTable(stops, dir / "stop_iters.csv");
  SaveTable(tracks, dir / "track_sizes.csv");
  SaveTable(subsets, dir / "subsets.csv");
  if (!stops.rows.empty())
    SaveText(ColumnSvg(stops, "stop_iter", "wf_mae", "WF MAE vs stopping iteration"),
             dir / "stop_iters.svg");
  if (!tracks.rows.empty())
    SaveText(ColumnSvg(tracks, "track_n", "wf_mae", "WF MAE vs tracked samples"),
             dir / "track_sizes.svg");
  if (!subsets.rows.empty()) SaveText(SubsetSvg(subsets), dir / "subsets.svg");
}

std::string ToyScatterSvg(const emgmm::ToyTrajectory& t, const std::vector<int>& labels,
                          const std::string& title) {
  const auto& pts = t.points.back();
  Series s{"samples", {}, {}, Series::Style::kPoints, labels};
  for (std::size_t i = 0; i < pts.rows(); ++i) {
    s.x.push_back(pts(i, 0));
    s.y.push_back(pts(i, 1));
  }
  const auto& c = t.centroids.back();
  Series cs{"centroids", {}, {}, Series::Style::kPoints, {}};
  for (std::size_t k = 0; k < c.rows(); ++k) {
    cs.x.push_back(c(k, 0));
    cs.y.push_back(c(k, 1));
  }
  return RenderSvg({title, "x0", "x1", {s, cs}});
}

void EmGmmCmd(const RunConfig& cfg) {
  const Seeds seeds{numcore::Seed{cfg.seed}};
  const auto runs = RunEmGmm(cfg.emgmm, seeds.emgmm());
  const fs::path dir = cfg.out / "emgmm";
  for (const auto& r : runs) {
    const std::string stem = emgmm::InitName(r.init) + "-" + std::to_string(r.seed_index);
    SaveWith(dir / (stem + ".csv"),
             [&](std::ostream& o) { emgmm::WriteTrajectoryCsv(r.trajectory, o); });
    if (r.seed_index == 0) {
      SaveText(ToyScatterSvg(r.trajectory, r.labels,
                             "EM with trainable samples: " + emgmm::InitName(r.init)),
               dir / (emgmm::InitName(r.init) + ".svg"));
    }
  }
  const Table summary = EmGmmSummary(runs);
  SaveTable(summary, dir / "summary.csv");
  for (const auto& row : summary.rows)
    spdlog::info("{}: mean final ARI {}", row[0], row[2]);
}

void ReportCmd(const RunConfig& cfg) {
  std::size_t rendered = 0;
  const fs::path est = cfg.out / "estimate" / "estimates.csv";
  if (fs::exists(est)) {
    std::ifstream in(est);
    const auto rows = estimators::ReadReportCsv(in);
    SaveWith(cfg.out / "estimate" / "summary.csv", [&](std::ostream& o) {
      estimators::WriteSummaryCsv(estimators::Summarize(rows), o);
    });
    SaveText(EstimatesSvg(rows), cfg.out / "estimate" / "estimates.svg");
    ++rendered;
  }
  const fs::path points = cfg.out / "fit" / "points.csv";
  const fs::path curve_path = cfg.out / "fit" / CurveFile(cfg.fit.degree, cfg.fit.weighted);
  if (fs::exists(points) && fs::exists(curve_path)) {
    std::ifstream in(curve_path);
    const auto curve = estimators::ReadCurveCsv(in);
    SaveText(FitPlotSvg(FlipPointsFromTable(LoadTable(points)), curve),
             cfg.out / "fit" / ("curve-" + estimators::CurveName(curve.degree, curve.weighted) + ".svg"));
    ++rendered;
  }
  const fs::path trace = cfg.out / "adapt" / "trace.csv";
  if (fs::exists(trace)) {
    std::ifstream in(trace);
    SaveText(TracePlotSvg(tta::ReadTraceCsv(in), "Tent on " + cfg.dynamics.dataset),
             cfg.out / "adapt" / "accuracy.svg");
    ++rendered;
  }
  const fs::path subsets = cfg.out / "ablate" / "subsets.csv";
  if (fs::exists(subsets)) {
    SaveText(SubsetSvg(LoadTable(subsets)), cfg.out / "ablate" / "subsets.svg");
    ++rendered;
  }
  if (rendered == 0)
    throw PreconditionError("report: no result CSVs under " + cfg.out.string());
  spdlog::info("report: rendered {} views", rendered);
}

}  // namespace

std::vector<std::string> CommandNames() {
  return {"gen-data", "pretrain", "adapt", "fit-curve", "estimate", "ablate", "emgmm", "report"};
}

void RunCommand(const std::string& command, const RunConfig& cfg) {
  ValidateConfig(cfg);
  SaveWith(cfg.out / "config.ini", [&](std::ostream& o) { WriteConfig(cfg, o); });
  if (command == "gen-data") return GenData(cfg);
  if (command == "pretrain") return PretrainCmd(cfg);
  if (command == "adapt") return AdaptCmd(cfg);
  if (command == "fit-curve") return FitCurveCmd(cfg);
  if (command == "estimate") return EstimateCmd(cfg);
  if (command == "ablate") return AblateCmd(cfg);
  if (command == "emgmm") return EmGmmCmd(cfg);
  if (command == "report") return ReportCmd(cfg);
  throw ConfigError("unknown command '" + command + "'");
}

int Execute(const std::string& command, const fs::path& config_path,
            std::optional<std::uint64_t> seed, std::optional<fs::path> out) {
  try {
    RunConfig cfg = LoadConfig(config_path);
    if (seed) cfg.seed = *seed;
    if (out) cfg.out = *out;
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    auto console = std::make_shared<spdlog::sinks::stderr_color_sink_mt>();
    std::vector<spdlog::sink_ptr> sinks{console};
    try {
      sinks.push_back(std::make_shared<spdlog::sinks::basic_file_sink_mt>(
          (cfg.out / "log.txt").string(), false));
    } catch (const spdlog::spdlog_ex&) {
      throw PreconditionError("cannot write to output directory " + cfg.out.string());
    }
    auto logger = std::make_shared<spdlog::logger>("entropy-lab", sinks.begin(), sinks.end());
    spdlog::set_default_logger(logger);
    spdlog::info("{} (seed {}, out {})", command, cfg.seed, cfg.out.string());
    RunCommand(command, cfg);
    spdlog::default_logger()->flush();
    return kExitOk;
  } catch (const ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kExitConfigError;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitPreconditionError;
  }
}

}  // namespace entropy_lab::harness
