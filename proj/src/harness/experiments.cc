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

#include "entropy_lab/harness/experiments.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "entropy_lab/diagnostics/exclusion.h"
#include "entropy_lab/diagnostics/shift.h"
#include "entropy_lab/estimators/baselines.h"
#include "entropy_lab/estimators/cot.h"
#include "entropy_lab/estimators/weighted_flips.h"
#include "entropy_lab/harness/logits_ingest.h"
#include "entropy_lab/harness/projection.h"
#include "entropy_lab/harness/svg.h"
#include "entropy_lab/nnet/train.h"
#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/stats.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::harness {

using numcore::FormatDouble;
using numcore::Mat;
using numcore::Seed;

namespace {

std::string Opt(const std::optional<double>& v) { return v ? FormatDouble(*v) : std::string(); }

}  // namespace

datagen::SynthWorld MakeWorld(const RunConfig& cfg) {
  datagen::SynthSpec spec = cfg.data;
  spec.seed = Seeds{Seed{cfg.seed}}.data().value;
  return datagen::SynthWorld::Create(spec);
}

Lab BuildLab(const RunConfig& cfg) {
  const datagen::SynthWorld world = MakeWorld(cfg);
  const Seeds seeds{Seed{cfg.seed}};
  auto source = datagen::GenSource(world);
  auto net = nnet::Classifier::Create(
      nnet::DefaultArchitecture(cfg.data.dim, static_cast<std::size_t>(cfg.data.classes),
                                cfg.hidden),
      seeds.init());
  const auto result = nnet::Pretrain(net, source.train, source.val, cfg.pretrain, seeds.pretrain());
  spdlog::info("pretrained: clean validation accuracy {:.4f}", result.val_accuracy);
  Lab lab{cfg, seeds, world, std::move(source), std::move(net), result.val_accuracy};
  return lab;
}

Lab BuildLab(const RunConfig& cfg, nnet::Classifier pretrained) {
  if (pretrained.input_dim() != cfg.data.dim ||
      pretrained.num_classes() != static_cast<std::size_t>(cfg.data.classes))
    throw DimensionError("model does not match the configured data dimensions");
  const datagen::SynthWorld world = MakeWorld(cfg);
  auto source = datagen::GenSource(world);
  const double acc = nnet::EvaluateAccuracy(pretrained, source.val, nnet::BnMode::kFrozenStats);
  return Lab{cfg, Seeds{Seed{cfg.seed}}, world, std::move(source), std::move(pretrained), acc};
}

std::vector<datagen::Corruption> ParseDatasetName(const std::string& name, double within_std) {
  std::vector<datagen::Corruption> chain;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t plus = std::min(name.find('+', start), name.size());
    const std::string part = name.substr(start, plus - start);
    const std::size_t dash = part.rfind('-');
    if (part.empty() || dash == std::string::npos || dash + 1 >= part.size())
      throw ConfigError("malformed dataset name '" + name + "'");
    long long sev = 0;
    try {
      sev = numcore::ParseInt(part.substr(dash + 1), "severity");
    } catch (const ParseError&) {
      throw ConfigError("malformed dataset name '" + name + "'");
    }
    if (sev < 1 || sev > 5) throw ConfigError("dataset '" + name + "': severity outside 1..5");
    chain.push_back(datagen::Corruption::AtSeverity(datagen::ParseKind(part.substr(0, dash)),
                                                    static_cast<int>(sev), within_std));
    start = plus + 1;
  }
  return chain;
}

datagen::LabeledSet CorruptNamed(const Lab& lab, const datagen::LabeledSet& pool,
                                 const std::string& name, Seed noise) {
  datagen::LabeledSet out = pool;
  const auto chain = ParseDatasetName(name, lab.world.spec.within_std);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::string link = chain[i].Name();
    out = datagen::ApplyCorruption(lab.world, out, chain[i],
                                   datagen::SuiteDatasetSeed(lab.seeds.suite(), link),
                                   noise.Derive(link, i));
  }
  out.provenance = name;
  return out;
}

NamedSets MakeSuite(const Lab& lab) {
  return datagen::MakeShiftSuite(lab.world, lab.cfg.suite.kinds, lab.cfg.suite.severities,
                                 lab.seeds.suite(), lab.cfg.suite.per_class);
}

NamedSets MakeFitPool(const Lab& lab) {
  NamedSets pool;
  for (auto kind : lab.cfg.fit.kinds) {
    for (int sev : lab.cfg.fit.severities) {
      const auto c = datagen::Corruption::AtSeverity(kind, sev, lab.world.spec.within_std);
      auto set = datagen::ApplyCorruption(lab.world, lab.source.holdout_fit, c,
                                          lab.seeds.fit().Derive(c.Name()));
      set.provenance = "fit-" + c.Name();
      pool.emplace_back(set.provenance, std::move(set));
    }
  }
  if (lab.cfg.fit.include_clean_val) pool.emplace_back("clean-val", lab.source.val);
  return pool;
}

std::vector<double> SourceMarginal(const Lab& lab) {
  std::vector<double> m(static_cast<std::size_t>(lab.world.spec.classes), 0.0);
  for (int y : lab.source.train.labels) m[static_cast<std::size_t>(y)] += 1.0;
  const double n = static_cast<double>(lab.source.train.size());
  for (double& v : m) v /= n;
  return m;
}

estimators::SuiteContext MakeContext(const Lab& lab,
                                     std::optional<estimators::CalibrationCurve> curve) {
  estimators::SuiteContext ctx;
  ctx.pretrained = &lab.pretrained;
  ctx.val = &lab.source.val;
  ctx.curve = std::move(curve);
  ctx.tta = lab.cfg.tta;
  ctx.source_marginal = SourceMarginal(lab);
  ctx.cot_max_rows = lab.cfg.estimate.cot_max_rows;
  ctx.seed = lab.seeds.adapt();
  return ctx;
}

// ---- Flips and the calibration curve -------------------------------------

std::vector<FlipPoint> MeasureFlipPoints(const Lab& lab, const NamedSets& sets,
                                         const tta::TtaConfig& tta, const std::string& purpose,
                                         const std::vector<std::size_t>& prefix_sizes) {
  std::vector<FlipPoint> out;
  out.reserve(sets.size());
  const datagen::LabeledSet no_holdout;
  for (const auto& [name, set] : sets) {
    const auto run = tta::Adapt(lab.pretrained, set, no_holdout, tta,
                                lab.seeds.adapt().Derive(purpose + "." + name));
    FlipPoint p;
    p.dataset = name;
    p.accuracy = estimators::TrueAccuracy(lab.pretrained, set);
    p.weighted = estimators::WeightedFlips(run.tracker);
    p.unweighted = estimators::UnweightedFlips(run.tracker);
    p.tracked = run.tracker.size();
    for (std::size_t n : prefix_sizes)
      p.prefix_weighted.push_back(estimators::WeightedFlips(run.tracker.Prefix(n)));
    spdlog::debug("{} {}: accuracy {:.2f} wf {:.2f}", purpose, name, p.accuracy, p.weighted);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<estimators::FitPair> ToFitPairs(const std::vector<FlipPoint>& points, bool weighted) {
  std::vector<estimators::FitPair> pairs;
  for (const auto& p : points) pairs.push_back({weighted ? p.weighted : p.unweighted, p.accuracy});
  return pairs;
}

Table FlipPointsTable(const std::vector<FlipPoint>& points) {
  Table t{{"dataset", "accuracy", "weighted_flips", "unweighted_flips", "tracked"}, {}};
  for (const auto& p : points)
    t.Add({p.dataset, FormatDouble(p.accuracy), FormatDouble(p.weighted),
           FormatDouble(p.unweighted), std::to_string(p.tracked)});
  return t;
}

std::vector<FlipPoint> FlipPointsFromTable(const Table& table) {
  const std::size_t c_name = table.Column("dataset"), c_acc = table.Column("accuracy"),
                    c_w = table.Column("weighted_flips"), c_u = table.Column("unweighted_flips"),
                    c_t = table.Column("tracked");
  std::vector<FlipPoint> out;
  for (const auto& r : table.rows) {
    FlipPoint p;
    p.dataset = r[c_name];
    p.accuracy = numcore::ParseDouble(r[c_acc], "accuracy");
    p.weighted = numcore::ParseDouble(r[c_w], "weighted_flips");
    p.unweighted = numcore::ParseDouble(r[c_u], "unweighted_flips");
    p.tracked = static_cast<std::size_t>(numcore::ParseInt(r[c_t], "tracked"));
    out.push_back(std::move(p));
  }
  return out;
}

std::string FitPlotSvg(const std::vector<FlipPoint>& points,
                       const estimators::CalibrationCurve& curve) {
  Series scatter{"datasets", {}, {}, Series::Style::kPoints, {}};
  double hi = 0.0;
  for (const auto& p : points) {
    const double x = curve.weighted ? p.weighted : p.unweighted;
    scatter.x.push_back(x);
    scatter.y.push_back(p.accuracy);
    hi = std::max(hi, x);
  }
  Series line{estimators::CurveName(curve.degree, curve.weighted), {}, {}, Series::Style::kLine, {}};
  for (int i = 0; i <= 100; ++i) {
    const double x = hi * i / 100.0;
    line.x.push_back(x);
    line.y.push_back(estimators::PredictAccuracy(curve, x));
  }
  return RenderSvg({"Accuracy vs flips", curve.weighted ? "weighted flips" : "flips",
                    "accuracy (%)", {scatter, line}});
}

// ---- Dynamics ------------------------------------------------------------

datagen::LabeledSet DynamicsHoldout(const Lab& lab, const std::string& dataset,
                                    std::size_t per_class) {
  const auto pool = lab.world.Sample(per_class, lab.seeds.root.Derive("dynamics.holdout"),
                                     "dynamics-holdout");
  return CorruptNamed(lab, pool, dataset, lab.seeds.root.Derive("dynamics.holdout.noise"));
}

std::pair<datagen::LabeledSet, datagen::LabeledSet> DynamicsData(const Lab& lab,
                                                                 const std::string& dataset) {
  const auto pool = datagen::SuitePool(lab.world, lab.seeds.suite(), lab.cfg.suite.per_class);
  // A plain suite name reproduces the suite's set exactly; compounds reuse
  // the suite pool and each link's suite structure.
  datagen::LabeledSet stream;
  const auto chain = ParseDatasetName(dataset, lab.world.spec.within_std);
  if (chain.size() == 1) {
    stream = datagen::ApplyCorruption(lab.world, pool, chain[0],
                                      datagen::SuiteDatasetSeed(lab.seeds.suite(), dataset));
    stream.provenance = dataset;
  } else {
    stream = CorruptNamed(lab, pool, dataset, lab.seeds.suite().Derive("compound." + dataset));
  }
  return {std::move(stream), DynamicsHoldout(lab, dataset, lab.world.spec.val_per_class)};
}

Mat TrainingClassMeans(const Lab& lab) {
  const auto pred = nnet::PredictBatched(lab.pretrained, lab.source.train.features,
                                         nnet::BnMode::kFrozenStats, 256);
  return diagnostics::ClassMeans(pred.embedding, lab.source.train.labels, lab.world.spec.classes);
}

namespace {

tta::EvalDiagnostics DiagnoseAt(const Lab& lab, const Mat& class_means, const Mat& embedding,
                                std::size_t iter, bool projection) {
  tta::EvalDiagnostics d;
  const auto diag = diagnostics::Diagnose(embedding, class_means,
                                          lab.seeds.kmeans().Derive("dynamics", iter));
  d.silhouette = diag.silhouette;
  d.shift_distance = diag.shift_distance;
  if (projection) d.projection = ProjectPca2(embedding);
  return d;
}

}  // namespace

DynamicsRun RunDynamics(const Lab& lab, const std::string& dataset,
                        const datagen::LabeledSet& stream, const datagen::LabeledSet& holdout,
                        const DynamicsConfig& dc, Seed seed) {
  tta::EvalHook hook;
  Mat class_means;
  std::size_t record = 0;
  double best_acc = -1.0;
  std::size_t best_record = 0;
  Mat best_embedding, last_embedding;
  if (dc.diagnostics) {
    class_means = TrainingClassMeans(lab);
    hook = [&](const Mat& embedding, const std::vector<int>&, std::size_t iter,
               double acc) -> tta::EvalDiagnostics {
      const std::size_t index = record++;
      if (acc > best_acc) {
        best_acc = acc;
        best_record = index;
        best_embedding = embedding;
      }
      last_embedding = embedding;
      if (index % dc.diagnostics_every != 0) return {};
      return DiagnoseAt(lab, class_means, embedding, iter, dc.projection);
    };
  }
  auto result = tta::Adapt(lab.pretrained, stream, holdout, dc.tta, seed, hook);
  auto& records = result.trace.records;
  if (dc.diagnostics && !records.empty()) {
    // Phase deltas need the metrics at the peak and at the end.
    auto fill = [&](std::size_t index, const Mat& embedding) {
      auto& r = records[index];
      if (r.silhouette) return;
      const auto d = DiagnoseAt(lab, class_means, embedding, r.iter, false);
      r.silhouette = d.silhouette;
      r.shift_distance = d.shift_distance;
    };
    fill(best_record, best_embedding);
    fill(records.size() - 1, last_embedding);
  }
  DynamicsRun run{dataset, std::move(result.trace), std::move(result.tracker), {}};
  run.report = diagnostics::MakePhaseReport(run.trace);
  return run;
}

datagen::LabeledSet ApplyExclusion(const Lab& lab, const datagen::LabeledSet& holdout,
                                   const DynamicsConfig& dc) {
  datagen::LabeledSet kept = holdout;
  if (dc.topk_exclusion > 0)
    kept = diagnostics::TopKExclusion(kept, lab.pretrained, dc.topk_exclusion);
  if (dc.entropy_exclusion > 0.0)
    kept = diagnostics::EntropyExclusion(kept, lab.pretrained, dc.entropy_exclusion);
  return kept;
}

Table PhaseTable(const std::vector<DynamicsRun>& runs) {
  Table t{{"dataset", "peak_iter", "initial_accuracy", "peak_accuracy", "final_accuracy",
           "phase1_accuracy", "phase1_silhouette", "phase1_shift", "phase2_accuracy",
           "phase2_silhouette", "phase2_shift"},
          {}};
  for (const auto& r : runs) {
    const auto& p = r.report;
    std::vector<std::string> row{r.dataset,
                                 std::to_string(p.peak_iter),
                                 FormatDouble(p.initial_accuracy),
                                 FormatDouble(p.peak_accuracy),
                                 FormatDouble(p.final_accuracy),
                                 FormatDouble(p.phase1.accuracy),
                                 Opt(p.phase1.silhouette),
                                 Opt(p.phase1.shift_distance)};
    if (p.phase2) {
      row.push_back(FormatDouble(p.phase2->accuracy));
      row.push_back(Opt(p.phase2->silhouette));
      row.push_back(Opt(p.phase2->shift_distance));
    } else {
      row.insert(row.end(), 3, std::string());
    }
    t.Add(std::move(row));
  }
  return t;
}

Table ProjectionTable(const tta::Trace& trace, const std::vector<int>& labels) {
  Table t{{"iter", "id", "label", "pc0", "pc1"}, {}};
  for (const auto& r : trace.records) {
    if (!r.projection) continue;
    for (std::size_t i = 0; i < r.projection->rows(); ++i)
      t.Add({std::to_string(r.iter), std::to_string(i), std::to_string(labels[i]),
             FormatDouble((*r.projection)(i, 0)), FormatDouble((*r.projection)(i, 1))});
  }
  return t;
}

std::string TracePlotSvg(const tta::Trace& trace, const std::string& title) {
  Series acc{"holdout accuracy", {}, {}, Series::Style::kLine, {}};
  for (const auto& r : trace.records) {
    if (!r.holdout_acc) continue;
    acc.x.push_back(static_cast<double>(r.iter));
    acc.y.push_back(100.0 * *r.holdout_acc);
  }
  return RenderSvg({title, "iteration", "accuracy (%)", {acc}});
}

// ---- Estimation ----------------------------------------------------------

EstimateOutcome EstimateSuite(const Lab& lab, const NamedSets& suite,
                              const std::optional<estimators::CalibrationCurve>& curve,
                              const std::vector<estimators::Method>& methods) {
  const auto ctx = MakeContext(lab, curve);
  EstimateOutcome out;
  for (const auto& [name, set] : suite) {
    auto eval = estimators::EvaluateDataset(ctx, name, set, methods);
    if (eval.flips) {
      FlipPoint p;
      p.dataset = name;
      p.accuracy = eval.rows.front().truth.value_or(0.0);
      p.weighted = eval.flips->weighted;
      p.unweighted = eval.flips->unweighted;
      p.tracked = eval.flips->tracked;
      out.flips.push_back(std::move(p));
    }
    for (auto& r : eval.rows) out.rows.push_back(std::move(r));
  }
  return out;
}

std::vector<estimators::EstimateRow> EstimateFromLogits(
    const Lab& lab, const std::string& path, const std::vector<estimators::Method>& methods) {
  const auto dump = LoadLogitsCsv(path);
  std::vector<double> marginal = SourceMarginal(lab);
  if (marginal.size() != dump.probs.cols())
    marginal.assign(dump.probs.cols(), 1.0 / static_cast<double>(dump.probs.cols()));
  std::optional<double> truth;
  if (dump.labelled())
    truth = 100.0 * datagen::Accuracy(numcore::ArgmaxRows(dump.probs), dump.labels);
  std::vector<estimators::EstimateRow> rows;
  for (auto m : methods) {
    double estimate = 0.0;
    switch (m) {
      case estimators::Method::kAc:
        estimate = estimators::AverageConfidence(dump.probs);
        break;
      case estimators::Method::kCot: {
        Mat probs = dump.probs;
        const std::size_t cap = lab.cfg.estimate.cot_max_rows;
        if (cap != 0 && probs.rows() > cap) {
          std::vector<std::size_t> idx(cap);
          for (std::size_t i = 0; i < cap; ++i) idx[i] = i;
          probs = probs.SelectRows(idx);
        }
        estimate = estimators::Cot(probs, marginal).estimate;
        break;
      }
      default:
        spdlog::warn("{} needs the model itself; skipped for external logits",
                     estimators::MethodName(m));
        continue;
    }
    estimators::EstimateRow r;
    r.dataset = "logits";
    r.method = estimators::MethodName(m);
    r.estimate = estimators::ClampPercent(estimate);
    r.truth = truth;
    if (truth) r.abs_error = std::abs(r.estimate - *truth);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---- Ablations -----------------------------------------------------------

namespace {

double WfMae(const estimators::CalibrationCurve& curve, const std::vector<FlipPoint>& suite,
             const std::vector<double>* override_x = nullptr) {
  std::vector<double> err;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const double x = override_x ? (*override_x)[i]
                                : (curve.weighted ? suite[i].weighted : suite[i].unweighted);
    err.push_back(std::abs(estimators::PredictAccuracy(curve, x) - suite[i].accuracy));
  }
  return numcore::Mean(err);
}

}  // namespace

AblationResult RunAblations(const Lab& lab, const NamedSets& fit_pool, const NamedSets& suite) {
  const auto& ab = lab.cfg.ablate;
  if (ab.stop_iters.empty() && ab.track_sizes.empty() && ab.subset_sizes.empty())
    throw ConfigError("ablate: every grid is empty");
  const int degree = lab.cfg.fit.degree;
  const bool weighted = lab.cfg.fit.weighted;
  AblationResult out;

  for (std::size_t stop : ab.stop_iters) {
    tta::TtaConfig t = lab.cfg.tta;
    t.stop_iter = stop;
    const std::string tag = "ablate.stop" + std::to_string(stop);
    const auto pool_pts = MeasureFlipPoints(lab, fit_pool, t, tag + ".fit");
    const auto suite_pts = MeasureFlipPoints(lab, suite, t, tag + ".suite");
    StopIterCell cell;
    cell.stop_iter = stop;
    cell.curve = estimators::FitCurve(ToFitPairs(pool_pts, weighted), degree, weighted);
    cell.wf_mae = WfMae(cell.curve, suite_pts);
    spdlog::info("ablate stop_iter {}: WF MAE {:.3f}", stop, cell.wf_mae);
    out.stop_iters.push_back(std::move(cell));
  }

  if (ab.track_sizes.empty() && ab.subset_sizes.empty()) return out;
  const auto pool_pts = MeasureFlipPoints(lab, fit_pool, lab.cfg.tta, "ablate.base.fit");
  const auto suite_pts =
      MeasureFlipPoints(lab, suite, lab.cfg.tta, "ablate.base.suite", ab.track_sizes);
  const auto base = estimators::FitCurve(ToFitPairs(pool_pts, weighted), degree, weighted);

  for (std::size_t k = 0; k < ab.track_sizes.size(); ++k) {
    const std::size_t n = ab.track_sizes[k];
    std::vector<double> scaled, full;
    for (const auto& p : suite_pts) {
      // Sets shorter than n track everything they have.
      const std::size_t used = std::min(n, p.tracked);
      scaled.push_back(estimators::LimitedScale(p.prefix_weighted[k], used, p.tracked));
      full.push_back(p.weighted);
    }
    TrackSizeCell cell;
    cell.track_n = n;
    cell.wf_mae = WfMae(base, suite_pts, &scaled);
    try {
      cell.correlation = numcore::Pearson(scaled, full);
    } catch (const UndefinedError&) {
      cell.correlation = std::nan("");
    }
    out.track_sizes.push_back(cell);
  }

  for (std::size_t size : ab.subset_sizes) {
    if (size > pool_pts.size())
      throw ConfigError("ablate.subset_sizes: " + std::to_string(size) +
                        " exceeds the fitting pool (" + std::to_string(pool_pts.size()) + ")");
    numcore::Rng rng(lab.seeds.resampling().Derive("subset", size));
    std::vector<double> maes;
    for (std::size_t r = 0; r < ab.resamples; ++r) {
      auto order = rng.Permutation(pool_pts.size());
      std::vector<FlipPoint> chosen;
      for (std::size_t i = 0; i < size; ++i) chosen.push_back(pool_pts[order[i]]);
      try {
        const auto curve = estimators::FitCurve(ToFitPairs(chosen, weighted), degree, weighted);
        maes.push_back(WfMae(curve, suite_pts));
      } catch (const estimators::FitFailed&) {
        // Too few distinct points for this degree; the resample is dropped.
      }
    }
    SubsetCell cell;
    cell.size = size;
    cell.resamples = maes.size();
    if (!maes.empty()) {
      cell.mae_mean = numcore::Mean(maes);
      cell.mae_std = numcore::StdDev(maes);
    } else {
      cell.mae_mean = cell.mae_std = std::nan("");
    }
    out.subsets.push_back(cell);
  }
  return out;
}

// ---- EM-GMM toy ----------------------------------------------------------

std::vector<EmGmmRun> RunEmGmm(const EmGmmConfig& cfg, Seed seed) {
  std::vector<EmGmmRun> runs;
  for (std::size_t s = 0; s < cfg.seeds; ++s) {
    const Seed run_seed = seed.Derive("emgmm.run", s);
    const auto data = emgmm::MakeToyData(cfg.k, cfg.dim, cfg.per_cluster, cfg.radius, run_seed);
    numcore::Rng rng(run_seed.Derive("emgmm.offset"));
    std::vector<double> offset(cfg.dim);
    double norm = 0.0;
    while (norm < 1e-12) {
      for (double& v : offset) v = rng.Normal();
      norm = numcore::Norm(offset);
    }
    for (double& v : offset) v *= cfg.offset_factor * data.separation / norm;
    for (auto init : {emgmm::InitMode::kSmart, emgmm::InitMode::kShifted,
                      emgmm::InitMode::kEmOnly}) {
      emgmm::GmmToyConfig t;
      t.k = cfg.k;
      t.points = data.points;
      t.labels = data.labels;
      t.init = init;
      t.offset = offset;
      t.eta = cfg.eta;
      t.iterations = cfg.iterations;
      t.seed = run_seed;
      runs.push_back({init, s, data.labels, emgmm::RunToy(t)});
    }
  }
  return runs;
}

double MeanFinalAri(const std::vector<EmGmmRun>& runs, emgmm::InitMode init) {
  std::vector<double> v;
  for (const auto& r : runs)
    if (r.init == init) v.push_back(r.trajectory.final_ari());
  if (v.empty()) throw PreconditionError("no EM-GMM runs for arm " + emgmm::InitName(init));
  return numcore::Mean(v);
}

Table EmGmmSummary(const std::vector<EmGmmRun>& runs) {
  Table t{{"arm", "seeds", "mean_final_ari", "std_final_ari"}, {}};
  for (auto init : {emgmm::InitMode::kSmart, emgmm::InitMode::kShifted,
                    emgmm::InitMode::kEmOnly}) {
    std::vector<double> v;
    for (const auto& r : runs)
      if (r.init == init) v.push_back(r.trajectory.final_ari());
    if (v.empty()) continue;
    t.Add({emgmm::InitName(init), std::to_string(v.size()), FormatDouble(numcore::Mean(v)),
           FormatDouble(numcore::StdDev(v))});
  }
  return t;
}

}  // namespace entropy_lab::harness
