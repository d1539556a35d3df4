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

#include "entropy_lab/harness/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "entropy_lab/numcore/errors.h"
#include "entropy_lab/numcore/text.h"

namespace entropy_lab::harness {

namespace {

using numcore::FormatDouble;

// One configurable key: how to read it from text and how to print it.
struct Field {
  std::string section;
  std::string key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

std::string Qualified(const std::string& section, const std::string& key) {
  return section + "." + key;
}

double ToDouble(const std::string& v, const std::string& name) {
  try {
    return numcore::ParseDouble(v, name);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("config key ") + name + ": " + e.what());
  }
}

long long ToInt(const std::string& v, const std::string& name) {
  try {
    return numcore::ParseInt(v, name);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("config key ") + name + ": " + e.what());
  }
}

std::size_t ToCount(const std::string& v, const std::string& name) {
  const long long n = ToInt(v, name);
  if (n < 0) throw ConfigError("config key " + name + " must be >= 0");
  return static_cast<std::size_t>(n);
}

bool ToBool(const std::string& v, const std::string& name) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key " + name + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> ToList(const std::string& v) {
  std::vector<std::string> out;
  for (const auto& item : numcore::SplitComma(v)) {
    const auto t = std::string(numcore::Trim(item));
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

template <typename T, typename F>
std::string Join(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += fmt(items[i]);
  }
  return out;
}

std::vector<std::size_t> ToCounts(const std::string& v, const std::string& name) {
  std::vector<std::size_t> out;
  for (const auto& s : ToList(v)) out.push_back(ToCount(s, name));
  return out;
}

std::vector<int> ToInts(const std::string& v, const std::string& name) {
  std::vector<int> out;
  for (const auto& s : ToList(v)) out.push_back(static_cast<int>(ToInt(s, name)));
  return out;
}

std::vector<datagen::CorruptionKind> ToKinds(const std::string& v) {
  std::vector<datagen::CorruptionKind> out;
  for (const auto& s : ToList(v)) out.push_back(datagen::ParseKind(s));
  return out;
}

std::string CountStr(std::size_t n) { return std::to_string(n); }
std::string BoolStr(bool b) { return b ? "true" : "false"; }

#define FIELD_DOUBLE(sec, key, expr)                                                   \
  Field{sec, key, [](RunConfig& c, const std::string& v) { expr = ToDouble(v, sec "." key); }, \
        [](const RunConfig& c) { return FormatDouble(expr); }}
#define FIELD_COUNT(sec, key, expr)                                                   \
  Field{sec, key, [](RunConfig& c, const std::string& v) { expr = ToCount(v, sec "." key); }, \
        [](const RunConfig& c) { return CountStr(expr); }}
#define FIELD_BOOL(sec, key, expr)                                                    \
  Field{sec, key, [](RunConfig& c, const std::string& v) { expr = ToBool(v, sec "." key); }, \
        [](const RunConfig& c) { return BoolStr(expr); }}

// TtaConfig fields shared by [tta] and [dynamics].
void AddTtaFields(std::vector<Field>& f, const std::string& sec,
                  tta::TtaConfig RunConfig::*member, tta::TtaConfig DynamicsConfig::*dyn) {
  auto ref = [member, dyn](RunConfig& c) -> tta::TtaConfig& {
    return member ? c.*member : c.dynamics.*dyn;
  };
  auto cref = [member, dyn](const RunConfig& c) -> const tta::TtaConfig& {
    return member ? c.*member : c.dynamics.*dyn;
  };
  auto name = [sec](const char* k) { return sec + "." + k; };
  f.push_back({sec, "method",
               [=](RunConfig& c, const std::string& v) { ref(c).method = tta::ParseMethod(v); },
               [=](const RunConfig& c) { return tta::MethodName(cref(c).method); }});
  f.push_back({sec, "lr", [=](RunConfig& c, const std::string& v) { ref(c).lr = ToDouble(v, name("lr")); },
               [=](const RunConfig& c) { return FormatDouble(cref(c).lr); }});
  f.push_back({sec, "batch_size",
               [=](RunConfig& c, const std::string& v) { ref(c).batch_size = ToCount(v, name("batch_size")); },
               [=](const RunConfig& c) { return CountStr(cref(c).batch_size); }});
  f.push_back({sec, "reset_period",
               [=](RunConfig& c, const std::string& v) { ref(c).reset_period = ToCount(v, name("reset_period")); },
               [=](const RunConfig& c) { return CountStr(cref(c).reset_period); }});
  f.push_back({sec, "e0", [=](RunConfig& c, const std::string& v) { ref(c).e0 = ToDouble(v, name("e0")); },
               [=](const RunConfig& c) { return FormatDouble(cref(c).e0); }});
  f.push_back({sec, "alpha", [=](RunConfig& c, const std::string& v) { ref(c).alpha = ToDouble(v, name("alpha")); },
               [=](const RunConfig& c) { return FormatDouble(cref(c).alpha); }});
  f.push_back({sec, "eps_div",
               [=](RunConfig& c, const std::string& v) { ref(c).eps_div = ToDouble(v, name("eps_div")); },
               [=](const RunConfig& c) { return FormatDouble(cref(c).eps_div); }});
  f.push_back({sec, "stop_iter",
               [=](RunConfig& c, const std::string& v) { ref(c).stop_iter = ToCount(v, name("stop_iter")); },
               [=](const RunConfig& c) { return CountStr(cref(c).stop_iter); }});
  f.push_back({sec, "eval_interval",
               [=](RunConfig& c, const std::string& v) { ref(c).eval_interval = ToCount(v, name("eval_interval")); },
               [=](const RunConfig& c) { return CountStr(cref(c).eval_interval); }});
  f.push_back({sec, "track_n",
               [=](RunConfig& c, const std::string& v) { ref(c).track_n = ToCount(v, name("track_n")); },
               [=](const RunConfig& c) { return CountStr(cref(c).track_n); }});
  f.push_back({sec, "clear_ema_on_reset",
               [=](RunConfig& c, const std::string& v) { ref(c).clear_ema_on_reset = ToBool(v, name("clear_ema_on_reset")); },
               [=](const RunConfig& c) { return BoolStr(cref(c).clear_ema_on_reset); }});
}

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = [] {
    std::vector<Field> f;
    f.push_back({"run", "seed",
                 [](RunConfig& c, const std::string& v) {
                   const long long s = ToInt(v, "run.seed");
                   if (s < 0) throw ConfigError("config key run.seed must be >= 0");
                   c.seed = static_cast<std::uint64_t>(s);
                 },
                 [](const RunConfig& c) { return std::to_string(c.seed); }});
    f.push_back({"run", "out", [](RunConfig& c, const std::string& v) { c.out = v; },
                 [](const RunConfig& c) { return c.out.string(); }});

    f.push_back({"data", "classes",
                 [](RunConfig& c, const std::string& v) { c.data.classes = static_cast<int>(ToInt(v, "data.classes")); },
                 [](const RunConfig& c) { return std::to_string(c.data.classes); }});
    f.push_back(FIELD_COUNT("data", "dim", c.data.dim));
    f.push_back(FIELD_DOUBLE("data", "mean_scale", c.data.mean_scale));
    f.push_back(FIELD_DOUBLE("data", "within_std", c.data.within_std));
    f.push_back(FIELD_COUNT("data", "train_per_class", c.data.train_per_class));
    f.push_back(FIELD_COUNT("data", "val_per_class", c.data.val_per_class));
    f.push_back(FIELD_COUNT("data", "holdout_per_class", c.data.holdout_per_class));
    f.push_back(FIELD_COUNT("data", "test_per_class", c.data.test_per_class));

    f.push_back(FIELD_COUNT("pretrain", "hidden", c.hidden));
    f.push_back(FIELD_COUNT("pretrain", "epochs", c.pretrain.epochs));
    f.push_back(FIELD_DOUBLE("pretrain", "lr", c.pretrain.lr));
    f.push_back(FIELD_DOUBLE("pretrain", "momentum", c.pretrain.momentum));
    f.push_back(FIELD_COUNT("pretrain", "batch_size", c.pretrain.batch_size));
    f.push_back(FIELD_DOUBLE("pretrain", "accuracy_floor", c.pretrain.accuracy_floor));

    AddTtaFields(f, "tta", &RunConfig::tta, nullptr);

    f.push_back({"suite", "kinds", [](RunConfig& c, const std::string& v) { c.suite.kinds = ToKinds(v); },
                 [](const RunConfig& c) { return Join(c.suite.kinds, datagen::KindName); }});
    f.push_back({"suite", "severities",
                 [](RunConfig& c, const std::string& v) { c.suite.severities = ToInts(v, "suite.severities"); },
                 [](const RunConfig& c) { return Join(c.suite.severities, [](int s) { return std::to_string(s); }); }});
    f.push_back(FIELD_COUNT("suite", "per_class", c.suite.per_class));

    f.push_back({"fit", "kinds", [](RunConfig& c, const std::string& v) { c.fit.kinds = ToKinds(v); },
                 [](const RunConfig& c) { return Join(c.fit.kinds, datagen::KindName); }});
    f.push_back({"fit", "severities",
                 [](RunConfig& c, const std::string& v) { c.fit.severities = ToInts(v, "fit.severities"); },
                 [](const RunConfig& c) { return Join(c.fit.severities, [](int s) { return std::to_string(s); }); }});
    f.push_back({"fit", "degree",
                 [](RunConfig& c, const std::string& v) { c.fit.degree = static_cast<int>(ToInt(v, "fit.degree")); },
                 [](const RunConfig& c) { return std::to_string(c.fit.degree); }});
    f.push_back(FIELD_BOOL("fit", "weighted", c.fit.weighted));
    f.push_back(FIELD_BOOL("fit", "include_clean_val", c.fit.include_clean_val));

    f.push_back({"estimate", "methods",
                 [](RunConfig& c, const std::string& v) {
                   c.estimate.methods.clear();
                   for (const auto& m : ToList(v)) c.estimate.methods.push_back(estimators::ParseMethod(m));
                 },
                 [](const RunConfig& c) { return Join(c.estimate.methods, estimators::MethodName); }});
    f.push_back(FIELD_COUNT("estimate", "cot_max_rows", c.estimate.cot_max_rows));
    f.push_back({"estimate", "logits", [](RunConfig& c, const std::string& v) { c.estimate.logits_path = v; },
                 [](const RunConfig& c) { return c.estimate.logits_path; }});

    AddTtaFields(f, "dynamics", nullptr, &DynamicsConfig::tta);
    f.push_back({"dynamics", "dataset", [](RunConfig& c, const std::string& v) { c.dynamics.dataset = v; },
                 [](const RunConfig& c) { return c.dynamics.dataset; }});
    f.push_back(FIELD_BOOL("dynamics", "diagnostics", c.dynamics.diagnostics));
    f.push_back(FIELD_BOOL("dynamics", "projection", c.dynamics.projection));
    f.push_back(FIELD_COUNT("dynamics", "diagnostics_every", c.dynamics.diagnostics_every));
    f.push_back({"dynamics", "topk_exclusion",
                 [](RunConfig& c, const std::string& v) {
                   c.dynamics.topk_exclusion = static_cast<int>(ToInt(v, "dynamics.topk_exclusion"));
                 },
                 [](const RunConfig& c) { return std::to_string(c.dynamics.topk_exclusion); }});
    f.push_back(FIELD_DOUBLE("dynamics", "entropy_exclusion", c.dynamics.entropy_exclusion));

    f.push_back({"ablate", "stop_iters",
                 [](RunConfig& c, const std::string& v) { c.ablate.stop_iters = ToCounts(v, "ablate.stop_iters"); },
                 [](const RunConfig& c) { return Join(c.ablate.stop_iters, CountStr); }});
    f.push_back({"ablate", "track_sizes",
                 [](RunConfig& c, const std::string& v) { c.ablate.track_sizes = ToCounts(v, "ablate.track_sizes"); },
                 [](const RunConfig& c) { return Join(c.ablate.track_sizes, CountStr); }});
    f.push_back({"ablate", "subset_sizes",
                 [](RunConfig& c, const std::string& v) { c.ablate.subset_sizes = ToCounts(v, "ablate.subset_sizes"); },
                 [](const RunConfig& c) { return Join(c.ablate.subset_sizes, CountStr); }});
    f.push_back(FIELD_COUNT("ablate", "resamples", c.ablate.resamples));

    f.push_back(FIELD_COUNT("emgmm", "k", c.emgmm.k));
    f.push_back(FIELD_COUNT("emgmm", "dim", c.emgmm.dim));
    f.push_back(FIELD_COUNT("emgmm", "per_cluster", c.emgmm.per_cluster));
    f.push_back(FIELD_DOUBLE("emgmm", "radius", c.emgmm.radius));
    f.push_back(FIELD_DOUBLE("emgmm", "eta", c.emgmm.eta));
    f.push_back(FIELD_COUNT("emgmm", "iterations", c.emgmm.iterations));
    f.push_back(FIELD_COUNT("emgmm", "seeds", c.emgmm.seeds));
    f.push_back(FIELD_DOUBLE("emgmm", "offset_factor", c.emgmm.offset_factor));
    return f;
  }();
  return fields;
}

#undef FIELD_DOUBLE
#undef FIELD_COUNT
#undef FIELD_BOOL

}  // namespace

RunConfig DefaultConfig() {
  using K = datagen::CorruptionKind;
  RunConfig c;
  c.suite.kinds = {K::kAdditiveGaussian, K::kMeanShift, K::kFeatureScale, K::kOodInject};
  c.suite.severities = {1, 2, 3, 4, 5};
  c.fit.kinds = c.suite.kinds;
  c.fit.severities = c.suite.severities;
  c.estimate.methods = estimators::AllMethods();
  c.dynamics.tta.method = tta::Method::kTent;
  c.dynamics.tta.lr = 0.4;
  c.dynamics.tta.batch_size = 16;
  c.dynamics.tta.stop_iter = 10000;
  c.dynamics.tta.eval_interval = 10;
  c.dynamics.tta.reset_period = 1000000;
  c.dynamics.dataset = "mean-shift-3+additive-gaussian-3";
  c.dynamics.diagnostics_every = 100;
  c.ablate.stop_iters = {1000, 500, 250, 100, 50};
  c.ablate.track_sizes = {1000, 500, 250, 100, 50};
  c.ablate.subset_sizes = {5, 10, 15, 20};
  return c;
}

RunConfig ParseConfig(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  RunConfig cfg = DefaultConfig();
  const auto& fields = Fields();
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError("config key '" + section + "' must be inside a [section]");
    for (const auto& [key, value] : body) {
      const Field* match = nullptr;
      for (const auto& f : fields)
        if (f.section == section && f.key == key) match = &f;
      if (match == nullptr) throw ConfigError("unknown config key '" + Qualified(section, key) + "'");
      match->set(cfg, std::string(numcore::Trim(value.data())));
    }
  }
  ValidateConfig(cfg);
  return cfg;
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return ParseConfig(in);
}

void WriteConfig(const RunConfig& cfg, std::ostream& out) {
  std::string section;
  for (const auto& f : Fields()) {
    if (f.section != section) {
      if (!section.empty()) out << '\n';
      section = f.section;
      out << '[' << section << "]\n";
    }
    out << f.key << " = " << f.get(cfg) << '\n';
  }
}

void ValidateConfig(const RunConfig& cfg) {
  try {
    cfg.data.Validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("[data] ") + e.what());
  }
  auto tta_check = [](const tta::TtaConfig& t, const char* sec) {
    try {
      t.Validate();
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("[") + sec + "] " + e.what());
    }
  };
  tta_check(cfg.tta, "tta");
  tta_check(cfg.dynamics.tta, "dynamics");
  if (cfg.hidden == 0) throw ConfigError("pretrain.hidden must be positive");
  if (cfg.suite.kinds.empty() || cfg.suite.severities.empty())
    throw ConfigError("suite.kinds and suite.severities must be non-empty");
  for (int s : cfg.suite.severities)
    if (s < 1 || s > 5) throw ConfigError("suite.severities must lie in 1..5");
  for (int s : cfg.fit.severities)
    if (s < 1 || s > 5) throw ConfigError("fit.severities must lie in 1..5");
  if (cfg.fit.degree < 1 || cfg.fit.degree > 3) throw ConfigError("fit.degree must be 1, 2 or 3");
  if (cfg.dynamics.diagnostics_every == 0) throw ConfigError("dynamics.diagnostics_every must be positive");
  if (cfg.dynamics.topk_exclusion < 0) throw ConfigError("dynamics.topk_exclusion must be >= 0");
  if (cfg.emgmm.k < 2) throw ConfigError("emgmm.k must be >= 2");
  if (cfg.emgmm.dim < 2) throw ConfigError("emgmm.dim must be >= 2");
  if (cfg.emgmm.eta < 0.0) throw ConfigError("emgmm.eta must be >= 0");
}

}  // namespace entropy_lab::harness
