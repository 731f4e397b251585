// Copyright 2026 The normlab Authors.
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

#include "normlab/config.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>

#include "normlab/error.hpp"

namespace normlab {

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kLambda: return "lambda";
    case SweepAxis::kOperators: return "operators";
    case SweepAxis::kAlpha: return "alpha";
  }
  return "lambda";
}

SweepAxis parse_sweep_axis(const std::string& s) {
  if (s == "lambda") return SweepAxis::kLambda;
  if (s == "operators") return SweepAxis::kOperators;
  if (s == "alpha") return SweepAxis::kAlpha;
  throw ConfigError("unknown sweep axis '" + s + "' (expected lambda|operators|alpha)");
}

namespace {

std::string number_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

SweepValue operator_value(const EvoConfig& base, double mp, double mr, double rap, double rdp) {
  SweepValue v;
  v.operators = base;
  v.operators.mp = mp;
  v.operators.mr = mr;
  v.operators.rap = rap;
  v.operators.rdp = rdp;
  v.label = "mp" + number_label(mp) + "_mr" + number_label(mr) + "_rap" + number_label(rap) +
            "_rdp" + number_label(rdp);
  return v;
}

// Typos in a config would otherwise be silently ignored.
void expect_keys(const nlohmann::json& j, const std::string& where,
                 std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

Preset parse_env(const nlohmann::json& e) {
  if (e.is_string()) return find_preset(e.get<std::string>());
  if (!e.is_object()) throw ConfigError("environment entries must be preset ids or objects");
  Preset p;
  if (e.contains("preset")) {
    p = find_preset(e.at("preset").get<std::string>());
    auto merged = game_to_json(p.game);
    for (const auto& [key, value] : e.items()) {
      if (key != "preset" && key != "id") merged[key] = value;
    }
    p.game = game_from_json(merged);
  } else {
    p.game = game_from_json(e);
  }
  if (e.contains("id")) p.id = e.at("id").get<std::string>();
  if (p.id.empty()) throw ConfigError("custom environments need an 'id'");
  return p;
}

}  // namespace

std::vector<SweepValue> operator_grid(const EvoConfig& base) {
  const double probs[] = {0.1, 0.5, 0.9};
  const double rates[] = {0.1, 0.5, 1.0};
  std::vector<SweepValue> out;
  for (double mp : probs)
    for (double mr : rates)
      for (double rap : probs)
        for (double rdp : probs) out.push_back(operator_value(base, mp, mr, rap, rdp));
  return out;
}

std::vector<SweepValue> parse_sweep_values(SweepAxis axis, const nlohmann::json& values,
                                           const EvoConfig& base) {
  std::vector<SweepValue> out;
  if (axis == SweepAxis::kOperators) {
    if (values.is_string()) {
      if (values.get<std::string>() != "grid") throw ConfigError("operator sweep values must be \"grid\" or a list");
      out = operator_grid(base);
    } else if (values.is_array()) {
      for (const auto& v : values) {
        out.push_back(operator_value(base, v.value("mp", base.mp), v.value("mr", base.mr),
                                     v.value("rap", base.rap), v.value("rdp", base.rdp)));
      }
    }
  } else if (values.is_array()) {
    for (const auto& v : values) {
      SweepValue sv;
      sv.number = v.get<double>();
      sv.label = number_label(sv.number);
      out.push_back(sv);
    }
  }
  if (out.empty()) throw ConfigError("sweep values must be a non-empty list");
  for (const auto& v : out) {
    if (axis == SweepAxis::kOperators) v.operators.validate();
    if (axis == SweepAxis::kLambda && !(v.number >= 0.0)) throw ConfigError("sweep lambda values must be >= 0");
    if (axis == SweepAxis::kAlpha && !(v.number > 0.0 && v.number <= 1.0)) {
      throw ConfigError("sweep alpha values must be in (0, 1]");
    }
  }
  return out;
}

void RunConfig::validate() const {
  if (envs.empty()) throw ConfigError("config must name at least one environment");
  for (const auto& e : envs) normlab::validate(e.game);
  learner.validate();
  episode.validate();
  evo.validate();
  ga.validate();
  if (seed_count < 1) throw ConfigError("seeds.count must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (output_dir.empty()) throw ConfigError("output directory must not be empty");
  if (sweep && sweep->values.empty()) throw ConfigError("sweep values must be a non-empty list");
}

nlohmann::json RunConfig::to_json() const {
  auto envs_json = nlohmann::json::array();
  for (const auto& e : envs) {
    auto g = game_to_json(e.game);
    g["id"] = e.id;
    envs_json.push_back(std::move(g));
  }
  RunSetup s{"", {}, learner, episode, evo};
  const auto setup = setup_to_json(s);
  nlohmann::json j = {
      {"envs", envs_json},
      {"learner", setup["learner"]},
      {"episode", setup["episode"]},
      {"evo", setup["evo"]},
      {"ga",
       {{"pop_size", ga.pop_size},
        {"generations", ga.generations},
        {"crossover_rate", ga.crossover_rate},
        {"mutation_p", ga.mutation_p}}},
      {"seeds", {{"base", base_seed}, {"count", seed_count}}},
  };
  if (sweep) {
    auto values = nlohmann::json::array();
    for (const auto& v : sweep->values) values.push_back(v.label);
    j["sweep"] = {{"axis", to_string(sweep->axis)}, {"values", values}};
  }
  return j;
}

std::string RunConfig::hash() const { return config_hash(to_json()); }

RunConfig config_from_json(const nlohmann::json& j) {
  try {
    expect_keys(j, "config", {"env", "envs", "learner", "episode", "evo", "ga", "seeds", "output",
                              "workers", "sweep"});
    RunConfig cfg;
    if (j.contains("env")) cfg.envs.push_back(parse_env(j.at("env")));
    if (j.contains("envs")) {
      for (const auto& e : j.at("envs")) cfg.envs.push_back(parse_env(e));
    }
    if (j.contains("learner")) {
      const auto& l = j.at("learner");
      expect_keys(l, "learner", {"alpha", "epsilon", "omega"});
      read_field(l, "alpha", cfg.learner.alpha);
      read_field(l, "epsilon", cfg.learner.epsilon);
      read_field(l, "omega", cfg.learner.omega);
    }
    if (j.contains("episode")) {
      const auto& e = j.at("episode");
      expect_keys(e, "episode", {"steps", "score_from", "eval_repeats", "rows", "cols", "sanction_mode"});
      read_field(e, "steps", cfg.episode.steps);
      read_field(e, "score_from", cfg.episode.score_from);
      read_field(e, "eval_repeats", cfg.episode.eval_repeats);
      read_field(e, "rows", cfg.episode.dims.rows);
      read_field(e, "cols", cfg.episode.dims.cols);
      if (e.contains("sanction_mode")) {
        const auto mode = e.at("sanction_mode").get<std::string>();
        if (mode == "clamped") {
          cfg.episode.sanction_mode = SanctionMode::kClamped;
        } else if (mode == "literal") {
          cfg.episode.sanction_mode = SanctionMode::kLiteral;
        } else {
          throw ConfigError("episode.sanction_mode must be 'clamped' or 'literal'");
        }
      }
    }
    if (j.contains("evo")) {
      const auto& v = j.at("evo");
      expect_keys(v, "evo", {"lambda", "mp", "mr", "rap", "rdp", "max_iter"});
      read_field(v, "lambda", cfg.evo.lambda);
      read_field(v, "mp", cfg.evo.mp);
      read_field(v, "mr", cfg.evo.mr);
      read_field(v, "rap", cfg.evo.rap);
      read_field(v, "rdp", cfg.evo.rdp);
      read_field(v, "max_iter", cfg.evo.max_iter);
    }
    if (j.contains("ga")) {
      const auto& g = j.at("ga");
      expect_keys(g, "ga", {"pop_size", "generations", "crossover_rate", "mutation_p"});
      read_field(g, "pop_size", cfg.ga.pop_size);
      read_field(g, "generations", cfg.ga.generations);
      read_field(g, "crossover_rate", cfg.ga.crossover_rate);
      read_field(g, "mutation_p", cfg.ga.mutation_p);
    }
    if (j.contains("seeds")) {
      const auto& s = j.at("seeds");
      expect_keys(s, "seeds", {"base", "count"});
      read_field(s, "base", cfg.base_seed);
      read_field(s, "count", cfg.seed_count);
    }
    read_field(j, "output", cfg.output_dir);
    read_field(j, "workers", cfg.workers);
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      expect_keys(s, "sweep", {"axis", "values"});
      SweepSpec spec;
      spec.axis = parse_sweep_axis(s.at("axis").get<std::string>());
      spec.values = parse_sweep_values(spec.axis, s.at("values"), cfg.evo);
      cfg.sweep = std::move(spec);
    }
    cfg.validate();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

RunSetup setup_for(const RunConfig& cfg, const Preset& env) {
  return {env.id, env.game, cfg.learner, cfg.episode, cfg.evo};
}

std::uint64_t run_seed(std::uint64_t base_seed, const std::string& env_id,
                       const std::string& axis_label, int run_index) {
  return derive_seed(base_seed, env_id, axis_label, static_cast<std::uint64_t>(run_index));
}

}  // namespace normlab
