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

// Python bindings. Structured values cross the boundary as JSON text; the
// pure-Python layer in normlab/__init__.py turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "normlab/commands.hpp"
#include "normlab/config.hpp"
#include "normlab/episode.hpp"
#include "normlab/error.hpp"
#include "normlab/evolution.hpp"
#include "normlab/games.hpp"
#include "normlab/norm.hpp"
#include "normlab/record.hpp"
#include "normlab/roles.hpp"
#include "normlab/world.hpp"
#include "normlab/ga.hpp"
#include "normlab/sanctions.hpp"
#include "normlab/stats.hpp"
#include "normlab/svg.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

normlab::RunConfig parse_config(const std::string& config_json) {
  return normlab::config_from_json(json::parse(config_json));
}

normlab::RunSetup setup_from(const std::string& config_json, const std::optional<std::string>& env) {
  const auto cfg = parse_config(config_json);
  if (!env) {
    if (cfg.envs.size() != 1) throw normlab::ConfigError("config has several envs; pass env=...");
    return normlab::setup_for(cfg, cfg.envs.front());
  }
  for (const auto& e : cfg.envs) {
    if (e.id == *env) return normlab::setup_for(cfg, e);
  }
  throw normlab::ConfigError("env '" + *env + "' is not in the config");
}

normlab::Norm norm_from_matrix(const std::vector<std::vector<double>>& m) {
  std::vector<double> flat;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw normlab::ConfigError("norm matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  for (double v : flat) {
    if (!(v >= -normlab::kSanctionBound && v <= normlab::kSanctionBound)) {
      throw normlab::ConfigError("norm entries must lie in [-6, 6]");
    }
  }
  return normlab::Norm(m.size(), flat);
}

std::string dump(const normlab::RunRecord& r) { return normlab::record_to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_normlab, m) {
  m.doc() = "Social norm evolution on spatial role games (native core).";

  py::register_exception<normlab::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<normlab::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<normlab::ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  m.def("presets", [] {
    std::vector<std::string> ids;
    for (const auto& p : normlab::presets()) ids.push_back(p.id);
    return ids;
  });
  m.def("preset_json", [](const std::string& id) { return normlab::game_to_json(normlab::find_preset(id).game).dump(); });
  m.def("normalize_config", [](const std::string& c) { return parse_config(c).to_json().dump(); });
  m.def("config_hash", [](const std::string& c) { return parse_config(c).hash(); });

  m.def("eval_norm",
        [](std::optional<std::vector<std::vector<double>>> matrix, const std::string& config,
           std::optional<std::string> env, std::uint64_t seed) {
          const auto s = setup_from(config, env);
          std::optional<normlab::Norm> norm;
          if (matrix) norm = norm_from_matrix(*matrix);
          normlab::EvalResult r;
          {
            py::gil_scoped_release release;
            r = normlab::eval_norm(norm ? &*norm : nullptr, s.game, s.learner, s.episode, seed);
          }
          std::vector<std::uint64_t> usage;
          if (norm) usage = norm->usage_counts();
          return py::make_tuple(r.score, r.repeat_scores, r.final_roles, usage);
        },
        py::arg("matrix"), py::arg("config"), py::arg("env") = py::none(), py::arg("seed"));

  m.def("episode_trace",
        [](std::optional<std::vector<std::vector<double>>> matrix, const std::string& config,
           std::optional<std::string> env, std::uint64_t seed) {
          const auto s = setup_from(config, env);
          std::optional<normlab::Norm> norm;
          if (matrix) norm = norm_from_matrix(*matrix);
          normlab::GridWorld world(s.episode.dims, normlab::roles_for(s.game).size());
          normlab::reset(world, s.game);
          normlab::Rng rng(seed);
          py::gil_scoped_release release;
          const auto r = normlab::run_episode(world, s.game, norm ? &*norm : nullptr, s.learner, s.episode,
                                              rng, true);
          return normlab::episode_trace_csv(r, normlab::roles_for(s.game));
        },
        py::arg("matrix"), py::arg("config"), py::arg("env") = py::none(), py::arg("seed"));

  m.def("evolve",
        [](const std::string& config, std::optional<std::string> env, std::uint64_t seed) {
          const auto s = setup_from(config, env);
          py::gil_scoped_release release;
          return dump(normlab::evolve_norm(s, seed));
        },
        py::arg("config"), py::arg("env") = py::none(), py::arg("seed"));

  m.def("baseline",
        [](const std::string& mode, const std::string& config, std::optional<std::string> env,
           std::uint64_t seed) {
          const auto cfg = parse_config(config);
          const auto s = setup_from(config, env);
          if (mode == "global") {
            py::gil_scoped_release release;
            return dump(normlab::global_ga(s, cfg.ga, seed));
          }
          const auto bm = normlab::parse_baseline_mode(mode);
          py::gil_scoped_release release;
          return dump(normlab::run_baseline(bm, s, seed));
        },
        py::arg("mode"), py::arg("config"), py::arg("env") = py::none(), py::arg("seed"));

  m.def("run_command",
        [](const std::string& command, const std::string& config, const std::string& mode) {
          const auto cfg = parse_config(config);
          normlab::CommandResult r;
          {
            py::gil_scoped_release release;
            if (command == "evolve") {
              r = normlab::cmd_evolve(cfg);
            } else if (command == "baseline") {
              r = normlab::cmd_baseline(cfg, mode);
            } else if (command == "sweep") {
              r = normlab::cmd_sweep(cfg);
            } else {
              throw normlab::ConfigError("unknown command '" + command + "'");
            }
          }
          std::vector<std::string> records;
          for (const auto& rec : r.records) records.push_back(dump(rec));
          return py::make_tuple(r.out_dir.string(), records);
        },
        py::arg("command"), py::arg("config"), py::arg("mode") = "");

  m.def("render", [](const std::vector<std::string>& paths, const std::string& out_dir) {
    std::vector<std::filesystem::path> in(paths.begin(), paths.end());
    std::vector<std::string> out;
    for (const auto& p : normlab::cmd_render(in, out_dir)) out.push_back(p.string());
    return out;
  });

  m.def("render_svg", [](const std::string& record_json) {
    const auto r = normlab::record_from_json(json::parse(record_json));
    return normlab::render_role_grid(r.final_roles, {r.grid_rows, r.grid_cols}, r.roles);
  });

  m.def("render_rules", [](const std::vector<std::vector<double>>& matrix, const std::string& game) {
    if (game != "pasture" && game != "settlement") throw normlab::ConfigError("game must be settlement or pasture");
    const auto& roles = game == "pasture" ? normlab::pasture_roles() : normlab::settlement_roles();
    return normlab::render_rules(norm_from_matrix(matrix), roles);
  });

  m.def("apply_sanctions",
        [](std::vector<std::size_t> roles, std::vector<double> rewards,
           const std::vector<std::vector<double>>& matrix, int rows, int cols, std::uint64_t seed) {
          normlab::GridWorld w(normlab::Dims{rows, cols}, matrix.size());
          if (roles.size() != w.size() || rewards.size() != w.size()) {
            throw normlab::ConfigError("roles and rewards need rows * cols entries");
          }
          for (auto r : roles) {
            if (r >= matrix.size()) throw normlab::ConfigError("role index out of range");
          }
          std::copy(roles.begin(), roles.end(), w.roles().begin());
          std::copy(rewards.begin(), rewards.end(), w.rewards().begin());
          auto norm = norm_from_matrix(matrix);
          normlab::Rng rng(seed);
          normlab::apply_sanctions(w, &norm, rng);
          return py::make_tuple(std::vector<double>(w.rewards().begin(), w.rewards().end()), norm.usage_counts());
        },
        py::arg("roles"), py::arg("rewards"), py::arg("matrix"), py::arg("rows"), py::arg("cols"),
        py::arg("seed"));

  m.def("wilcoxon_rank_sum", [](const std::vector<double>& x, const std::vector<double>& y) {
    const auto r = normlab::wilcoxon_rank_sum(x, y);
    return py::make_tuple(r.u, r.p_value, r.exact);
  });
}
