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

// Command-line front end: evolve, baseline, sweep, render.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 I/O error,
// 1 anything else.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "normlab/commands.hpp"
#include "normlab/config.hpp"
#include "normlab/error.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config;
  std::optional<int> seeds;
  std::optional<int> workers;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration")->required();
  cmd->add_option("--seeds", f.seeds, "number of seeds (overrides the config)");
  cmd->add_option("--workers", f.workers, "worker threads (overrides the config)");
  cmd->add_option("--out", f.out, "output directory (overrides the config)");
}

normlab::RunConfig resolve(const CommonFlags& f) {
  normlab::RunConfig cfg = normlab::load_config(f.config);
  if (f.seeds) cfg.seed_count = *f.seeds;
  if (f.workers) cfg.workers = *f.workers;
  if (f.out) cfg.output_dir = *f.out;
  cfg.validate();
  return cfg;
}

// "0,0.1,0.2" -> [0, 0.1, 0.2]; "grid" passes through for the operators axis.
nlohmann::json values_from_flag(const std::string& text) {
  if (text == "grid") return text;
  nlohmann::json out = nlohmann::json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw normlab::ConfigError("--values: not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void report(const normlab::CommandResult& r) {
  std::cout << r.records.size() << " run(s) written under " << r.out_dir.string() << "\n";
  for (const auto& s : r.summaries) {
    std::printf("%-18s lambda=%-5g n=%-3zu R=%.4f (se %.4f)  L0=%.3f (se %.3f)  modal=%s x%zu\n",
                s.env_id.c_str(), s.lambda, s.n, s.mean_payoff, s.se_payoff, s.mean_l0, s.se_l0,
                s.modal_type.c_str(), s.modal_count);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normlab: social norm evolution on spatial role games"};
  app.require_subcommand(1);

  CommonFlags evolve_flags;
  auto* evolve = app.add_subcommand("evolve", "evolve norms for every env and seed");
  add_common(evolve, evolve_flags);

  CommonFlags baseline_flags;
  std::string mode;
  auto* baseline = app.add_subcommand("baseline", "run a comparison baseline");
  add_common(baseline, baseline_flags);
  baseline->add_option("--mode", mode, "global | selfish | altruist | selfish_altruist")->required();

  CommonFlags sweep_flags;
  std::optional<std::string> axis;
  std::optional<std::string> values;
  auto* sweep = app.add_subcommand("sweep", "evolve norms along one parameter axis");
  add_common(sweep, sweep_flags);
  sweep->add_option("--axis", axis, "lambda | operators | alpha (overrides the config)");
  sweep->add_option("--values", values, "comma-separated values, or 'grid' for operators");

  std::vector<std::string> record_paths;
  std::string render_out = "render";
  auto* render = app.add_subcommand("render", "re-emit SVG grids and rule statements from RunRecords");
  render->add_option("records", record_paths, "RunRecord JSON files")->required()->check(CLI::ExistingFile);
  render->add_option("--out", render_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (evolve->parsed()) {
      report(normlab::cmd_evolve(resolve(evolve_flags)));
    } else if (baseline->parsed()) {
      report(normlab::cmd_baseline(resolve(baseline_flags), mode));
    } else if (sweep->parsed()) {
      normlab::RunConfig cfg = resolve(sweep_flags);
      if (axis || values) {
        normlab::SweepSpec spec = cfg.sweep.value_or(normlab::SweepSpec{});
        if (axis) spec.axis = normlab::parse_sweep_axis(*axis);
        if (values) {
          spec.values = normlab::parse_sweep_values(spec.axis, values_from_flag(*values), cfg.evo);
        } else if (axis && cfg.sweep && cfg.sweep->axis != spec.axis) {
          throw normlab::ConfigError("--axis differs from the config sweep; pass --values too");
        }
        cfg.sweep = spec;
      }
      report(normlab::cmd_sweep(cfg));
    } else if (render->parsed()) {
      std::vector<std::filesystem::path> paths(record_paths.begin(), record_paths.end());
      for (const auto& p : normlab::cmd_render(paths, render_out)) std::cout << p.string() << "\n";
    }
  } catch (const normlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const normlab::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
