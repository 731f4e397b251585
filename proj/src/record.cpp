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

#include "normlab/record.hpp"

#include <cstdio>

#include "normlab/error.hpp"
#include "normlab/rng.hpp"

namespace normlab {

std::size_t RunRecord::final_l0() const { return final_norm ? l0_size(*final_norm) : 0; }

bool RunRecord::trace_monotone() const {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].fitness < trace[i - 1].fitness) return false;
  }
  return true;
}

std::string config_hash(const nlohmann::json& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(config.dump())));
  return buf;
}

nlohmann::json record_to_json(const RunRecord& r) {
  auto trace = nlohmann::json::array();
  for (const auto& p : r.trace) trace.push_back({p.iteration, p.fitness, p.payoff, p.l0});
  auto grid = nlohmann::json::array();
  for (int row = 0; row < r.grid_rows; ++row) {
    auto line = nlohmann::json::array();
    for (int col = 0; col < r.grid_cols; ++col) {
      line.push_back(r.final_roles.at(static_cast<std::size_t>(row * r.grid_cols + col)));
    }
    grid.push_back(std::move(line));
  }
  nlohmann::json j = {
      {"mode", r.mode},
      {"env_id", r.env_id},
      {"seed", r.seed},
      {"base_seed", r.base_seed},
      {"run_index", r.run_index},
      {"config_hash", r.config_hash},
      {"config", r.config},
      {"roles", r.roles.names()},
      {"trace_columns", {"iteration", "Ft", "R", "L0"}},
      {"trace", trace},
      {"final_roles", grid},
      {"payoff", r.payoff},
      {"fitness", r.fitness},
      {"validation_payoff", r.validation_payoff},
  };
  j["final_norm"] = r.final_norm ? norm_to_json(*r.final_norm, r.roles) : nlohmann::json(nullptr);
  return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
  try {
    RunRecord r;
    r.mode = j.at("mode").get<std::string>();
    r.env_id = j.at("env_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.base_seed = j.value("base_seed", std::uint64_t{0});
    r.run_index = j.value("run_index", 0);
    r.config_hash = j.at("config_hash").get<std::string>();
    r.config = j.at("config");
    r.roles = RoleSet(j.at("roles").get<std::vector<std::string>>());
    for (const auto& p : j.at("trace")) {
      r.trace.push_back({p.at(0).get<int>(), p.at(1).get<double>(), p.at(2).get<double>(),
                         p.at(3).get<std::size_t>()});
    }
    const auto& grid = j.at("final_roles");
    r.grid_rows = static_cast<int>(grid.size());
    r.grid_cols = grid.empty() ? 0 : static_cast<int>(grid.at(0).size());
    for (const auto& line : grid) {
      for (const auto& v : line) r.final_roles.push_back(v.get<RoleId>());
    }
    r.payoff = j.at("payoff").get<double>();
    r.fitness = j.at("fitness").get<double>();
    r.validation_payoff = j.value("validation_payoff", 0.0);
    if (!j.at("final_norm").is_null()) r.final_norm = norm_from_json(j.at("final_norm"), r.roles);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed run record: ") + e.what());
  }
}

std::string trace_csv(const RunRecord& r) {
  std::string out = "# config_hash=" + r.config_hash + " seed=" + std::to_string(r.seed) + "\n";
  out += "iteration,Ft,R,L0\n";
  char buf[96];
  for (const auto& p : r.trace) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%zu\n", p.iteration, p.fitness, p.payoff, p.l0);
    out += buf;
  }
  return out;
}

}  // namespace normlab
