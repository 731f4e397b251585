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

#include "normlab/norm.hpp"

#include <algorithm>
#include <cstdio>

#include "normlab/error.hpp"

namespace normlab {

Norm::Norm(std::size_t k) : k_(k), values_(k * k, 0.0), usage_(k * k, 0) {}

Norm::Norm(std::size_t k, std::vector<double> values)
    : k_(k), values_(std::move(values)), usage_(k * k, 0) {
  require(values_.size() == k * k, "norm matrix must hold k*k values");
  for (double v : values_) {
    if (!(v >= -kSanctionBound && v <= kSanctionBound)) {
      throw ConfigError("sanction value out of [-6, 6]: " + std::to_string(v));
    }
  }
}

void Norm::set(RoleId from, RoleId to, double v) {
  require(v >= -kSanctionBound && v <= kSanctionBound, "sanction value out of bounds");
  const std::size_t i = from * k_ + to;
  values_[i] = v;
  if (v == 0.0) usage_[i] = 0;
}

void Norm::reset_usage() { std::fill(usage_.begin(), usage_.end(), 0); }

void Norm::set_usage(std::vector<std::uint64_t> usage) {
  require(usage.size() == k_ * k_, "usage matrix must hold k*k counters");
  for (std::size_t i = 0; i < usage.size(); ++i) {
    require(values_[i] != 0.0 || usage[i] == 0, "usage recorded on an empty rule");
  }
  usage_ = std::move(usage);
}

Norm random_norm(std::size_t k, Rng& rng) {
  require(k >= 2, "random_norm needs at least 2 roles");
  Norm n(k);
  for (RoleId i = 0; i < k; ++i) {
    for (RoleId j = 0; j < k; ++j) {
      const bool present = uniform01(rng) < 0.5;
      const double v = uniform_real(rng, -kSanctionBound, kSanctionBound);
      if (present) n.set(i, j, v);
    }
  }
  return n;
}

std::size_t l0_size(const Norm& n) {
  return static_cast<std::size_t>(
      std::count_if(n.values().begin(), n.values().end(), [](double v) { return v != 0.0; }));
}

std::vector<std::string> render_rules(const Norm& n, const RoleSet& roles) {
  require(roles.size() == n.roles(), "role set does not match norm size");
  std::vector<std::string> out;
  for (RoleId i = 0; i < n.roles(); ++i) {
    for (RoleId j = 0; j < n.roles(); ++j) {
      const double v = n.at(i, j);
      if (v == 0.0) continue;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", v);
      out.push_back(roles.display_name(i) + " ought to " +
                    (v > 0 ? "encourage " : "discourage ") + roles.display_name(j) + " by " +
                    buf);
    }
  }
  return out;
}

std::string sign_pattern(const Norm& n) {
  std::string s;
  s.reserve(n.values().size());
  for (double v : n.values()) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

std::string describe_sign_pattern(const Norm& n, const RoleSet& roles) {
  std::string s;
  for (RoleId i = 0; i < n.roles(); ++i) {
    for (RoleId j = 0; j < n.roles(); ++j) {
      const double v = n.at(i, j);
      if (v == 0.0) continue;
      if (!s.empty()) s += ';';
      s += roles.name(i) + "->" + roles.name(j) + (v > 0 ? ":+" : ":-");
    }
  }
  return s.empty() ? "empty" : s;
}

nlohmann::json norm_to_json(const Norm& n, const RoleSet& roles) {
  const std::size_t k = n.roles();
  auto matrix = nlohmann::json::array();
  auto usage = nlohmann::json::array();
  for (RoleId i = 0; i < k; ++i) {
    auto mrow = nlohmann::json::array();
    auto urow = nlohmann::json::array();
    for (RoleId j = 0; j < k; ++j) {
      mrow.push_back(n.at(i, j));
      urow.push_back(n.usage(i, j));
    }
    matrix.push_back(std::move(mrow));
    usage.push_back(std::move(urow));
  }
  return {{"roles", roles.names()}, {"matrix", matrix}, {"usage", usage}};
}

Norm norm_from_json(const nlohmann::json& j, const RoleSet& roles) {
  try {
    if (j.contains("roles") && j.at("roles").get<std::vector<std::string>>() != roles.names()) {
      throw ConfigError("norm roles do not match the game's roles");
    }
    const std::size_t k = roles.size();
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != k) throw ConfigError("norm matrix must be k x k");
    std::vector<double> values;
    values.reserve(k * k);
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != k) throw ConfigError("norm matrix must be k x k");
      for (const auto& v : row) values.push_back(v.get<double>());
    }
    Norm n(k, std::move(values));
    if (j.contains("usage")) {
      std::vector<std::uint64_t> usage;
      for (const auto& row : j.at("usage")) {
        for (const auto& v : row) usage.push_back(v.get<std::uint64_t>());
      }
      if (usage.size() != k * k) throw ConfigError("norm usage must be k x k");
      n.set_usage(std::move(usage));
    }
    return n;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed norm: ") + e.what());
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("malformed norm: ") + e.what());
  }
}

}  // namespace normlab
