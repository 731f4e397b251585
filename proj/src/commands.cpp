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

#include "normlab/commands.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "normlab/error.hpp"
#include "normlab/svg.hpp"

namespace normlab {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string provenance(const RunRecord& r) {
  return "config_hash=" + r.config_hash + " seed=" + std::to_string(r.seed) +
         " base_seed=" + std::to_string(r.base_seed);
}

/// Runs fn(0..n-1) on up to `workers` threads. Rethrows the first failure.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers && static_cast<std::size_t>(w) < n; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Job {
  Preset env;
  RunSetup setup;
  std::string label;  // sweep axis label, empty otherwise
  int run_index = 0;
};

std::string seed_stem(int run_index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "seed_%03d", run_index);
  return buf;
}

using Runner = std::function<RunRecord(const RunSetup&, std::uint64_t)>;

std::vector<RunRecord> run_jobs(const RunConfig& cfg, const std::vector<Job>& jobs,
                                const Runner& runner, const fs::path& root, const std::string& tag) {
  std::vector<RunRecord> records(jobs.size());
  std::mutex log_mutex;
  parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
    const auto& job = jobs[i];
    const auto seed = run_seed(cfg.base_seed, job.env.id, job.label, job.run_index);
    RunRecord r = runner(job.setup, seed);
    r.base_seed = cfg.base_seed;
    r.run_index = job.run_index;
    fs::path dir = root;
    if (!job.label.empty()) dir /= job.label;
    dir /= job.env.id;
    write_run_files(r, dir, seed_stem(job.run_index));
    {
      std::lock_guard lock(log_mutex);
      std::fprintf(stderr, "[%s] %s%s%s run %d: R=%.4f L0=%zu\n", tag.c_str(), job.env.id.c_str(),
                   job.label.empty() ? "" : " @ ", job.label.c_str(), job.run_index, r.payoff,
                   r.final_l0());
    }
    records[i] = std::move(r);
  });
  return records;
}

std::vector<Job> plain_jobs(const RunConfig& cfg) {
  std::vector<Job> jobs;
  for (const auto& env : cfg.envs) {
    for (int s = 0; s < cfg.seed_count; ++s) jobs.push_back({env, setup_for(cfg, env), "", s});
  }
  return jobs;
}

// Splits consecutive runs of `per_group` records into summaries.
std::vector<SeedSummary> summarize_groups(const std::vector<RunRecord>& records, std::size_t per_group) {
  std::vector<SeedSummary> out;
  for (std::size_t i = 0; i < records.size(); i += per_group) {
    std::vector<RunRecord> group(records.begin() + static_cast<long>(i),
                                 records.begin() + static_cast<long>(i + per_group));
    out.push_back(summarize(group));
  }
  return out;
}

std::string summary_file(const RunConfig& cfg, const std::vector<SeedSummary>& summaries,
                         const std::vector<std::string>& prefixes, const std::string& prefix_header) {
  std::string text = "# config_hash=" + cfg.hash() + " base_seed=" + std::to_string(cfg.base_seed) + "\n";
  text += prefix_header + summary_csv_header() + "\n";
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    text += (prefixes.empty() ? "" : prefixes[i] + ",") + summary_csv_row(summaries[i]) + "\n";
  }
  return text;
}

CommandResult finish_plain(const RunConfig& cfg, std::vector<RunRecord> records, const fs::path& root) {
  CommandResult result;
  result.out_dir = root;
  result.summaries = summarize_groups(records, static_cast<std::size_t>(cfg.seed_count));
  write_text(root / "summary.csv", summary_file(cfg, result.summaries, {}, ""));
  result.records = std::move(records);
  return result;
}

}  // namespace

void write_run_files(const RunRecord& record, const fs::path& dir, const std::string& stem) {
  write_text(dir / (stem + ".json"), record_to_json(record).dump(1) + "\n");
  write_text(dir / (stem + "_trace.csv"), trace_csv(record));
  write_text(dir / (stem + "_roles.svg"),
             render_role_grid(record.final_roles, {record.grid_rows, record.grid_cols}, record.roles,
                              provenance(record)));
  std::string rules = "# " + provenance(record) + "\n";
  if (record.final_norm) {
    for (const auto& line : render_rules(*record.final_norm, record.roles)) rules += line + "\n";
  }
  write_text(dir / (stem + "_rules.txt"), rules);
}

CommandResult cmd_evolve(const RunConfig& cfg) {
  cfg.validate();
  const fs::path root = fs::path(cfg.output_dir) / "evolve";
  auto records = run_jobs(cfg, plain_jobs(cfg),
                          [](const RunSetup& s, std::uint64_t seed) { return evolve_norm(s, seed); },
                          root, "evolve");
  return finish_plain(cfg, std::move(records), root);
}

CommandResult cmd_baseline(const RunConfig& cfg, const std::string& mode) {
  Runner runner;
  if (mode == "global") {
    const GaConfig ga = cfg.ga;
    runner = [ga](const RunSetup& s, std::uint64_t seed) { return global_ga(s, ga, seed); };
  } else {
    const BaselineMode m = parse_baseline_mode(mode);
    runner = [m](const RunSetup& s, std::uint64_t seed) { return run_baseline(m, s, seed); };
  }
  cfg.validate();
  const fs::path root = fs::path(cfg.output_dir) / mode;
  auto records = run_jobs(cfg, plain_jobs(cfg), runner, root, mode);
  return finish_plain(cfg, std::move(records), root);
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  cfg.validate();
  if (!cfg.sweep) throw ConfigError("sweep requires an axis and a non-empty list of values");
  const auto& spec = *cfg.sweep;
  const fs::path root = fs::path(cfg.output_dir) / ("sweep-" + to_string(spec.axis));

  std::vector<Job> jobs;
  for (const auto& value : spec.values) {
    for (const auto& env : cfg.envs) {
      RunSetup setup = setup_for(cfg, env);
      switch (spec.axis) {
        case SweepAxis::kLambda: setup.evo.lambda = value.number; break;
        case SweepAxis::kAlpha: setup.learner.alpha = value.number; break;
        case SweepAxis::kOperators: setup.evo = value.operators; break;
      }
      for (int s = 0; s < cfg.seed_count; ++s) jobs.push_back({env, setup, value.label, s});
    }
  }
  auto records = run_jobs(cfg, jobs,
                          [](const RunSetup& s, std::uint64_t seed) { return evolve_norm(s, seed); },
                          root, "sweep");

  std::string rows = "# config_hash=" + cfg.hash() + " base_seed=" + std::to_string(cfg.base_seed) + "\n";
  rows += "axis_value,env_id,seed,R,L0,Ft\n";
  char buf[128];
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::snprintf(buf, sizeof buf, ",%llu,%.17g,%zu,%.17g\n", static_cast<unsigned long long>(r.seed),
                  r.payoff, r.final_l0(), r.fitness);
    rows += jobs[i].label + "," + r.env_id + buf;
  }
  write_text(root / "sweep.csv", rows);

  CommandResult result;
  result.out_dir = root;
  result.summaries = summarize_groups(records, static_cast<std::size_t>(cfg.seed_count));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < records.size(); i += static_cast<std::size_t>(cfg.seed_count)) {
    labels.push_back(jobs[i].label);
  }
  write_text(root / "summary.csv", summary_file(cfg, result.summaries, labels, "axis_value,"));
  result.records = std::move(records);
  return result;
}

std::vector<fs::path> cmd_render(const std::vector<fs::path>& records, const fs::path& out_dir) {
  std::vector<fs::path> written;
  for (const auto& path : records) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read run record '" + path.string() + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    const RunRecord r = record_from_json(j);
    // Records from different modes or envs share file names, so the output
    // name carries both.
    const auto stem = r.mode + "_" + r.env_id + "_" + path.stem().string();
    const fs::path svg = out_dir / (stem + "_roles.svg");
    const fs::path rules = out_dir / (stem + "_rules.txt");
    write_text(svg, render_role_grid(r.final_roles, {r.grid_rows, r.grid_cols}, r.roles, provenance(r)));
    std::string text = "# " + provenance(r) + "\n";
    if (r.final_norm) {
      for (const auto& line : render_rules(*r.final_norm, r.roles)) text += line + "\n";
    }
    write_text(rules, text);
    written.push_back(svg);
    written.push_back(rules);
  }
  return written;
}

}  // namespace normlab
