// Copyright 2026 The gsf developers
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

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "gsf/random.hpp"
#include "gsf/synthesis.hpp"

namespace gsf {

inline int thread_pool_size(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GSF_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

// Runs fn(i) for i in [0, count) on a small pool; results are kept in input
// order by the callers.
template <typename F>
void parallel_for(std::size_t count, F&& fn, int threads = 0) {
  int n = std::min<std::size_t>(thread_pool_size(threads), count ? count : 1);
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int t = 0; t < n; ++t)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct BenchmarkConfig {
  int np_min = 6;
  int np_max = 12;
  int samples = 100;
  double edge_probability = 0.5;
  std::uint64_t seed = 1;
  std::vector<Optimizer> optimizers{Optimizer::Naive, Optimizer::H1, Optimizer::H2};
  OptimizerOptions options;  // passed to every optimizer; variant_sweep applies to h1/h2
  bool timing = true;
  int threads = 0;

  void check() const {
    if (samples < 1) throw std::invalid_argument("benchmark: samples >= 1");
    if (!(edge_probability > 0.0 && edge_probability < 1.0))
      throw std::invalid_argument("benchmark: edge probability in (0,1)");
    if (np_min < 2 || np_max < np_min) throw std::invalid_argument("benchmark: bad n_p range");
  }
};

struct BenchmarkRecord {
  int graph_id = 0;
  int n_p = 0;
  int n_e = 0;
  std::vector<int> cnots;        // aligned with config.optimizers
  std::vector<double> reduction;  // vs the naive count, percent
  double wall_ms = 0.0;
};

inline const char* optimizer_name(Optimizer o) {
  switch (o) {
    case Optimizer::Naive: return "naive";
    case Optimizer::H1: return "h1";
    case Optimizer::H2: return "h2";
    case Optimizer::Brute: return "brute";
  }
  return "?";
}

inline Optimizer optimizer_from_name(const std::string& s) {
  for (Optimizer o : {Optimizer::Naive, Optimizer::H1, Optimizer::H2, Optimizer::Brute})
    if (s == optimizer_name(o)) return o;
  throw std::invalid_argument("unknown optimizer: " + s);
}

// Seeded random-connected-graph sweep over every optimizer in the config.
// Records are produced in deterministic input order regardless of the pool
// size; every circuit is verified before its numbers are published.
inline std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig& cfg) {
  cfg.check();
  int sizes = cfg.np_max - cfg.np_min + 1;
  std::size_t total = std::size_t(sizes) * cfg.samples;
  std::vector<BenchmarkRecord> records(total);
  parallel_for(
      total,
      [&](std::size_t idx) {
        int np = cfg.np_min + int(idx / cfg.samples);
        int sample = int(idx % cfg.samples);
        std::uint64_t gseed = splitmix64(cfg.seed ^ splitmix64(np * 1000003ULL + sample));
        Graph g = random_connected_graph(np, cfg.edge_probability, gseed);
        BenchmarkRecord rec;
        rec.graph_id = int(idx);
        rec.n_p = np;
        auto t0 = std::chrono::steady_clock::now();
        int naive_cnots = -1;
        for (Optimizer o : cfg.optimizers) {
          SynthesisResult r = synthesize(o, g, {}, cfg.options);
          rec.n_e = r.num_emitters;
          rec.cnots.push_back(r.emitter_cnots);
          if (o == Optimizer::Naive) naive_cnots = r.emitter_cnots;
        }
        for (int c : rec.cnots)
          rec.reduction.push_back(naive_cnots > 0 ? 100.0 * (naive_cnots - c) / naive_cnots : 0.0);
        auto t1 = std::chrono::steady_clock::now();
        rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        records[idx] = std::move(rec);
      },
      cfg.threads);
  return records;
}

// Fixed, versioned column layout; a comment line carries the version tag.
inline std::string benchmark_csv(const BenchmarkConfig& cfg, const std::vector<BenchmarkRecord>& recs) {
  std::ostringstream out;
  out << "# gsf benchmark csv v1; seed=" << cfg.seed << " p=" << cfg.edge_probability
      << " samples=" << cfg.samples << "\n";
  out << "graph_id,n_p,n_e";
  for (Optimizer o : cfg.optimizers) out << "," << optimizer_name(o) << "_cnots";
  for (Optimizer o : cfg.optimizers) out << "," << optimizer_name(o) << "_reduction_pct";
  out << ",wall_ms\n";
  char buf[64];
  for (const auto& r : recs) {
    out << r.graph_id << "," << r.n_p << "," << r.n_e;
    for (int c : r.cnots) out << "," << c;
    for (double red : r.reduction) {
      std::snprintf(buf, sizeof buf, "%.2f", red);
      out << "," << buf;
    }
    if (cfg.timing) {
      std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
      out << "," << buf;
    } else {
      out << ",";
    }
    out << "\n";
  }
  return out.str();
}

// Mean and maximum reduction per graph size and optimizer, recomputed from
// the records.
inline nlohmann::json benchmark_aggregate(const BenchmarkConfig& cfg,
                                          const std::vector<BenchmarkRecord>& recs) {
  nlohmann::json out;
  out["seed"] = cfg.seed;
  out["edge_probability"] = cfg.edge_probability;
  out["samples"] = cfg.samples;
  nlohmann::json per_np = nlohmann::json::array();
  for (int np = cfg.np_min; np <= cfg.np_max; ++np) {
    nlohmann::json entry;
    entry["n_p"] = np;
    for (std::size_t k = 0; k < cfg.optimizers.size(); ++k) {
      double sum = 0, mx = 0;
      int count = 0;
      for (const auto& r : recs) {
        if (r.n_p != np) continue;
        sum += r.reduction[k];
        mx = std::max(mx, r.reduction[k]);
        ++count;
      }
      nlohmann::json stats;
      stats["mean_reduction_pct"] = count ? sum / count : 0.0;
      stats["max_reduction_pct"] = mx;
      entry[optimizer_name(cfg.optimizers[k])] = stats;
    }
    per_np.push_back(std::move(entry));
  }
  out["per_np"] = per_np;
  return out;
}

}  // namespace gsf
