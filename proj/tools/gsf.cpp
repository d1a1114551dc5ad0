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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "gsf/bench.hpp"
#include "gsf/circle.hpp"
#include "gsf/families.hpp"
#include "gsf/io.hpp"
#include "gsf/orbits.hpp"
#include "gsf/synthesis.hpp"

using namespace gsf;

namespace {

struct GraphSource {
  std::string file;
  std::string family;
  int n = 0;
  int l = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", file, "graph file (edge list or dense 0/1 block)");
    cmd->add_option("--family", family,
                    "generated family: path|cycle|complete|star|rgs|rgs-many|rgs-ordered|"
                    "rgs-many-ordered|rgs-encoded|wheel5|wheel7|bw3");
    cmd->add_option("--n", n, "family size parameter");
    cmd->add_option("--l", l, "leaves per core (rgs-many / rgs-encoded)");
  }

  Graph load() const {
    if (!file.empty()) return read_graph_file(file);
    if (family == "path") return make_path(n);
    if (family == "cycle") return make_cycle(n);
    if (family == "complete") return make_complete(n);
    if (family == "star") return make_star(n);
    if (family == "rgs") return make_rgs(n);
    if (family == "rgs-many") return make_rgs_many_leaves(n, l);
    if (family == "rgs-ordered") return rgs_ordering(n);
    if (family == "rgs-many-ordered") return rgs_many_leaves_ordering(n, l);
    if (family == "rgs-encoded") return rgs_encoded_ordering(n, l);
    if (family == "wheel5") return make_wheel(5);
    if (family == "wheel7") return make_wheel(7);
    if (family == "bw3") return make_bw3();
    if (family.empty()) throw std::runtime_error("need --in FILE or --family KIND");
    throw std::runtime_error("unknown family: " + family);
  }
};

std::vector<int> parse_ordering(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
}

nlohmann::json split_json(const Split& s) {
  return {{"v1", s.v1.members()}, {"v2", s.v2.members()}, {"a", s.a.members()}, {"b", s.b.members()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emitter-based photonic graph state synthesis and graph toolkit"};
  app.require_subcommand(1);

  auto* syn = app.add_subcommand("synthesize", "build and verify a generation circuit");
  GraphSource syn_src;
  syn_src.attach(syn);
  std::string syn_optimizer = "h1";
  std::string syn_ordering, syn_out, syn_format = "json";
  OptimizerOptions syn_opts;
  int syn_lc = 0, syn_prune = 0, syn_emitter_cutoff = 0, syn_future_cutoff = -1;
  bool syn_backsub = false, syn_exhaust = false, syn_sweep = false, syn_trace = false;
  std::uint64_t syn_seed = 1;
  syn->add_option("--optimizer", syn_optimizer, "naive|h1|h2|brute")->capture_default_str();
  syn->add_option("--ordering", syn_ordering, "emission ordering, comma-separated vertex labels");
  syn->add_flag("--backsub", syn_backsub, "back-substitute before every absorption");
  syn->add_flag("--exhaust-free-pa", syn_exhaust, "exhaust all free-absorption checks");
  syn->add_option("--lc-rounds", syn_lc, "local complementation rounds (brute force)");
  syn->add_option("--prune", syn_prune, "brute-force realizations kept per level");
  syn->add_option("--emitter-cutoff", syn_emitter_cutoff, "candidate absorbers inspected (h2)");
  syn->add_option("--future-cutoff", syn_future_cutoff, "future absorptions examined (h2)");
  syn->add_flag("--recurse-further", syn_opts.recurse_further, "open nested recursions (h2)");
  syn->add_flag("--variant-sweep", syn_sweep, "run the three option variants, keep the best");
  syn->add_flag("--trace", syn_trace, "record per-step graph snapshots");
  syn->add_option("--seed", syn_seed, "verification seed");
  syn->add_option("--out", syn_out, "write the circuit here");
  syn->add_option("--format", syn_format, "json|text circuit output")->capture_default_str();

  auto* ben = app.add_subcommand("benchmark", "seeded random-graph optimizer sweep");
  BenchmarkConfig cfg;
  std::string ben_optimizers = "naive,h1,h2";
  std::string ben_out, ben_json;
  bool ben_no_timing = false, ben_sweep = false;
  int ben_lc = 0, ben_prune = 0;
  ben->add_option("--np-min", cfg.np_min, "smallest photon count")->capture_default_str();
  ben->add_option("--np-max", cfg.np_max, "largest photon count")->capture_default_str();
  ben->add_option("--samples", cfg.samples, "graphs per size")->capture_default_str();
  ben->add_option("--p", cfg.edge_probability, "edge probability")->capture_default_str();
  ben->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  ben->add_option("--optimizers", ben_optimizers, "comma list of naive|h1|h2|brute")
      ->capture_default_str();
  ben->add_flag("--variant-sweep", ben_sweep, "sweep the option variants for the heuristics");
  ben->add_option("--lc-rounds", ben_lc, "brute-force LC rounds");
  ben->add_option("--prune", ben_prune, "brute-force pruning per level");
  ben->add_flag("--no-timing", ben_no_timing, "omit wall times for byte-identical output");
  ben->add_option("--threads", cfg.threads, "worker threads (0: GSF_THREADS or hardware)");
  ben->add_option("--out", ben_out, "CSV output file (default stdout)");
  ben->add_option("--json", ben_json, "aggregate JSON output file");

  auto* orb = app.add_subcommand("orbit", "LC orbits and orbit counting");
  GraphSource orb_src;
  orb_src.attach(orb);
  bool orb_count = false, orb_noniso = false, orb_keep = false, orb_members = false;
  std::string orb_out;
  std::uint64_t orb_budget = 1u << 22;
  orb->add_flag("--count", orb_count, "report e(G), k(G), l(G) and the mu flag");
  orb->add_flag("--non-isomorphic", orb_noniso, "repeater pattern orbit (rgs families only)");
  orb->add_flag("--keep-isomorphs", orb_keep, "full labeled orbit instead of isomorph-free");
  orb->add_flag("--members", orb_members, "emit orbit members in the graph text format");
  orb->add_option("--budget", orb_budget, "orbit size budget");
  orb->add_option("--out", orb_out, "output file (default stdout)");

  auto* rec = app.add_subcommand("recognize", "circle-graph recognition");
  GraphSource rec_src;
  rec_src.attach(rec);
  std::string rec_out;
  rec->add_option("--out", rec_out, "output file (default stdout)");

  auto* fam = app.add_subcommand("families", "LC families of all labeled connected graphs");
  int fam_n = 4;
  std::string fam_out;
  fam->add_option("--n", fam_n, "graph order")->capture_default_str();
  fam->add_option("--out", fam_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*syn) {
      syn_opts.backsub_global = syn_backsub;
      syn_opts.exhaust_free_pa = syn_exhaust;
      syn_opts.lc_rounds = syn_lc;
      if (syn_prune > 0) syn_opts.prune_per_level = syn_prune;
      if (syn_emitter_cutoff > 0) syn_opts.emitter_cutoff = syn_emitter_cutoff;
      if (syn_future_cutoff >= 0) syn_opts.future_cutoff = syn_future_cutoff;
      syn_opts.variant_sweep = syn_sweep;
      syn_opts.keep_trace = syn_trace;
      syn_opts.verify_seeds = {syn_seed, syn_seed + 1};
      Graph g = syn_src.load();
      std::vector<int> ordering;
      if (!syn_ordering.empty()) ordering = parse_ordering(syn_ordering);
      SynthesisResult res = synthesize_any(optimizer_from_name(syn_optimizer), g, ordering, syn_opts);
      nlohmann::json summary{{"emitter_cnots", res.emitter_cnots},
                             {"n_emitters", res.num_emitters},
                             {"verified", true}};
      std::cout << summary.dump() << "\n";
      if (!syn_out.empty()) {
        if (syn_format == "json")
          write_output(syn_out, circuit_to_json(res.circuit).dump(2) + "\n");
        else
          write_output(syn_out, circuit_pretty(res.circuit));
      }
      return 0;
    }

    if (*ben) {
      cfg.optimizers.clear();
      std::stringstream in(ben_optimizers);
      std::string tok;
      while (std::getline(in, tok, ',')) cfg.optimizers.push_back(optimizer_from_name(tok));
      cfg.options.variant_sweep = ben_sweep;
      cfg.options.lc_rounds = ben_lc;
      if (ben_prune > 0) cfg.options.prune_per_level = ben_prune;
      cfg.timing = !ben_no_timing;
      auto records = run_benchmark(cfg);
      write_output(ben_out, benchmark_csv(cfg, records));
      if (!ben_json.empty()) write_output(ben_json, benchmark_aggregate(cfg, records).dump(2) + "\n");
      return 0;
    }

    if (*orb) {
      Graph g = orb_src.load();
      nlohmann::json summary;
      std::vector<Graph> members;
      bool have_members = false;
      if (orb_noniso) {
        if (orb_src.family == "rgs" || orb_src.family == "rgs-ordered")
          members = map_out_rgs_orbit(orb_src.n);
        else if (orb_src.family == "rgs-many" || orb_src.family == "rgs-many-ordered")
          members = map_out_rgs_orbit_many_leaves(orb_src.n, orb_src.l);
        else
          throw std::runtime_error("--non-isomorphic needs an rgs family");
        have_members = true;
      } else if (!orb_count || orb_members) {
        members = map_out_orbit(g, orb_keep, orb_budget);
        have_members = true;
      }
      if (have_members) summary["n_members"] = members.size();
      if (orb_count) {
        BigInt e = euler_index_e(g);
        auto kr = bineighborhood_k(g);
        summary["e"] = e.str();
        summary["k"] = kr.k.str();
        summary["in_mu"] = kr.in_mu;
        if (e % kr.k == 0)
          summary["l"] = BigInt(e / kr.k).str();
        else
          summary["l_warning"] = "e(G) not divisible by k(G); counting is valid for circle graphs";
      }
      std::ostringstream body;
      body << summary.dump() << "\n";
      if (orb_members)
        for (const auto& m : members) {
          body << "#\n";
          write_graph(body, m);
        }
      write_output(orb_out, body.str());
      return 0;
    }

    if (*rec) {
      Graph g = rec_src.load();
      nlohmann::json out;
      std::optional<Split> split;
      if (g.order() >= 4) split = find_split(g);
      out["prime"] = g.order() >= 4 && !split.has_value();
      if (split) out["split"] = split_json(*split);
      auto word = word_from_graph(g);
      out["is_circle"] = word.has_value();
      if (word) out["word"] = word->letters;
      write_output(rec_out, out.dump() + "\n");
      return 0;
    }

    if (*fam) {
      std::vector<Graph> all;
      int m = fam_n * (fam_n - 1) / 2;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        Graph g(fam_n);
        int bit = 0;
        for (int u = 1; u <= fam_n; ++u)
          for (int v = u + 1; v <= fam_n; ++v, ++bit)
            if ((mask >> bit) & 1) g.add_edge(u, v);
        if (is_connected(g)) all.push_back(std::move(g));
      }
      auto part = classify_lc_families(all);
      nlohmann::json out{{"n", fam_n},
                         {"connected_labeled_graphs", all.size()},
                         {"lc_families", part.num_families}};
      write_output(fam_out, out.dump() + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
