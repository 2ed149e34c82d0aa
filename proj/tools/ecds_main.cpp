#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecds/errors.hpp"
#include "ecds/generate.hpp"
#include "ecds/graph.hpp"
#include "ecds/oracle.hpp"
#include "ecds/pipeline.hpp"
#include "ecds/reductions.hpp"

namespace {

using namespace ecds;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_nodes(const NodeSet& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  return out.str();
}

std::string join_edges(const EdgeSet& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i)
    out << (i ? " " : "") << s[i].first << '-' << s[i].second;
  return out.str();
}

struct SolutionFile {
  NodeSet s;
  EdgeSet j;
};

SolutionFile parse_solution(const std::string& text) {
  std::istringstream in(text);
  long long s_count = 0, j_count = 0;
  if (!(in >> s_count >> j_count) || s_count < 0 || j_count < 0)
    throw ParseError("solution: expected node and edge counts");
  SolutionFile out;
  std::vector<int> nodes;
  for (long long i = 0; i < s_count; ++i) {
    long long v;
    if (!(in >> v)) throw ParseError("solution: missing node id");
    nodes.push_back(static_cast<int>(v));
  }
  out.s = sorted_unique(std::move(nodes));
  if (static_cast<long long>(out.s.size()) != s_count)
    throw ParseError("solution: duplicate node id");
  std::vector<Edge> edges;
  for (long long i = 0; i < j_count; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("solution: missing edge line");
    if (u == v) throw ParseError("solution: loop edge");
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  out.j = sorted_unique(std::move(edges));
  if (static_cast<long long>(out.j.size()) != j_count)
    throw ParseError("solution: duplicate edge");
  long long extra;
  if (in >> extra) throw ParseError("solution: trailing content");
  return out;
}

std::string format_solution(const NodeSet& s, const EdgeSet& j) {
  std::ostringstream out;
  out << s.size() << ' ' << j.size() << '\n';
  if (!s.empty()) out << join_nodes(s) << '\n';
  for (auto [u, v] : j) out << u << ' ' << v << '\n';
  return out.str();
}

struct SolveOpts {
  std::string input;
  std::string solution_out;
  int trials = 8;
  std::uint64_t seed = 0;
  std::string emit = "text";
};

int run_solve(const SolveOpts& opt) {
  Graph g = parse_graph(read_file(opt.input));
  bool kv = opt.emit == "kv";
  try {
    SolutionCertificate cert = solve_2ecds(g, opt.trials, opt.seed);
    const BoundChain& b = cert.bounds;
    if (kv) {
      std::cout << "feasible=1\n"
                << "n=" << g.node_count() << "\n"
                << "m=" << g.edge_count() << "\n"
                << "trial=" << cert.trial_index << "\n"
                << "trials_total=" << opt.trials + 1 << "\n"
                << "sigma_max=" << cert.sigma_max << "\n"
                << "s_size=" << cert.s.size() << "\n"
                << "j_size=" << cert.j.size() << "\n"
                << "f_size=" << cert.f.size() << "\n"
                << "s=" << join_nodes(cert.s) << "\n"
                << "j=" << join_edges(cert.j) << "\n"
                << "f=" << join_edges(cert.f) << "\n"
                << "covered_tree_edges=" << b.covered_tree_edges << "\n"
                << "links_used=" << b.links_used << "\n"
                << "greedy_size=" << b.greedy_size << "\n"
                << "j_before_minimalize=" << b.j_before_minimalize << "\n";
    } else {
      std::cout << "graph nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n"
                << "status feasible\n"
                << "winning_trial " << cert.trial_index << " of " << opt.trials + 1 << "\n"
                << "sigma_max " << cert.sigma_max << "\n"
                << "S (" << cert.s.size() << "): " << join_nodes(cert.s) << "\n"
                << "J (" << cert.j.size() << "):\n";
      for (auto [u, v] : cert.j) std::cout << u << ' ' << v << "\n";
      std::cout << "F (" << cert.f.size() << "): " << join_edges(cert.f) << "\n"
                << "bounds covered_tree_edges=" << b.covered_tree_edges
                << " links_used=" << b.links_used << " sigma_max=" << b.sigma_max
                << " greedy_size=" << b.greedy_size
                << " j_before_minimalize=" << b.j_before_minimalize
                << " s_size=" << b.s_size << " j_size=" << b.j_size << "\n";
    }
    if (!opt.solution_out.empty()) {
      std::ofstream out(opt.solution_out, std::ios::binary);
      if (!out) throw ParseError("cannot write file: " + opt.solution_out);
      out << format_solution(cert.s, cert.j);
    }
    return 0;
  } catch (const InfeasibleError& e) {
    if (kv)
      std::cout << "feasible=0\n"
                << "n=" << g.node_count() << "\n"
                << "m=" << g.edge_count() << "\n"
                << "reason=" << e.what() << "\n";
    else
      std::cout << "graph nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n"
                << "status infeasible\n"
                << "reason " << e.what() << "\n";
    return 2;
  }
}

struct VerifyOpts {
  std::string input;
  std::string solution;
};

int run_verify(const VerifyOpts& opt) {
  Graph g = parse_graph(read_file(opt.input));
  SolutionFile sol = parse_solution(read_file(opt.solution));
  for (int v : sol.s)
    if (v < 0 || v >= g.node_count()) throw ParseError("solution: node out of range");
  for (Edge e : sol.j) {
    if (!g.has_edge(e.first, e.second))
      throw ParseError("solution: edge " + std::to_string(e.first) + "-" +
                       std::to_string(e.second) + " is not a graph edge");
    if (!contains(sol.s, e.first) || !contains(sol.s, e.second))
      throw ParseError("solution: edge endpoint outside the node set");
  }
  NodeSet all(static_cast<size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) all[static_cast<size_t>(v)] = v;
  bool ok = is_2ec_subgraph(sol.s, sol.j) && dominates(g, sol.s, all);
  std::cout << (ok ? "valid\n" : "invalid\n");
  return ok ? 0 : 2;
}

struct OracleOpts {
  std::string input;
  int cap = 14;
  std::string emit = "text";
};

int run_oracle(const OracleOpts& opt) {
  Graph g = parse_graph(read_file(opt.input));
  TwoEcdsOptimum node_opt = opt_2ecds(g, opt.cap);
  TwoEcSubgraphOptimum edge_opt = opt_2ec_dominating_subgraph(g, opt.cap);
  bool kv = opt.emit == "kv";
  if (kv) {
    std::cout << "n=" << g.node_count() << "\n"
              << "m=" << g.edge_count() << "\n"
              << "universal_node=" << node_opt.universal_node << "\n"
              << "feasible=" << (node_opt.feasible ? 1 : 0) << "\n";
    if (node_opt.feasible)
      std::cout << "s_size=" << node_opt.nodes.size() << "\n"
                << "s=" << join_nodes(node_opt.nodes) << "\n"
                << "s_edges=" << join_edges(node_opt.edges) << "\n"
                << "jopt_size=" << edge_opt.edges.size() << "\n"
                << "jopt_nodes=" << join_nodes(edge_opt.nodes) << "\n"
                << "jopt_edges=" << join_edges(edge_opt.edges) << "\n";
  } else {
    std::cout << "graph nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    if (node_opt.universal_node == -1) std::cout << "universal_node none\n";
    else std::cout << "universal_node " << node_opt.universal_node << "\n";
    std::cout << "status " << (node_opt.feasible ? "feasible" : "infeasible") << "\n";
    if (node_opt.feasible) {
      std::cout << "node_optimum (" << node_opt.nodes.size() << "): " << join_nodes(node_opt.nodes)
                << "\n"
                << "node_optimum_edges (" << node_opt.edges.size()
                << "): " << join_edges(node_opt.edges) << "\n"
                << "edge_optimum (" << edge_opt.edges.size() << ") on ("
                << edge_opt.nodes.size() << "): " << join_nodes(edge_opt.nodes) << "\n"
                << "edge_optimum_edges: " << join_edges(edge_opt.edges) << "\n";
    }
  }
  return node_opt.feasible ? 0 : 2;
}

int run_reduce_cds_to_gst(const std::string& input) {
  SubsetCDSInstance inst = parse_subset_cds(read_file(input));
  GSTInstance out = subset_cds_to_gst(inst.graph, inst.q_set, inst.r_set);
  std::cout << format_gst(out);
  return 0;
}

int run_reduce_gst_to_cds(const std::string& input) {
  GSTInstance inst = parse_gst(read_file(input));
  SubsetCDSInstance out = gst_to_subset_cds(inst);
  std::cout << format_subset_cds(out);
  return 0;
}

int run_reduce_round(const std::string& input, const std::string& epsilon_text,
                     std::int64_t m_guess, const std::string& emit) {
  GSTInstance inst = parse_gst(read_file(input));
  Rational epsilon = parse_rational(epsilon_text);
  RoundedGST out = round_and_subdivide(inst, epsilon, m_guess);
  if (emit == "kv") {
    std::cout << "mu=" << out.mu.num << "/" << out.mu.den << "\n";
    std::cout << "rounded_cost=";
    for (size_t i = 0; i < out.rounded_cost.size(); ++i)
      std::cout << (i ? " " : "") << out.rounded_cost[i];
    std::cout << "\nnode_map=";
    for (size_t i = 0; i < out.node_map.size(); ++i)
      std::cout << (i ? " " : "") << out.node_map[i];
    std::cout << "\n";
  }
  std::cout << format_gst(out.instance);
  return 0;
}

int run_reduce_partial(const std::string& input, const std::string& weights_path) {
  SubsetCDSInstance inst = parse_subset_cds(read_file(input));
  std::vector<std::int64_t> weights(static_cast<size_t>(inst.graph.node_count()), 1);
  if (!weights_path.empty()) {
    std::istringstream in(read_file(weights_path));
    for (auto& w : weights)
      if (!(in >> w)) throw ParseError("weights: expected one value per node");
  }
  PartialCDSInstance out = subset_cds_to_partial_cds(inst.graph, inst.q_set, inst.r_set, weights);
  std::cout << format_partial_cds(out);
  return 0;
}

struct StatsOpts {
  int n = 8;
  int count = 20;
  double p = 0.5;
  std::uint64_t seed = 0;
  int trials = 8;
  int cap = 14;
  std::string emit = "text";
};

int run_stats(const StatsOpts& opt) {
  int feasible = 0, infeasible = 0, compared = 0;
  long long sigma_sum = 0;
  int sigma_max_seen = 0;
  // ratio buckets: ==1, <=1.25, <=1.5, <=2, >2
  int bucket[5] = {0, 0, 0, 0, 0};
  double ratio_sum = 0.0;
  bool oracle_ok = opt.n <= opt.cap;
  for (int i = 0; i < opt.count; ++i) {
    std::uint64_t inst_seed = opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1);
    Graph g = random_connected_graph(opt.n, opt.p, inst_seed);
    try {
      SolutionCertificate cert = solve_2ecds(g, opt.trials, inst_seed);
      ++feasible;
      sigma_sum += cert.sigma_max;
      sigma_max_seen = std::max(sigma_max_seen, cert.sigma_max);
      if (oracle_ok) {
        TwoEcSubgraphOptimum best = opt_2ec_dominating_subgraph(g, opt.cap);
        if (best.feasible && !best.edges.empty()) {
          double ratio = static_cast<double>(cert.j.size()) / static_cast<double>(best.edges.size());
          ++compared;
          ratio_sum += ratio;
          if (ratio <= 1.0) ++bucket[0];
          else if (ratio <= 1.25) ++bucket[1];
          else if (ratio <= 1.5) ++bucket[2];
          else if (ratio <= 2.0) ++bucket[3];
          else ++bucket[4];
        }
      }
    } catch (const InfeasibleError&) {
      ++infeasible;
    }
  }
  std::cout << std::fixed << std::setprecision(4);
  double sigma_mean = feasible ? static_cast<double>(sigma_sum) / feasible : 0.0;
  double ratio_mean = compared ? ratio_sum / compared : 0.0;
  if (opt.emit == "kv") {
    std::cout << "count=" << opt.count << "\nn=" << opt.n << "\np=" << opt.p
              << "\nseed=" << opt.seed << "\nfeasible=" << feasible
              << "\ninfeasible=" << infeasible << "\nsigma_mean=" << sigma_mean
              << "\nsigma_max=" << sigma_max_seen << "\noracle_compared=" << compared
              << "\nratio_eq_1=" << bucket[0] << "\nratio_le_1.25=" << bucket[1]
              << "\nratio_le_1.5=" << bucket[2] << "\nratio_le_2=" << bucket[3]
              << "\nratio_gt_2=" << bucket[4] << "\nratio_mean=" << ratio_mean << "\n";
  } else {
    std::cout << "instances " << opt.count << " nodes " << opt.n << " p " << opt.p << " seed "
              << opt.seed << "\n"
              << "feasible " << feasible << " infeasible " << infeasible << "\n"
              << "sigma mean " << sigma_mean << " max " << sigma_max_seen << "\n";
    if (oracle_ok)
      std::cout << "oracle compared " << compared << "\n"
                << "ratio ==1.00 " << bucket[0] << "\n"
                << "ratio <=1.25 " << bucket[1] << "\n"
                << "ratio <=1.50 " << bucket[2] << "\n"
                << "ratio <=2.00 " << bucket[3] << "\n"
                << "ratio  >2.00 " << bucket[4] << "\n"
                << "ratio mean " << ratio_mean << "\n";
    else
      std::cout << "oracle skipped (node count above cap)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-edge-connected dominating subgraph solver"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance end to end");
  solve->add_option("--input", solve_opts.input, "graph file")->required();
  solve->add_option("--solution", solve_opts.solution_out, "write the solution here");
  solve->add_option("--trials", solve_opts.trials, "sampled trees per solve");
  solve->add_option("--seed", solve_opts.seed, "rng seed");
  solve->add_option("--emit", solve_opts.emit, "text|kv")
      ->check(CLI::IsMember({"text", "kv"}));

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("--input", verify_opts.input, "graph file")->required();
  verify->add_option("--solution", verify_opts.solution, "solution file")->required();

  OracleOpts oracle_opts;
  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by brute force");
  oracle->add_option("--input", oracle_opts.input, "graph file")->required();
  oracle->add_option("--cap", oracle_opts.cap, "node cap for the exhaustive search");
  oracle->add_option("--emit", oracle_opts.emit, "text|kv")
      ->check(CLI::IsMember({"text", "kv"}));

  CLI::App* reduce = app.add_subcommand("reduce", "instance transformations");
  reduce->require_subcommand(1);
  std::string reduce_input, round_epsilon = "1", partial_weights;
  std::int64_t round_guess = 1;
  std::string round_emit = "text";
  CLI::App* cds_to_gst = reduce->add_subcommand("cds-to-gst", "dominator groups");
  cds_to_gst->add_option("--input", reduce_input, "subset instance file")->required();
  CLI::App* gst_to_cds = reduce->add_subcommand("gst-to-cds", "group terminals");
  gst_to_cds->add_option("--input", reduce_input, "group Steiner file")->required();
  CLI::App* round = reduce->add_subcommand("round", "round costs and subdivide");
  round->add_option("--input", reduce_input, "group Steiner file with costs")->required();
  round->add_option("--epsilon", round_epsilon, "positive rational a/b")->required();
  round->add_option("--m-guess", round_guess, "guessed max useful cost")->required();
  round->add_option("--emit", round_emit, "text|kv")->check(CLI::IsMember({"text", "kv"}));
  CLI::App* partial = reduce->add_subcommand("partial", "partial-domination form");
  partial->add_option("--input", reduce_input, "subset instance file")->required();
  partial->add_option("--weights", partial_weights, "node weight file");

  StatsOpts stats_opts;
  CLI::App* stats = app.add_subcommand("stats", "random-instance summary");
  stats->add_option("--n", stats_opts.n, "nodes per instance")->required();
  stats->add_option("--count", stats_opts.count, "instance count");
  stats->add_option("--p", stats_opts.p, "extra edge probability");
  stats->add_option("--seed", stats_opts.seed, "rng seed");
  stats->add_option("--trials", stats_opts.trials, "sampled trees per solve");
  stats->add_option("--cap", stats_opts.cap, "oracle node cap");
  stats->add_option("--emit", stats_opts.emit, "text|kv")
      ->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (oracle->parsed()) return run_oracle(oracle_opts);
    if (reduce->parsed()) {
      if (cds_to_gst->parsed()) return run_reduce_cds_to_gst(reduce_input);
      if (gst_to_cds->parsed()) return run_reduce_gst_to_cds(reduce_input);
      if (round->parsed()) return run_reduce_round(reduce_input, round_epsilon, round_guess, round_emit);
      if (partial->parsed()) return run_reduce_partial(reduce_input, partial_weights);
    }
    if (stats->parsed()) return run_stats(stats_opts);
  } catch (const InfeasibleError& e) {
    std::cout << "status infeasible\nreason " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
