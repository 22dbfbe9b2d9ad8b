// qconn: command-line front end for the qconn library.
//
// Exit codes: 0 success, 1 checks ran and something failed, 2 bad usage or IO.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qconn/certifier.hpp"
#include "qconn/connectivity.hpp"
#include "qconn/extremal.hpp"
#include "qconn/graph6.hpp"
#include "qconn/harness.hpp"
#include "qconn/serialize.hpp"
#include "qconn/spectral.hpp"

using nlohmann::json;
using namespace qconn;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Anything thrown ends the run with kExitUsage; failed checks return
// kExitFailure explicitly.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::string line;
  if (path.empty() || path == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::vector<Graph> out;
  std::size_t number = 0;
  for (auto& line : read_lines(path)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw UsageError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError("no graphs in input");
  return out;
}

// "0-1,2-5" -> edges
std::vector<Edge> parse_edges(const std::string& spec) {
  std::vector<Edge> edges;
  if (spec.empty()) return edges;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("bad edge '" + item + "', expected u-v");
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("bad edge '" + item + "'");
    }
  }
  return edges;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

void print_report(const CheckReport& r, bool as_json) {
  if (as_json) {
    print_json(r);
    return;
  }
  std::cout << r.check << ": " << to_string(r.status) << '\n';
  for (const auto& f : r.findings) std::cout << "  " << f << '\n';
  std::cout << "  " << r.evidence.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless-Laplacian spectral certificates for k-connectivity"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  double tol = kDefaultTolerance;
  app.add_flag("--json", as_json, "Machine-readable output")->group("Global");
  app.add_option("--tol", tol, "Bracket tolerance")->check(CLI::PositiveNumber)->group("Global");

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "graph6 file, one graph per line ('-' or omitted: stdin)");
  };

  auto* compute_q = app.add_subcommand("compute-q", "Q-index bracket of each input graph");
  add_input(compute_q);
  bool adjacency = false;
  compute_q->add_flag("--adjacency", adjacency, "Adjacency spectral radius instead");

  auto* kappa_cmd = app.add_subcommand("kappa", "Vertex connectivity with a minimum cut");
  add_input(kappa_cmd);

  int k = 3;
  int delta = 3;
  int n = 0;
  auto* certify_cmd = app.add_subcommand("certify", "Run the spectral k-connectivity certificate");
  add_input(certify_cmd);
  certify_cmd->add_option("-k,--k", k, "Connectivity target")->required();
  std::optional<int> declared_delta;
  certify_cmd->add_option("--delta", declared_delta, "Declared minimum degree (default: delta(G))");

  std::string family = "A";
  std::string removed_spec;
  auto* construct = app.add_subcommand("construct", "Build A(n,k,delta), M(n,k) or L(n,k) as graph6");
  construct->add_option("family", family, "A, M or L")->check(CLI::IsMember({"A", "M", "L"}));
  construct->add_option("--n", n, "Order")->required();
  construct->add_option("--k", k, "k");
  construct->add_option("--delta", delta, "delta (A only)");
  construct->add_option("--remove", removed_spec, "Edges to delete from A, e.g. 0-1,3-7");

  std::string check_name;
  auto* verify = app.add_subcommand("verify", "Run one structural or spectral check");
  verify->add_option("check", check_name, "Check name")
      ->required()
      ->check(CLI::IsMember({"edge-bound", "density", "first-family", "second-family", "x-entries", "orderings",
                             "entry-spread", "second-family-below", "edge-count-chain", "z1-nonempty"}));
  verify->add_option("--input", input, "graph6 file for graph checks");
  verify->add_option("--n", n, "Order (0: F(k,delta))");
  verify->add_option("--k", k, "k");
  verify->add_option("--delta", delta, "delta");
  verify->add_option("--remove", removed_spec, "Removed edge set E' (u-v,...)");

  CampaignConfig cfg;
  std::string mode_name;
  std::string corpus;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "Run a verification campaign");
  sweep->add_option("mode", mode_name, "edge-bound | density | certify-families | family-sweep | counterexample | certify-one")
      ->required();
  sweep->add_option("--k", cfg.k, "k");
  sweep->add_option("--delta", cfg.delta, "delta");
  sweep->add_option("--n-min", cfg.n_min, "Smallest order (family modes: the order; 0 means F)");
  sweep->add_option("--n-max", cfg.n_max, "Largest order");
  sweep->add_option("--seed", cfg.seed, "Random seed");
  sweep->add_option("--budget", cfg.budget, "Random graphs to draw");
  sweep->add_option("--rejection-budget", cfg.rejection_budget, "Rejection attempts per random graph");
  sweep->add_option("--corpus", corpus, "graph6 corpus instead of enumeration");
  sweep->add_option("--out", output, "Write the JSON report here");
  sweep->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--lenient", cfg.lenient, "Skip malformed corpus lines");
  sweep->add_option("--item-limit", cfg.item_limit, "Keep per-item results up to this many items");

  auto* encode = app.add_subcommand("encode", "Edge list ('n' then 'u v' lines) to graph6");
  add_input(encode);
  auto* decode = app.add_subcommand("decode", "graph6 to edge list");
  add_input(decode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute_q) {
      json all = json::array();
      for (const auto& g : read_graphs(input)) {
        const auto est = adjacency ? adjacency_spectral_radius(g, tol) : q_index(g, tol);
        if (as_json) {
          all.push_back(estimate_summary(est));
        } else {
          std::printf("%.12f [%.12f, %.12f] iterations=%zu%s\n", est.midpoint(), est.lower, est.upper,
                      est.iterations, est.converged ? "" : " (not converged)");
        }
      }
      if (as_json) print_json(all);
      return 0;
    }

    if (*kappa_cmd) {
      json all = json::array();
      for (const auto& g : read_graphs(input)) {
        const auto r = vertex_connectivity(g);
        if (as_json) {
          all.push_back(r);
        } else {
          std::cout << "kappa=" << r.kappa << " cut={" << join_ints(r.cut) << "} parts=" << r.parts.size() << '\n';
        }
      }
      if (as_json) print_json(all);
      return 0;
    }

    if (*certify_cmd) {
      json all = json::array();
      bool violation = false;
      for (const auto& g : read_graphs(input)) {
        const auto v = certify(g, k, tol, declared_delta);
        violation = violation || v.theorem_violation();
        if (as_json) {
          all.push_back(v);
        } else {
          std::printf("%s n=%d delta=%d threshold=%lld q in [%.10f, %.10f]", to_string(v.outcome), v.n, v.delta,
                      static_cast<long long>(v.threshold), v.spectral.lower, v.spectral.upper);
          if (v.connectivity) std::printf(" kappa=%d", v.connectivity->kappa);
          if (v.membership) std::printf(" family=%s |E'|=%zu", to_string(v.membership->family), v.membership->removed.size());
          std::printf("\n");
        }
      }
      if (as_json) print_json(all);
      return violation ? kExitFailure : 0;
    }

    if (*construct) {
      Graph g;
      json meta;
      if (family == "A") {
        const ExtremalParams p{n, k, delta};
        const auto m = make_member(p, parse_edges(removed_spec));
        g = m.graph;
        meta = m;
      } else if (family == "M") {
        g = build_M(n, k);
        meta = {{"family", "M"}, {"n", n}, {"k", k}};
      } else {
        g = build_L(n, k);
        meta = {{"family", "L"}, {"n", n}, {"k", k}};
      }
      if (as_json) {
        meta["graph6"] = write_graph6(g);
        print_json(meta);
      } else {
        std::cout << write_graph6(g) << '\n';
      }
      return 0;
    }

    if (*verify) {
      CheckReport rep;
      if (check_name == "edge-bound" || check_name == "density") {
        const auto graphs = read_graphs(input);
        if (graphs.size() != 1) throw UsageError("graph checks take exactly one graph");
        rep = check_name == "edge-bound" ? check_edge_bound(graphs[0], tol)
                                         : check_density_condition(graphs[0], k, delta);
      } else {
        const int order = n > 0 ? n : static_cast<int>(threshold_F(k, delta));
        const ExtremalParams p{order, k, delta};
        const auto removed = parse_edges(removed_spec);
        const bool have_member = !removed_spec.empty();
        if (check_name == "first-family") {
          rep = check_first_family(p, removed, tol);
        } else if (check_name == "second-family") {
          rep = check_second_family(p, removed, tol);
        } else if (check_name == "second-family-below") {
          rep = check_second_family_below(p, tol);
        } else if (check_name == "edge-count-chain") {
          rep = verify_edge_count_chain(p);
        } else if (check_name == "z1-nonempty") {
          rep = check_z1_nonempty(p);
        } else {
          const double vec_tol = std::min(tol, kEigenvectorTolerance);
          std::optional<FamilyMember> member;
          std::string note;
          if (have_member) {
            member = make_member(p, removed);
          } else {
            auto best = find_empirical_maximizer(p, vec_tol);
            note = "maximizer: empirical over " + std::to_string(best.representatives) + " representatives";
            member = std::move(best.member);
          }
          if (check_name == "x-entries") {
            rep = check_x_entries(*member, vec_tol);
          } else if (check_name == "orderings") {
            rep = check_orderings(*member, vec_tol);
          } else {
            rep = check_entry_spread(*member, !have_member, vec_tol);
          }
          if (!note.empty()) rep.evidence["maximizer"] = note;
          rep.evidence["removed"] = member->removed;
        }
      }
      print_report(rep, as_json);
      return rep.ok() ? 0 : kExitFailure;
    }

    if (*sweep) {
      try {
        cfg.mode = parse_campaign_mode(mode_name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      cfg.tolerance = tol;
      if (!corpus.empty()) cfg.corpus = corpus;
      if (!output.empty()) cfg.output = output;
      const auto report = run_campaign(cfg);
      if (as_json) {
        print_json(report_json(report));
      } else {
        std::cout << to_string(cfg.mode) << ": tested=" << report.tested << " passed=" << report.passed
                  << " failed=" << report.failed << " skipped=" << report.skipped << " undecided=" << report.undecided
                  << " violations=" << report.violations.size() << '\n';
        for (const auto& v : report.violations) std::cout << "  #" << v.index << ' ' << v.graph6 << '\n';
      }
      return report.clean() ? 0 : kExitFailure;
    }

    if (*encode) {
      int order = -1;
      Graph g;
      std::size_t number = 0;
      for (const auto& line : read_lines(input)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<long> nums;
        long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) throw UsageError("line " + std::to_string(number) + ": not an integer list");
        if (order < 0) {
          if (nums.size() != 1 || nums[0] < 0) throw UsageError("line " + std::to_string(number) + ": expected order");
          order = static_cast<int>(nums[0]);
          g = Graph(order);
          continue;
        }
        if (nums.size() != 2) throw UsageError("line " + std::to_string(number) + ": expected 'u v'");
        try {
          g.add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
        } catch (const std::invalid_argument& e) {
          throw UsageError("line " + std::to_string(number) + ": " + e.what());
        }
      }
      if (order < 0) throw UsageError("empty edge list");
      std::cout << write_graph6(g) << '\n';
      return 0;
    }

    if (*decode) {
      json all = json::array();
      for (const auto& g : read_graphs(input)) {
        if (as_json) {
          all.push_back({{"n", g.order()}, {"edges", g.edges()}});
        } else {
          std::cout << g.order() << '\n';
          for (const auto& e : g.edges()) std::cout << e.u << ' ' << e.v << '\n';
        }
      }
      if (as_json) print_json(all);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "qconn: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
