#include "qconn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "qconn/certifier.hpp"
#include "qconn/enumerate.hpp"
#include "qconn/extremal.hpp"
#include "qconn/graph6.hpp"
#include "qconn/serialize.hpp"

namespace qconn {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0,1) from the top 53 bits; identical on every platform, unlike
// std::uniform_real_distribution.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

struct Tally {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::uint64_t undecided = 0;
  double min_slack = INFINITY;

  void merge(const Tally& o) {
    tested += o.tested;
    violations += o.violations;
    undecided += o.undecided;
    min_slack = std::min(min_slack, o.min_slack);
  }
};

struct Partial {
  std::uint64_t tested = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t undecided = 0;
  std::vector<Violation> violations;
  std::vector<std::pair<std::uint64_t, json>> items;
  std::map<int, Tally> per_n;
  std::map<std::string, std::uint64_t> tags;

  void merge(Partial&& o) {
    tested += o.tested;
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    undecided += o.undecided;
    for (auto& v : o.violations) violations.push_back(std::move(v));
    for (auto& it : o.items) items.push_back(std::move(it));
    for (const auto& [n, t] : o.per_n) per_n[n].merge(t);
    for (const auto& [tag, c] : o.tags) tags[tag] += c;
  }

  void count_status(CheckStatus s) {
    ++tested;
    switch (s) {
      case CheckStatus::kPass:
      case CheckStatus::kVacuous:
      case CheckStatus::kInformational: ++passed; break;
      case CheckStatus::kFail: ++failed; break;
      case CheckStatus::kHypothesisFailed: ++skipped; break;
      case CheckStatus::kUndecided: ++undecided; break;
    }
  }
};

// Runs fn(shard) on `threads` workers and merges in shard order. Every
// worker owns its Partial; ordering is restored by sorting on item index.
Partial run_sharded(unsigned threads, const std::function<Partial(Shard)>& fn) {
  threads = std::max(1u, threads);
  std::vector<Partial> parts(threads);
  if (threads == 1) {
    parts[0] = fn({0, 1});
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          parts[t] = fn({t, threads});
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Partial out;
  for (auto& p : parts) out.merge(std::move(p));
  std::sort(out.violations.begin(), out.violations.end(),
            [](const Violation& a, const Violation& b) { return a.index < b.index; });
  std::sort(out.items.begin(), out.items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int resolve_order(const CampaignConfig& c) {
  if (c.n_min > 0) return c.n_min;
  return static_cast<int>(threshold_F(c.k, c.delta));
}


void edge_bound_item(Partial& part, std::uint64_t key, const Graph& g, double tol, bool keep_items) {
  const auto rep = check_edge_bound(g, tol);
  part.count_status(rep.status);
  auto& tally = part.per_n[g.order()];
  ++tally.tested;
  tally.min_slack = std::min(tally.min_slack, rep.evidence["slack"].get<double>());
  if (rep.status == CheckStatus::kUndecided) ++tally.undecided;
  if (rep.status == CheckStatus::kFail) {
    ++tally.violations;
    part.violations.push_back({key, write_graph6(g), rep.evidence});
  }
  if (keep_items) {
    json item = rep.evidence;
    item["index"] = key;
    item["status"] = to_string(rep.status);
    part.items.emplace_back(key, std::move(item));
  }
}

Partial edge_bound_campaign(const CampaignConfig& c, Report& report) {
  if (c.corpus) {
    std::vector<std::pair<std::uint64_t, Graph>> graphs;
    stream_corpus(*c.corpus, [&](std::uint64_t line, const Graph& g) { graphs.emplace_back(line, g); }, c.lenient);
    const bool keep = graphs.size() <= c.item_limit;
    report.items_truncated = !keep;
    return run_sharded(c.threads, [&](Shard s) {
      Partial part;
      for (std::size_t i = s.index; i < graphs.size(); i += s.count) {
        const auto& [line, g] = graphs[i];
        if (g.order() < 2 || !is_connected(g)) {
          ++part.tested;
          ++part.skipped;
          continue;
        }
        edge_bound_item(part, line, g, c.tolerance, keep);
      }
      return part;
    });
  }
  if (c.n_min < 2 || c.n_max < c.n_min || c.n_max > kMaxUnrestrictedOrder) {
    throw std::invalid_argument("edge-bound sweep needs 2 <= n_min <= n_max <= 7");
  }
  std::uint64_t total = 0;
  for (int n = c.n_min; n <= c.n_max; ++n) total += enumeration_size({n, std::nullopt});
  const bool keep = total <= c.item_limit;
  report.items_truncated = !keep;
  return run_sharded(c.threads, [&](Shard s) {
    Partial part;
    std::uint64_t offset = 0;
    for (int n = c.n_min; n <= c.n_max; ++n) {
      const EnumerationSpec spec{n, std::nullopt};
      const auto sum = enumerate_labeled_graphs(
          spec, [](const Graph& g) { return is_connected(g); },
          [&](std::uint64_t idx, const Graph& g) { edge_bound_item(part, offset + idx, g, c.tolerance, keep); }, s);
      part.tested += sum.emitted - sum.accepted;
      part.skipped += sum.emitted - sum.accepted;
      offset += enumeration_size(spec);
    }
    return part;
  });
}


void density_item(Partial& part, std::uint64_t key, const Graph& g, int k, int delta, bool keep_items) {
  const auto rep = check_density_condition(g, k, delta);
  part.count_status(rep.status);
  auto& tally = part.per_n[g.order()];
  ++tally.tested;
  if (rep.evidence.contains("via")) ++part.tags[rep.evidence["via"].get<std::string>()];
  if (rep.status == CheckStatus::kVacuous) ++part.tags["density-not-met"];
  if (rep.status == CheckStatus::kFail) {
    ++tally.violations;
    part.violations.push_back({key, write_graph6(g), rep.evidence});
  }
  if (keep_items) {
    json item = rep.evidence;
    item["index"] = key;
    item["status"] = to_string(rep.status);
    part.items.emplace_back(key, std::move(item));
  }
}

Partial density_campaign(const CampaignConfig& c, Report& report) {
  if (c.corpus) {
    std::vector<std::pair<std::uint64_t, Graph>> graphs;
    stream_corpus(*c.corpus, [&](std::uint64_t line, const Graph& g) { graphs.emplace_back(line, g); }, c.lenient);
    const bool keep = graphs.size() <= c.item_limit;
    report.items_truncated = !keep;
    return run_sharded(c.threads, [&](Shard s) {
      Partial part;
      for (std::size_t i = s.index; i < graphs.size(); i += s.count) {
        density_item(part, graphs[i].first, graphs[i].second, c.k, c.delta, keep);
      }
      return part;
    });
  }
  if (c.n_min < 1 || c.n_max < c.n_min) throw std::invalid_argument("density sweep needs 1 <= n_min <= n_max");
  std::vector<EnumerationSpec> specs;
  std::uint64_t total = 0;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t twice_bound =
        static_cast<std::int64_t>(n) * (n - 1) - 2 * static_cast<std::int64_t>(c.delta - c.k + 3) * (n - c.delta - 2);
    // Graphs with 2m > twice_bound: at most this many missing edges.
    const std::int64_t budget = pairs - (twice_bound / 2 + 1);
    if (budget < 0) continue;
    specs.push_back({n, static_cast<int>(std::min<std::int64_t>(budget, pairs))});
    total += enumeration_size(specs.back());
  }
  const bool keep = total <= c.item_limit;
  report.items_truncated = !keep;
  report.summary["enumerated"] = total;
  return run_sharded(c.threads, [&](Shard s) {
    Partial part;
    std::uint64_t offset = 0;
    for (const auto& spec : specs) {
      const auto sum = enumerate_labeled_graphs(
          spec,
          [&](const Graph& g) {
            const auto prof = degree_profile(g);
            return prof.connected && prof.min_degree >= c.delta;
          },
          [&](std::uint64_t idx, const Graph& g) { density_item(part, offset + idx, g, c.k, c.delta, keep); }, s);
      part.tested += sum.emitted - sum.accepted;
      part.skipped += sum.emitted - sum.accepted;
      offset += enumeration_size(spec);
    }
    return part;
  });
}


json verdict_item(std::uint64_t index, const Verdict& v) {
  return {{"index", index},
          {"outcome", to_string(v.outcome)},
          {"delta", v.delta},
          {"threshold", v.threshold},
          {"q_lower", v.spectral.lower},
          {"q_upper", v.spectral.upper},
          {"kappa", v.connectivity ? json(v.connectivity->kappa) : json(nullptr)}};
}

void count_verdict(Partial& part, std::uint64_t index, const Graph& g, const Verdict& v) {
  ++part.tested;
  ++part.tags[to_string(v.outcome)];
  switch (v.outcome) {
    case Outcome::kKConnectedCertified:
    case Outcome::kExceptionalFamily:
    case Outcome::kConditionNotMet: ++part.passed; break;
    case Outcome::kHypothesisFailed: ++part.skipped; break;
    case Outcome::kUndecidedNumeric: ++part.undecided; break;
    case Outcome::kTheoremViolation:
      ++part.failed;
      part.violations.push_back({index, write_graph6(g), json(v)});
      break;
  }
}

Partial certify_corpus(const CampaignConfig& c, Report& report) {
  if (!c.corpus) throw std::invalid_argument("certify-one needs a corpus");
  std::vector<std::pair<std::uint64_t, Graph>> graphs;
  stream_corpus(*c.corpus, [&](std::uint64_t line, const Graph& g) { graphs.emplace_back(line, g); }, c.lenient);
  const bool keep = graphs.size() <= c.item_limit;
  report.items_truncated = !keep;
  return run_sharded(c.threads, [&](Shard s) {
    Partial part;
    for (std::size_t i = s.index; i < graphs.size(); i += s.count) {
      const auto& [line, g] = graphs[i];
      const auto v = certify(g, c.k, c.tolerance);
      count_verdict(part, line, g, v);
      if (keep) {
        json item = v;
        item["index"] = line;
        part.items.emplace_back(line, std::move(item));
      }
    }
    return part;
  });
}

Graph perturbed_extremal(const ExtremalParams& p, std::mt19937_64& rng) {
  auto built = build_A(p);
  auto& g = built.graph;
  const auto& part = built.partition;
  std::vector<int> yz = part.y;
  yz.insert(yz.end(), part.z.begin(), part.z.end());
  const int removals = static_cast<int>(below(rng, removal_bound(p) + 4));
  for (int r = 0; r < removals; ++r) {
    const int a = yz[below(rng, yz.size())];
    const int b = yz[below(rng, yz.size())];
    if (a != b) g.remove_edge(a, b);
  }
  const int bridges = static_cast<int>(below(rng, 3));
  for (int r = 0; r < bridges; ++r) {
    g.add_edge(part.x[below(rng, part.x.size())], part.z[below(rng, part.z.size())]);
  }
  if (below(rng, 4) == 0) {
    const int a = static_cast<int>(below(rng, p.n));
    const int b = static_cast<int>(below(rng, p.n));
    if (a != b) g.remove_edge(a, b);
  }
  return std::move(g);
}

Partial counterexample_campaign(const CampaignConfig& c, Report& report) {
  const ExtremalParams p{resolve_order(c), c.k, c.delta};
  validate_certified_range(p);
  const bool keep = c.budget <= c.item_limit;
  report.items_truncated = !keep;
  report.summary["n"] = p.n;
  return run_sharded(c.threads, [&](Shard s) {
    Partial part;
    for (std::uint64_t i = s.index; i < c.budget; i += s.count) {
      const std::uint64_t item_seed = splitmix64(c.seed ^ splitmix64(i));
      std::mt19937_64 rng(item_seed);
      Graph g;
      const char* generator;
      if (i % 4 == 0) {
        generator = "dense";
        const double prob = 0.95 + 0.05 * unit(rng);
        g = random_graph(p.n, prob, c.k, splitmix64(item_seed), c.rejection_budget);
      } else {
        generator = "perturbed-extremal";
        g = perturbed_extremal(p, rng);
      }
      ++part.tags[std::string("generator:") + generator];
      const auto v = certify(g, c.k, c.tolerance);
      count_verdict(part, i, g, v);
      if (keep) {
        json item = verdict_item(i, v);
        item["generator"] = generator;
        part.items.emplace_back(i, std::move(item));
      }
    }
    return part;
  });
}

struct Task {
  std::string name;
  std::function<void(Partial&, std::uint64_t)> run;
};

Partial run_tasks(const CampaignConfig& c, const std::vector<Task>& tasks) {
  return run_sharded(c.threads, [&](Shard s) {
    Partial part;
    for (std::size_t i = s.index; i < tasks.size(); i += s.count) tasks[i].run(part, i);
    return part;
  });
}

Partial certify_families_campaign(const CampaignConfig& c, Report& report) {
  if (c.corpus) return certify_corpus(c, report);
  const ExtremalParams p{resolve_order(c), c.k, c.delta};
  validate_certified_range(p);
  report.summary["n"] = p.n;
  std::vector<Task> tasks;
  auto expect = [&](std::string name, Graph g, Outcome want, std::optional<std::vector<Edge>> want_removed) {
    tasks.push_back({name, [&c, name, g = std::move(g), want, want_removed](Partial& part, std::uint64_t idx) {
                       const auto v = certify(g, c.k, c.tolerance, c.delta);
                       json item = verdict_item(idx, v);
                       item["case"] = name;
                       item["expected"] = to_string(want);
                       bool ok = v.outcome == want;
                       if (ok && want_removed) ok = v.membership && v.membership->removed.size() == want_removed->size();
                       if (v.outcome == Outcome::kUndecidedNumeric) {
                         ++part.tested;
                         ++part.undecided;
                       } else if (ok) {
                         ++part.tested;
                         ++part.passed;
                       } else {
                         ++part.tested;
                         ++part.failed;
                         part.violations.push_back({idx, write_graph6(g), json(v)});
                       }
                       if (v.theorem_violation()) ++part.tags["theorem_violation"];
                       part.items.emplace_back(idx, std::move(item));
                     }});
  };
  expect("complete", complete(p.n), Outcome::kKConnectedCertified, std::nullopt);
  expect("A", build_A(p).graph, Outcome::kExceptionalFamily, std::vector<Edge>{});
  for (int size = 1; size <= removal_bound(p) + 1; ++size) {
    const bool first = size <= removal_bound(p);
    for (const auto& orbit : enumerate_Eprime_orbits(p, size)) {
      const auto m = make_member(p, orbit.edges);
      if (m.flagged()) {
        tasks.push_back({orbit.pattern, [](Partial& part, std::uint64_t) {
                           ++part.tested;
                           ++part.skipped;
                         }});
        continue;
      }
      expect((first ? "A1 " : "A2 ") + orbit.pattern, m.graph,
             first ? Outcome::kExceptionalFamily : Outcome::kConditionNotMet,
             first ? std::optional<std::vector<Edge>>(orbit.edges) : std::nullopt);
    }
  }
  tasks.push_back({"proof-chain", [p](Partial& part, std::uint64_t idx) {
                     const auto rep = verify_edge_count_chain(p);
                     part.count_status(rep.status);
                     part.items.emplace_back(idx, json(rep));
                   }});
  return run_tasks(c, tasks);
}

Partial family_sweep_campaign(const CampaignConfig& c, Report& report) {
  const ExtremalParams p{resolve_order(c), c.k, c.delta};
  validate_certified_range(p);
  const int bound = removal_bound(p);
  const double vec_tol = std::min(c.tolerance, kEigenvectorTolerance);
  std::vector<Task> tasks;
  auto check_task = [&](std::string name, std::function<CheckReport()> check, std::optional<Graph> g) {
    tasks.push_back({name, [name, check = std::move(check), g = std::move(g)](Partial& part, std::uint64_t idx) {
                       const auto rep = check();
                       part.count_status(rep.status);
                       json item = rep;
                       item["case"] = name;
                       if (rep.status == CheckStatus::kFail) {
                         part.violations.push_back({idx, g ? write_graph6(*g) : std::string(), item});
                       }
                       part.items.emplace_back(idx, std::move(item));
                     }});
  };
  std::uint64_t flagged = 0;
  std::uint64_t representatives = 0;
  for (int size = 0; size <= bound + 1; ++size) {
    const bool first = size <= bound;
    for (const auto& orbit : enumerate_Eprime_orbits(p, size)) {
      auto m = make_member(p, orbit.edges);
      ++representatives;
      if (m.flagged()) {
        ++flagged;
        continue;
      }
      const std::string tag = (first ? "A1 " : "A2 ") + orbit.pattern;
      if (first) {
        check_task("first-family " + tag, [p, e = orbit.edges, t = c.tolerance] { return check_first_family(p, e, t); }, m.graph);
      } else {
        check_task("second-family " + tag, [p, e = orbit.edges, t = c.tolerance] { return check_second_family(p, e, t); }, m.graph);
      }
      check_task("x-entries " + tag, [m, vec_tol] { return check_x_entries(m, vec_tol); }, m.graph);
    }
  }
  const auto maximizer = find_empirical_maximizer(p, vec_tol);
  report.summary["maximizer"] = "empirical over " + std::to_string(maximizer.representatives) + " representatives";
  report.summary["maximizer_member"] = maximizer.member;
  report.summary["maximizer_q"] = estimate_summary(maximizer.estimate);
  report.summary["representatives"] = representatives;
  report.summary["flagged_skipped"] = flagged;
  check_task("orderings maximizer", [m = maximizer.member, vec_tol] { return check_orderings(m, vec_tol); },
             maximizer.member.graph);
  check_task("entry-spread maximizer", [m = maximizer.member, vec_tol] { return check_entry_spread(m, true, vec_tol); },
             maximizer.member.graph);
  check_task("second-family-below", [p, t = c.tolerance] { return check_second_family_below(p, t); }, std::nullopt);
  check_task("z1-nonempty", [p] { return check_z1_nonempty(p); }, std::nullopt);
  check_task("edge-count-chain", [p] { return verify_edge_count_chain(p); }, std::nullopt);
  report.summary["n"] = p.n;
  return run_tasks(c, tasks);
}

void write_report(const Report& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << report_json(r).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report file " + path);
}

}  // namespace

const char* to_string(CampaignMode m) {
  switch (m) {
    case CampaignMode::kEdgeBound: return "edge-bound";
    case CampaignMode::kDensity: return "density";
    case CampaignMode::kCertifyFamilies: return "certify-families";
    case CampaignMode::kFamilySweep: return "family-sweep";
    case CampaignMode::kCounterexample: return "counterexample";
    case CampaignMode::kCertifyOne: return "certify-one";
  }
  return "?";
}

CampaignMode parse_campaign_mode(const std::string& name) {
  for (auto m : {CampaignMode::kEdgeBound, CampaignMode::kDensity, CampaignMode::kCertifyFamilies, CampaignMode::kFamilySweep,
                 CampaignMode::kCounterexample, CampaignMode::kCertifyOne}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown campaign mode '" + name + "'");
}

json config_json(const CampaignConfig& c) {
  return {{"mode", to_string(c.mode)},
          {"k", c.k},
          {"delta", c.delta},
          {"n_min", c.n_min},
          {"n_max", c.n_max},
          {"tolerance", c.tolerance},
          {"seed", c.seed},
          {"budget", c.budget},
          {"rejection_budget", c.rejection_budget},
          {"corpus", c.corpus ? json(*c.corpus) : json(nullptr)},
          {"lenient", c.lenient}};
}

json report_json(const Report& r, bool with_timing) {
  json j{{"schema", 1},
         {"config", config_json(r.config)},
         {"counters",
          {{"tested", r.tested},
           {"passed", r.passed},
           {"failed", r.failed},
           {"skipped", r.skipped},
           {"undecided", r.undecided}}},
         {"summary", r.summary}};
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"index", x.index}, {"graph6", x.graph6}, {"detail", x.detail}});
  j["violations"] = v;
  if (r.items_truncated) {
    j["items"] = nullptr;
    j["items_omitted"] = true;
  } else {
    j["items"] = r.items;
  }
  if (with_timing) j["wall_clock_seconds"] = r.wall_clock_seconds;
  return j;
}

Report run_campaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (!(config.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (config.threads == 0) throw std::invalid_argument("threads must be positive");
  Report report;
  report.config = config;
  Partial part;
  switch (config.mode) {
    case CampaignMode::kEdgeBound: part = edge_bound_campaign(config, report); break;
    case CampaignMode::kDensity: part = density_campaign(config, report); break;
    case CampaignMode::kCertifyFamilies: part = certify_families_campaign(config, report); break;
    case CampaignMode::kFamilySweep: part = family_sweep_campaign(config, report); break;
    case CampaignMode::kCounterexample: part = counterexample_campaign(config, report); break;
    case CampaignMode::kCertifyOne: part = certify_corpus(config, report); break;
  }
  report.tested = part.tested;
  report.passed = part.passed;
  report.failed = part.failed;
  report.skipped = part.skipped;
  report.undecided = part.undecided;
  report.violations = std::move(part.violations);
  if (!report.items_truncated) {
    for (auto& [idx, item] : part.items) report.items.push_back(std::move(item));
  }
  if (!part.per_n.empty()) {
    json per_n = json::object();
    json with_violations = json::array();
    for (const auto& [n, t] : part.per_n) {
      per_n[std::to_string(n)] = {{"tested", t.tested},
                                  {"violations", t.violations},
                                  {"undecided", t.undecided},
                                  {"min_slack", std::isfinite(t.min_slack) ? json(t.min_slack) : json(nullptr)}};
      if (t.violations > 0) with_violations.push_back(n);
    }
    report.summary["per_order"] = per_n;
    report.summary["orders_with_violations"] = with_violations;
  }
  if (!part.tags.empty()) report.summary["tags"] = part.tags;
  report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.output) write_report(report, *config.output);
  return report;
}

CorpusStats stream_corpus(const std::string& path, const std::function<void(std::uint64_t, const Graph&)>& sink,
                          bool lenient) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  CorpusStats stats;
  std::string line;
  std::uint64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6Error& e) {
      if (!lenient) throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
      stats.errors.push_back({number, e.what()});
      continue;
    }
    sink(number, g);
    ++stats.delivered;
  }
  return stats;
}

Graph random_graph(int n, double p, int min_degree_floor, std::uint64_t seed, std::uint64_t budget) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (unit(rng) < p) g.add_edge(u, v);
      }
    }
    const auto prof = degree_profile(g);
    if (prof.connected && prof.min_degree >= min_degree_floor) return g;
  }
  throw std::runtime_error("random graph rejection budget exhausted");
}

}  // namespace qconn
