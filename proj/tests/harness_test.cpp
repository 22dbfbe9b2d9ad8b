#include "qconn/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qconn/extremal.hpp"
#include "qconn/graph6.hpp"
#include "test_support.hpp"

namespace qconn {
namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = (std::filesystem::temp_directory_path() /
             ("qconn_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
              std::to_string(counter_++) + ".g6"))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

TEST(stream_corpus, delivers_in_order) {
  TempFile f("Bw\nBg\nD??\n");
  std::vector<std::string> got;
  const auto stats = stream_corpus(f.path(), [&](std::uint64_t, const Graph& g) { got.push_back(write_graph6(g)); });
  EXPECT_EQ(stats.delivered, 3u);
  EXPECT_EQ(got, (std::vector<std::string>{"Bw", "Bg", "D??"}));
}

TEST(stream_corpus, empty_file) {
  TempFile f("");
  EXPECT_EQ(stream_corpus(f.path(), [](std::uint64_t, const Graph&) {}).delivered, 0u);
}

TEST(stream_corpus, malformed_line_lenient_and_strict) {
  TempFile f("Bw\nB\x01\nD??\n");
  const auto stats = stream_corpus(f.path(), [](std::uint64_t, const Graph&) {}, true);
  EXPECT_EQ(stats.delivered, 2u);
  ASSERT_EQ(stats.errors.size(), 1u);
  EXPECT_EQ(stats.errors[0].line, 2u);
  try {
    stream_corpus(f.path(), [](std::uint64_t, const Graph&) {});
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(stream_corpus, missing_file) {
  EXPECT_THROW(stream_corpus("/nonexistent/corpus.g6", [](std::uint64_t, const Graph&) {}), std::runtime_error);
}

TEST(random_graph, examples) {
  EXPECT_EQ(random_graph(10, 1.0, 3, 42), complete(10));
  EXPECT_THROW(random_graph(10, 0.0, 0, 42, 100), std::runtime_error);
  EXPECT_EQ(write_graph6(random_graph(30, 0.3, 2, 7)), write_graph6(random_graph(30, 0.3, 2, 7)));
  EXPECT_NE(write_graph6(random_graph(30, 0.3, 2, 7)), write_graph6(random_graph(30, 0.3, 2, 8)));
  EXPECT_THROW(random_graph(10, 1.5, 0, 1), std::invalid_argument);
}

TEST(random_graph, meets_floor) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(40, 0.3, 4, seed);
    const auto p = degree_profile(g);
    EXPECT_TRUE(p.connected);
    EXPECT_GE(p.min_degree, 4);
  }
}

TEST(campaign, edge_bound_small_orders) {
  CampaignConfig c;
  c.mode = CampaignMode::kEdgeBound;
  c.n_min = 2;
  c.n_max = 5;
  const auto r = run_campaign(c);
  EXPECT_TRUE(r.counters_consistent());
  EXPECT_EQ(r.tested, 2u + 8 + 64 + 1024);
  EXPECT_EQ(r.tested - r.skipped,
            testing::connected_labeled_count(2) + testing::connected_labeled_count(3) +
                testing::connected_labeled_count(4) + testing::connected_labeled_count(5));
  EXPECT_EQ(r.undecided, 0u);
  EXPECT_EQ(r.failed, r.violations.size());
  const auto j = report_json(r);
  EXPECT_EQ(j["schema"], 1);
  for (const auto& n : j["summary"]["orders_with_violations"]) EXPECT_LT(n.get<int>(), 4);
  EXPECT_EQ(j["summary"]["per_order"]["4"]["violations"], 0);
  EXPECT_EQ(j["summary"]["per_order"]["5"]["violations"], 0);
}

TEST(campaign, density_below_order_bound_records_hypothesis) {
  CampaignConfig c;
  c.mode = CampaignMode::kDensity;
  c.n_min = 7;
  c.n_max = 7;
  const auto r = run_campaign(c);
  EXPECT_TRUE(r.counters_consistent());
  // n >= 2 delta - k + 5 = 8 fails at n = 7
  EXPECT_EQ(r.failed, 0u);
  EXPECT_EQ(r.passed, 0u);
  EXPECT_GT(r.tested, 0u);
}

TEST(campaign, counterexample_is_reproducible) {
  CampaignConfig c;
  c.mode = CampaignMode::kCounterexample;
  c.n_min = 103;
  c.budget = 12;
  c.seed = 2024;
  const auto a = run_campaign(c);
  const auto b = run_campaign(c);
  EXPECT_EQ(report_json(a, false), report_json(b, false));
  EXPECT_TRUE(a.counters_consistent());
  EXPECT_EQ(a.tested, 12u);
  EXPECT_TRUE(a.violations.empty());
  c.threads = 3;
  EXPECT_EQ(report_json(run_campaign(c), false)["items"], report_json(a, false)["items"]);
  c.seed = 2025;
  EXPECT_NE(report_json(run_campaign(c), false)["items"], report_json(a, false)["items"]);
}

TEST(campaign, certify_families_at_threshold_order) {
  CampaignConfig c;
  c.mode = CampaignMode::kCertifyFamilies;
  c.k = 3;
  c.delta = 3;
  const auto r = run_campaign(c);
  EXPECT_TRUE(r.counters_consistent());
  EXPECT_EQ(r.failed, 0u) << report_json(r).dump(1);
  EXPECT_EQ(r.summary["n"], 103);
}

TEST(campaign, family_sweep_small_parameters) {
  CampaignConfig c;
  c.mode = CampaignMode::kFamilySweep;
  const auto r = run_campaign(c);
  EXPECT_TRUE(r.counters_consistent());
  EXPECT_EQ(r.failed, 0u) << report_json(r).dump(1);
  EXPECT_NE(r.summary["maximizer"].get<std::string>().find("empirical over"), std::string::npos);
}

TEST(campaign, certify_one_replays_corpus) {
  TempFile f(write_graph6(build_A({103, 3, 3}).graph) + "\n" + write_graph6(cycle(10)) + "\n");
  CampaignConfig c;
  c.mode = CampaignMode::kCertifyOne;
  c.corpus = f.path();
  const auto r = run_campaign(c);
  ASSERT_EQ(r.items.size(), 2u);
  EXPECT_EQ(r.items[0]["outcome"], "EXCEPTIONAL_FAMILY");
  EXPECT_EQ(r.items[1]["outcome"], "HYPOTHESIS_FAILED");
  EXPECT_EQ(r.items[1]["index"], 2);
}

TEST(campaign, writes_report_file) {
  const auto path = (std::filesystem::temp_directory_path() / "qconn_report_test.json").string();
  CampaignConfig c;
  c.mode = CampaignMode::kEdgeBound;
  c.n_min = 2;
  c.n_max = 3;
  c.output = path;
  run_campaign(c);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["config"]["mode"], "edge-bound");
  std::remove(path.c_str());
  c.output = "/nonexistent/dir/report.json";
  EXPECT_THROW(run_campaign(c), std::runtime_error);
}

TEST(campaign, rejects_bad_config) {
  CampaignConfig c;
  c.mode = CampaignMode::kEdgeBound;
  c.n_min = 2;
  c.n_max = 8;
  EXPECT_THROW(run_campaign(c), std::invalid_argument);
  c.mode = CampaignMode::kCertifyOne;
  EXPECT_THROW(run_campaign(c), std::invalid_argument);
  EXPECT_THROW(parse_campaign_mode("everything"), std::invalid_argument);
  EXPECT_EQ(parse_campaign_mode("family-sweep"), CampaignMode::kFamilySweep);
}

}  // namespace
}  // namespace qconn
