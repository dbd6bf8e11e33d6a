#include <gtest/gtest.h>

#include "semicayley/semicayley.hpp"

using namespace semicayley;

TEST(Sweep, GroupOfOrderTwo) {
  SweepConfig cfg;
  cfg.max_group_order = 2;
  const auto report = run_sweep(cfg);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_TRUE(report.discrepancies.empty());
  EXPECT_TRUE(report.verified());
  EXPECT_EQ(report.rows[0].spec.to_string(), "SC(Z2; {}, {(1)})");
  EXPECT_EQ(report.rows[1].spec.to_string(), "SC(Z2; {(1)}, {(1)})");
}

TEST(Sweep, SmallConnectionSets) {
  // Z4: {}, {2}, {1,3}.
  EXPECT_EQ(small_connection_sets(AbelianGroup({4})).size(), 3u);
  // Z2^2: {}, three involutions, three pairs of involutions.
  EXPECT_EQ(small_connection_sets(AbelianGroup({2, 2})).size(), 7u);
}

TEST(Sweep, DedupeKeepsOneRepresentativePerClass) {
  SweepConfig all, dedup;
  all.max_group_order = dedup.max_group_order = 8;
  all.dedupe = false;
  const auto every = enumerate_instances(all);
  const auto reps = enumerate_instances(dedup);
  EXPECT_LT(reps.size(), every.size());
  for (const auto& r : reps) {
    EXPECT_NE(std::find(every.begin(), every.end(), r), every.end());
  }
  // Dropped instances share a verdict with a kept one in the same group.
  for (const auto& e : every) {
    bool covered = false;
    for (const auto& r : reps) {
      if (r.group().factors() != e.group().factors()) continue;
      if (are_isomorphic(build_sc_graph(r), build_sc_graph(e))) covered = true;
    }
    EXPECT_TRUE(covered) << e.to_string();
  }
  SweepConfig disc;
  disc.max_group_order = 4;
  disc.include_disconnected = true;
  SweepConfig conn;
  conn.max_group_order = 4;
  EXPECT_GT(enumerate_instances(disc).size(), enumerate_instances(conn).size());
}

TEST(Sweep, WorkerCountDoesNotChangeReports) {
  SweepConfig one;
  one.max_group_order = 12;
  one.format = OutputFormat::json;
  SweepConfig eight = one;
  eight.workers = 8;
  EXPECT_EQ(render(run_sweep(one)), render(run_sweep(eight)));
  one.format = eight.format = OutputFormat::csv;
  EXPECT_EQ(render(run_sweep(one)), render(run_sweep(eight)));
}

TEST(Sweep, SmallRangeFamiliesAreTransitive) {
  SweepConfig cfg;
  cfg.max_group_order = 4;
  const auto report = run_sweep(cfg);
  for (const auto& row : report.rows) {
    ASSERT_TRUE(row.verdict.has_value());
    if (row.verdict->classification.exceptional()) {
      EXPECT_FALSE(row.verdict->normal);
      EXPECT_TRUE(row.verdict->vertex_transitive);
    }
  }
}

TEST(Sweep, CsvSchema) {
  SweepConfig cfg;
  cfg.max_group_order = 3;
  cfg.format = OutputFormat::csv;
  const std::string csv = render(run_sweep(cfg));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "group,R,L,aut_order,normal,vt,et,at,case,x_size,y_size");
}

TEST(Sweep, JsonReportShape) {
  SweepConfig cfg;
  cfg.max_group_order = 4;
  cfg.dump_graphs = true;
  const auto j = nlohmann::json::parse(to_json(run_sweep(cfg)).dump());
  ASSERT_TRUE(j.contains("instances"));
  ASSERT_TRUE(j.contains("summary"));
  EXPECT_TRUE(j["instances"][0].contains("graph"));
}

TEST(Sweep, ConfigValidation) {
  SweepConfig cfg;
  cfg.max_group_order = 1;
  EXPECT_THROW(run_sweep(cfg), InvalidArgumentError);
  cfg.max_group_order = 4;
  cfg.workers = 0;
  EXPECT_THROW(run_sweep(cfg), InvalidArgumentError);
}
