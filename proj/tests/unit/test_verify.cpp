#include "helpers.hpp"
#include "symbreak/report.hpp"
#include "symbreak/spec_json.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;
using namespace symbreak::verify;

TEST(Instances, Ranges) {
  auto dutch = make_instances("dutch", {{"n", {2, 3}}, {"k", {3, 4}}});
  ASSERT_EQ(dutch.size(), 4u);
  EXPECT_EQ(dutch[0].params, (std::vector<std::int64_t>{2, 3}));
  auto spiro = make_instances("spiro", {{"q", {6, 6}}, {"h", {1, 5}}, {"k", {2, 2}}});
  EXPECT_EQ(spiro.size(), 3u);
  EXPECT_CODE(make_instances("tetris", {}), kUnknownFamily);
  EXPECT_CODE(make_instances("dutch", {{"n", {3, 2}}}), kBadParams);
  EXPECT_FALSE(make_instances("all", {}).empty());
}

TEST(Instances, BoundsDeterministic) {
  auto a = make_bound_instances(30, 7);
  auto b = make_bound_instances(30, 7);
  ASSERT_EQ(a.size(), 30u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(gen::spec_to_json(a[i].spec), gen::spec_to_json(b[i].spec));
    EXPECT_LE(gen::family(a[i].spec).order(), 14u);
  }
  auto c = make_bound_instances(30, 8);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= gen::spec_to_json(a[i].spec) != gen::spec_to_json(c[i].spec);
  EXPECT_TRUE(differs);
}

TEST(Evaluate, DutchRow) {
  auto inst = make_instances("dutch", {{"n", {3, 3}}, {"k", {4, 4}}});
  auto rec = evaluate(inst.at(0), RunConfig{});
  EXPECT_EQ(rec.status, Status::kMatch) << rec.reason;
  EXPECT_EQ(rec.oracle_D, 3u);
  EXPECT_EQ(rec.oracle_Dprime, 2u);
  EXPECT_EQ(rec.aut_order, 48u);
  EXPECT_EQ(rec.formula_aut_order, "48");
  EXPECT_TRUE(revalidate(rec));
}

TEST(Evaluate, SkipsLargeAndCapped) {
  RunConfig small;
  small.max_vertices = 5;
  auto rec = evaluate(make_instances("friendship", {{"n", {3, 3}}}).at(0), small);
  EXPECT_EQ(rec.status, Status::kSkipped);
  RunConfig capped;
  capped.aut_cap = 10;
  rec = evaluate(make_instances("friendship", {{"n", {3, 3}}}).at(0), capped);
  EXPECT_EQ(rec.status, Status::kSkipped);
  EXPECT_NE(rec.reason.find("aut_cap"), std::string::npos);
}

TEST(Evaluate, OutOfScopeSkipped) {
  auto rec = evaluate(make_instances("spiro", {{"q", {5, 5}}, {"h", {2, 2}}, {"k", {1, 1}}}).at(0), RunConfig{});
  EXPECT_EQ(rec.status, Status::kSkipped);
}

TEST(Evaluate, EdgeOracleGate) {
  RunConfig c;
  c.max_edges = 5;
  auto rec = evaluate(make_instances("friendship", {{"n", {2, 2}}}).at(0), c);
  EXPECT_EQ(rec.status, Status::kMatch);
  EXPECT_FALSE(rec.oracle_Dprime.has_value());
  EXPECT_EQ(summarize({rec}).dprime_unchecked, 1u);
}

TEST(Evaluate, TamperedWitnessRejected) {
  auto rec = evaluate(make_instances("friendship", {{"n", {3, 3}}}).at(0), RunConfig{});
  ASSERT_TRUE(revalidate(rec));
  rec.D_witness.assign(rec.D_witness.size(), 1);
  EXPECT_FALSE(revalidate(rec));
}

TEST(Run, SortedAndJobIndependent) {
  auto inst = make_instances("dutch", {{"n", {2, 3}}, {"k", {3, 5}}});
  std::reverse(inst.begin(), inst.end());
  RunConfig one;
  RunConfig three;
  three.jobs = 3;
  auto a = run(inst, one);
  auto b = run(inst, three);
  EXPECT_EQ(format_report(a, ReportFormat::kJson), format_report(b, ReportFormat::kJson));
  EXPECT_EQ(a.records.front().params, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(a.summary.mismatched, 0u);
}

TEST(Report, JsonRoundTrip) {
  auto inst = make_bound_instances(5, 3);
  auto report = run(inst, RunConfig{}, 3);
  auto j = report_to_json(report);
  auto back = report_from_json(j);
  EXPECT_EQ(report_to_json(back), j);
  EXPECT_EQ(back.seed, 3u);
  for (const auto& r : back.records) EXPECT_TRUE(revalidate(r));
}

TEST(Report, CsvColumns) {
  auto report = run(make_instances("friendship", {{"n", {2, 3}}}), RunConfig{});
  auto csv = report_to_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "family,params,n_vertices,aut_order,formula_kind,formula_D,formula_Dprime,oracle_D,"
            "oracle_Dprime,status,reason");
  EXPECT_NE(csv.find("friendship,2,5,8,exact,3,2,3,2,match,"), std::string::npos);
  EXPECT_CODE(parse_report_format("xml"), kBadParams);
}

TEST(Report, TimingOptIn) {
  auto inst = make_instances("friendship", {{"n", {2, 2}}});
  EXPECT_FALSE(report_to_json(run(inst, RunConfig{})).dump().find("elapsed_ms") != std::string::npos);
  RunConfig timed;
  timed.timing = true;
  EXPECT_NE(report_to_json(run(inst, timed)).dump().find("elapsed_ms"), std::string::npos);
}
