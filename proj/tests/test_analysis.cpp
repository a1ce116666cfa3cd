#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tancone/analysis.hpp"

using namespace tancone;

namespace {

AnalysisRecord run(std::vector<std::int64_t> g) { return analyze(g); }

}  // namespace

TEST(Analysis, GoldenRecord) {
  auto rec = run({5, 6, 7, 8});
  ASSERT_TRUE(rec.accepted());
  EXPECT_EQ(rec.status(), "ok");
  EXPECT_FALSE(rec.verification_failed());
  EXPECT_EQ(rec.frobenius, 9);
  auto j = to_json(rec);
  EXPECT_EQ(j["schema"], kSchema);
  EXPECT_EQ(j["case"], "1b");
  EXPECT_EQ(j["variant"], 4);
  EXPECT_EQ(j["betti"], nlohmann::json::parse("[1,5,5,1]"));
  EXPECT_EQ(j["homogeneous_type"], true);
}

TEST(Analysis, JsonIsDeterministic) {
  JsonSections all{true, true, true};
  auto a = to_json(run({8, 7, 6, 5}), all).dump();
  auto b = to_json(run({8, 7, 6, 5}), all).dump();
  EXPECT_EQ(a, b);
}

TEST(Analysis, PermutedInputSameResult) {
  auto a = run({8, 6, 5, 7});
  auto b = run({5, 6, 7, 8});
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(a.permutation, (std::vector<int>{4, 2, 1, 3}));
  EXPECT_EQ(to_json(a)["twists"], to_json(b)["twists"]);
}

TEST(Analysis, RejectionReasons) {
  struct Case {
    std::vector<std::int64_t> g;
    Reason r;
  };
  std::vector<Case> cases = {
      {{2, 4, 6, 8}, Reason::GcdNotOne},
      {{5, 6, 7, 18}, Reason::NotMinimallyGenerated},
      {{5, 5, 6, 7}, Reason::NotMinimallyGenerated},
      {{4, 5, 6, 7}, Reason::NotSymmetric},
      {{8, 9, 10, 12}, Reason::CompleteIntersection},
      {{6, 11, 13, 20}, Reason::UnsupportedCase},
      {{6, 7, 10, 11}, Reason::UnsupportedCase},
      {{9, 10, 14, 22}, Reason::RestrictionViolated},
      {{7, 8, 17, 18}, Reason::RestrictionViolated},
      {{7, 9, 19, 20}, Reason::RestrictionViolated},
      {{9, 10, 22, 26}, Reason::RestrictionViolated},
  };
  for (const auto& c : cases) {
    auto rec = analyze(c.g);
    ASSERT_TRUE(rec.rejection.has_value());
    EXPECT_EQ(*rec.rejection, c.r) << c.g[0] << "," << c.g[1] << "," << c.g[2] << "," << c.g[3];
    EXPECT_FALSE(rec.verification_failed());
    auto j = to_json(rec);
    EXPECT_EQ(j["status"], to_string(c.r));
    EXPECT_EQ(j["reason"]["code"], to_string(c.r));
  }
}

TEST(Analysis, MalformedInputThrows) {
  for (const auto& g : std::vector<std::vector<std::int64_t>>{{5, 6, 7}, {5, 6, 7, 8, 9}, {0, 6, 7, 8}, {-5, 6, 7, 8}}) {
    try {
      analyze(g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.reason(), Reason::InputError);
    }
  }
}

TEST(Analysis, SweepCounts) {
  SweepOptions o;
  o.alpha_max = 3;
  auto res = run_sweep(o);
  EXPECT_EQ(res.tuples, 6561u);
  EXPECT_EQ(res.degenerate, 3441u);
  EXPECT_EQ(res.families, 780u);
  EXPECT_EQ(res.rows.size(), 780u);
  EXPECT_EQ(res.counts["1a/1"], 6u);
  EXPECT_EQ(res.counts["1a/2"], 42u);
  EXPECT_EQ(res.counts["1b/4"], 61u);
  EXPECT_EQ(res.counts["3a/4"], 56u);
  EXPECT_EQ(res.counts["UnsupportedCase/2a"] + res.counts["UnsupportedCase/3b"], 177u);
  EXPECT_EQ(res.counts["RestrictionViolated/1a"], 60u);
  EXPECT_EQ(res.counts["RestrictionViolated/1b"], 39u);
  EXPECT_EQ(res.counts["RestrictionViolated/2b"], 92u);
  EXPECT_EQ(res.counts["RestrictionViolated/3a"], 55u);
  std::size_t supported = 0;
  for (const auto& row : res.rows) {
    EXPECT_FALSE(row.record.verification_failed()) << csv_row(row);
    supported += row.record.accepted();
  }
  // Rows are ordered by the sorted generators and unique.
  EXPECT_EQ(supported, 357u);
  for (std::size_t i = 1; i < res.rows.size(); ++i)
    EXPECT_LT(res.rows[i - 1].record.generators, res.rows[i].record.generators);
}

TEST(Analysis, SweepDropsAllOnesTuple) {
  std::size_t tuples = 0, degenerate = 0;
  auto fams = sweep_families(1, &tuples, &degenerate);
  EXPECT_EQ(tuples, 1u);
  EXPECT_EQ(degenerate, 1u);
  EXPECT_TRUE(fams.empty());
}

TEST(Analysis, SweepFilters) {
  SweepOptions o;
  o.alpha_max = 3;
  o.case_filter = CaseLabel::C1a;
  auto res = run_sweep(o);
  // 48 supported and 60 violating a restriction.
  EXPECT_EQ(res.rows.size(), 108u);
  for (const auto& row : res.rows) {
    ASSERT_TRUE(row.record.structure.has_value());
    EXPECT_EQ(row.record.structure->label, CaseLabel::C1a);
    if (!row.record.accepted()) {
      EXPECT_EQ(*row.record.rejection, Reason::RestrictionViolated);
      continue;
    }
    auto b = betti_sequence(*row.record.resolution);
    EXPECT_EQ(b, (BettiSequence{1, 5, 6, 2}));
  }
  o.case_filter.reset();
  o.status_filter = "UnsupportedCase";
  EXPECT_EQ(run_sweep(o).rows.size(), 177u);
  o.status_filter.reset();
  o.case_filter = CaseLabel::C2b;
  o.variant_filter = 3;
  EXPECT_EQ(run_sweep(o).rows.size(), 25u);
}

TEST(Analysis, CsvHeaderMatchesDocs) {
  std::ifstream in(TANCONE_DOCS_DIR "/csv_columns.md");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find(csv_header()), std::string::npos);
  SweepOptions o;
  o.alpha_max = 2;
  auto res = run_sweep(o);
  ASSERT_FALSE(res.rows.empty());
  auto cols = [](const std::string& s) { return std::count(s.begin(), s.end(), ',') + 1; };
  for (const auto& row : res.rows) EXPECT_EQ(cols(csv_row(row)), cols(csv_header()));
}

TEST(Analysis, SweepIsThreadIndependent) {
  SweepOptions a, b;
  a.alpha_max = b.alpha_max = 3;
  a.threads = 1;
  b.threads = 4;
  auto ra = run_sweep(a), rb = run_sweep(b);
  ASSERT_EQ(ra.rows.size(), rb.rows.size());
  for (std::size_t i = 0; i < ra.rows.size(); ++i)
    EXPECT_EQ(to_json(ra.rows[i].record).dump(), to_json(rb.rows[i].record).dump());
}
