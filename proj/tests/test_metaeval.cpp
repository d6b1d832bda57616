#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biceval/bcubed.hpp"
#include "biceval/metaeval.hpp"
#include "test_support.hpp"

using namespace biceval;
using doctest::Approx;

namespace {

bool scenarios_equal(const Scenario& a, const Scenario& b) {
  if (a.condition != b.condition || a.relation != b.relation || a.label != b.label) return false;
  if (!(a.better.candidate == b.better.candidate) || !(a.better.gold == b.better.gold)) return false;
  if (a.worse.size() != b.worse.size()) return false;
  for (std::size_t i = 0; i < a.worse.size(); ++i) {
    if (!(a.worse[i].candidate == b.worse[i].candidate) || !(a.worse[i].gold == b.worse[i].gold)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reference fixtures carry the documented sets") {
  auto g1 = homogeneity_fixture_candidate1();
  REQUIRE(g1.size() == 5);
  CHECK(g1.bicluster(2).objects == std::vector<ObjectId>{"3", "4", "5"});
  CHECK(g1.bicluster(2).features == std::vector<FeatureId>{"1'", "2'", "3'"});
  CHECK(homogeneity_fixture_candidate2().size() == 4);
  auto gold = homogeneity_fixture_gold();
  REQUIRE(gold.size() == 3);
  CHECK(gold.bicluster(0).objects == std::vector<ObjectId>{"1", "2", "3", "4", "5", "6"});

  auto r1 = ragbag_fixture_candidate1();
  REQUIRE(r1.size() == 2);
  CHECK(r1.bicluster(0).objects == std::vector<ObjectId>{"1", "2", "3", "4"});
  CHECK(r1.bicluster(1).objects == std::vector<ObjectId>{"5", "6", "7", "8", "9"});
  auto rgold = ragbag_fixture_gold();
  REQUIRE(rgold.size() == 6);
  CHECK(rgold.bicluster(5).objects == std::vector<ObjectId>{"6", "7", "8", "9"});
}

TEST_CASE("gen_ragbag(4) reproduces the reference fixture") {
  auto s = gen_ragbag(4);
  auto p = ragbag_fixture_scenario();
  CHECK(s.better.candidate == p.better.candidate);
  CHECK(s.better.gold == p.better.gold);
  REQUIRE(s.worse.size() == 1);
  CHECK(s.worse[0].candidate == p.worse[0].candidate);
}

TEST_CASE("generators reject degenerate parameters") {
  HomogeneityParams h;
  h.class_sizes = {1, 1};
  h.split_i = 0;
  CHECK_THROWS_AS(gen_homogeneity(h), DomainError);
  CompletenessParams c;
  c.class_sizes = {1};
  c.part_a = 1;
  c.part_b = 1;
  CHECK_THROWS_AS(gen_completeness(c), DomainError);
  CHECK_THROWS_AS(gen_ragbag(1), DomainError);
  CHECK_THROWS_AS(gen_size_vs_quantity(1), DomainError);
  CHECK_THROWS_AS(gen_b3(B3Params{0, 0}), DomainError);
  CHECK_THROWS_AS(gen_b5(B5Params{1, 0}), DomainError);
}

TEST_CASE("every generated scenario passes the premise validator") {
  SuiteOptions opts;
  opts.seeds = 25;
  for (Condition c : kAllConditions) {
    for (const auto& s : scenarios_for(c, opts)) {
      CHECK_NOTHROW(validate_scenario(s));
    }
  }
}

TEST_CASE("generators are deterministic in the seed") {
  SuiteOptions opts;
  opts.seeds = 5;
  opts.base_seed = 77;
  for (Condition c : kAllConditions) {
    auto first = scenarios_for(c, opts);
    auto second = scenarios_for(c, opts);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(scenarios_equal(first[i], second[i]));
    }
  }
}

TEST_CASE("condition names parse") {
  CHECK(condition_from_string("A1") == Condition::A1);
  CHECK(condition_from_string("a.3") == Condition::A3);
  CHECK(condition_from_string("B.5") == Condition::B5);
  CHECK(condition_from_string("rag bag") == Condition::A3);
  CHECK(condition_from_string("scale-invariance") == Condition::B3);
  CHECK(!condition_from_string("C9").has_value());
}

TEST_CASE("check: published fixtures against the micro-object measures") {
  const auto* ce_m = find_measure("ce");
  const auto* rnia_m = find_measure("rnia");
  const auto* e4sc_m = find_measure("e4sc");
  const auto* rand_m = find_measure("rand");
  const auto* vi_m = find_measure("vi");
  const auto* mocice = find_measure("mocice-f1");
  REQUIRE(ce_m);
  REQUIRE(mocice);

  auto homog = homogeneity_fixture_scenario();
  auto ragbag = ragbag_fixture_scenario();

  // CE and RNIA tie on both fixtures: fail
  CHECK(check(*ce_m, homog).verdict == Verdict::fail);
  CHECK(check(*ce_m, ragbag).verdict == Verdict::fail);
  CHECK(check(*ce_m, homog).detail.find("0.555556") != std::string::npos);
  CHECK(check(*rnia_m, homog).verdict == Verdict::fail);
  CHECK(check(*rnia_m, ragbag).verdict == Verdict::fail);

  // E4SC orders the homogeneity fixture correctly but inverts the rag bag
  CHECK(check(*e4sc_m, homog).verdict == Verdict::pass);
  CHECK(check(*e4sc_m, ragbag).verdict == Verdict::fail);

  // Rand and VI pass the homogeneity fixture and tie on the rag bag
  CHECK(check(*rand_m, homog).verdict == Verdict::pass);
  CHECK(check(*rand_m, ragbag).verdict == Verdict::fail);
  CHECK(check(*vi_m, homog).verdict == Verdict::pass);
  CHECK(check(*vi_m, ragbag).verdict == Verdict::fail);

  // MOCICE orders both
  CHECK(check(*mocice, homog).verdict == Verdict::pass);
  CHECK(check(*mocice, ragbag).verdict == Verdict::pass);
}

TEST_CASE("check: scale by k = 1 is equality by identity") {
  auto s = gen_b3(B3Params{1, 123});
  CHECK_NOTHROW(validate_scenario(s));
  const auto* mocice = find_measure("mocice-f1");
  REQUIRE(mocice);
  CHECK(check(*mocice, s).verdict == Verdict::pass);
}

TEST_CASE("check: perfect match separates MOCICE from the area-based baselines") {
  auto u = make_universe(testsup::ids("o", 4), testsup::ids("f", 2));
  std::vector<std::string> x{"f1", "f2"};
  Biclustering gold(u, {Bicluster{{"o1", "o2"}, x}, Bicluster{{"o3", "o4"}, x}});
  // same covered area, coarser clustering
  Biclustering merged(u, {Bicluster{{"o1", "o2", "o3", "o4"}, x}});
  // a duplicated cluster: equal area again, and overlapping
  Biclustering duplicated(u, {Bicluster{{"o1", "o2"}, x}, Bicluster{{"o3", "o4"}, x},
                              Bicluster{{"o3", "o4"}, x}});
  Scenario s{Condition::A5,
             Relation::optimum_iff_identical,
             "A.5 merged and duplicated clusters",
             {gold, gold},
             {{merged, gold}, {duplicated, gold}}};
  CHECK_NOTHROW(validate_scenario(s));
  const auto* mocice = find_measure("mocice-f1");
  CHECK(check(*mocice, s).verdict == Verdict::pass);
  // RNIA sees only the covered area and hands the merged candidate the optimum
  CHECK(check(*find_measure("rnia"), s).verdict == Verdict::fail);
  // CE cannot score the duplicated (overlapping) candidate at all
  CHECK(check(*find_measure("ce"), s).verdict == Verdict::error);
}

TEST_CASE("check: generated perfect-match scenarios hold for MOCICE") {
  for (std::uint64_t seed : {1ULL, 5ULL, 11ULL}) {
    auto u = make_universe(testsup::ids("o", 4), testsup::ids("f", 2));
    auto s = gen_perfect_match(u, seed);
    CHECK_NOTHROW(validate_scenario(s));
    REQUIRE(!s.worse.empty());
    const auto* mocice = find_measure("mocice-f1");
    CHECK(check(*mocice, s).verdict == Verdict::pass);
  }
}

TEST_CASE("check: B.5 single covering cluster") {
  auto s = gen_b5(B5Params{3, 9});
  CHECK_NOTHROW(validate_scenario(s));
  const auto* mocice = find_measure("mocice-f1");
  CHECK(check(*mocice, s).verdict == Verdict::pass);
}

TEST_CASE("compliance matrix smoke run") {
  SuiteOptions opts;
  opts.seeds = 5;
  std::vector<MeasureRef> measures{*find_measure("ce"), *find_measure("mocice-f1")};
  std::vector<Condition> conditions{Condition::A1, Condition::A3};
  auto report = run_compliance(measures, conditions, opts);

  CHECK(report.cell("mocice-f1", Condition::A1).verdict == Verdict::pass);
  CHECK(report.cell("mocice-f1", Condition::A3).verdict == Verdict::pass);
  CHECK(report.cell("ce", Condition::A1).verdict == Verdict::fail);
  CHECK(report.cell("ce", Condition::A3).verdict == Verdict::fail);
  CHECK(report.cell("ce", Condition::A1).failures > 0);

  auto text = report.to_text();
  CHECK(text.find("vi_log_base=2") != std::string::npos);
  CHECK(text.find("mocice-f1") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  auto tsv = report.to_tsv();
  CHECK(tsv.find("measure\tcondition") != std::string::npos);
}

TEST_CASE("table reproduction golden cells") {
  auto report = table1(builtin_measures());
  CHECK(report.golden_ok);
  for (const auto& f : report.golden_failures) {
    CAPTURE(f);
    CHECK(false);
  }

  const auto& ce_row = report.row("ce");
  CHECK(ce_row.homogeneity.score1 == Approx(0.556));
  CHECK(ce_row.homogeneity.score2 == Approx(0.556));
  CHECK(ce_row.homogeneity.violated);
  CHECK(ce_row.ragbag.violated);

  const auto& rnia_row = report.row("rnia");
  CHECK(rnia_row.homogeneity.score1 == Approx(1.000));
  CHECK(rnia_row.ragbag.score2 == Approx(1.000));
  CHECK(rnia_row.homogeneity.violated);

  const auto& e4sc_row = report.row("e4sc");
  CHECK(e4sc_row.homogeneity.score1 == Approx(0.544));
  CHECK(e4sc_row.homogeneity.score2 == Approx(0.606));
  CHECK(!e4sc_row.homogeneity.violated);
  CHECK(e4sc_row.ragbag.score1 == Approx(0.543));
  CHECK(e4sc_row.ragbag.score2 == Approx(0.533));
  CHECK(e4sc_row.ragbag.violated);

  const auto& mocice_row = report.row("mocice-f1");
  CHECK(!mocice_row.homogeneity.violated);
  CHECK(!mocice_row.ragbag.violated);

  CHECK(report.to_text().find("0.544") != std::string::npos);
  CHECK(report.to_tsv().find("e4sc\thomogeneity") != std::string::npos);
}

TEST_CASE("table reproduction requires the three published measures") {
  std::vector<MeasureRef> missing{*find_measure("ce")};
  CHECK_THROWS_AS(table1(missing), InvalidInputError);
}
