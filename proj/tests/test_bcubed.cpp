#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "biceval/bcubed.hpp"
#include "biceval/metaeval.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace biceval;
using doctest::Approx;

namespace {

UniversePtr u4() { return make_universe({"1", "2", "3", "4"}, {"a"}); }

Clustering cl(const UniversePtr& u, std::vector<std::vector<std::string>> clusters) {
  return Clustering(u, std::move(clusters));
}

}  // namespace

TEST_CASE("CII on hand instances") {
  auto u = u4();
  // identical clusterings: Jaccard of identical sets
  auto g = cl(u, {{"1", "2"}, {"3", "4"}});
  CHECK(cii("1", "2", g, g) == Approx(1.0));

  // single shared cluster {1,2,3} against class {1,2}: 2/3
  CHECK(cii("1", "2", cl(u, {{"1", "2", "3"}}), cl(u, {{"1", "2"}})) == Approx(2.0 / 3.0));

  // two shared clusters with best Jaccards 1.0 and 0.5 average to 0.75
  auto g2 = cl(u, {{"1", "2"}, {"1", "2", "3", "4"}});
  auto c2 = cl(u, {{"1", "2"}});
  CHECK(cii("1", "2", g2, c2) == Approx(0.75));

  // contract violation: the pair must co-occur on both sides
  CHECK_THROWS_AS(cii("1", "3", c2, c2), std::logic_error);
}

TEST_CASE("varsigma on hand instances") {
  auto u = u4();
  auto ident = cl(u, {{"1", "2"}, {"3", "4"}});
  CHECK(varsigma("1", "2", ident, ident) == Approx(1.0));

  // co-occurring in the candidate but never in the gold standard
  CHECK(varsigma("1", "2", cl(u, {{"1", "2"}}), cl(u, {{"1"}, {"2"}})) == Approx(0.0));

  // |G(o,o')| = 2, |C(o,o')| = 1, CII = 0.75 -> 0.375
  auto g = cl(u, {{"1", "2"}, {"1", "2", "3", "4"}});
  auto c = cl(u, {{"1", "2"}});
  CHECK(varsigma("1", "2", g, c) == Approx(0.375));

  CHECK_THROWS_AS(varsigma("1", "3", c, c), std::logic_error);
}

TEST_CASE("tau on hand instances") {
  auto u = u4();
  auto ident = cl(u, {{"1", "2"}, {"3", "4"}});
  CHECK(tau("1", "2", ident, ident) == Approx(1.0));

  // mirror of varsigma: zero when the candidate never co-locates the pair
  CHECK(tau("1", "2", cl(u, {{"1"}, {"2"}}), cl(u, {{"1", "2"}})) == Approx(0.0));

  // |C(o,o')| = 2 (a duplicated class), |G(o,o')| = 1, CII = 1 -> 0.5
  auto g = cl(u, {{"1", "2"}});
  auto c = cl(u, {{"1", "2"}, {"1", "2"}});
  CHECK(tau("1", "2", g, c) == Approx(0.5));

  CHECK_THROWS_AS(tau("1", "3", g, g), std::logic_error);
}

TEST_CASE("CICE on two-object hand instances") {
  auto u = make_universe({"1", "2"}, {"a"});
  auto merged = cl(u, {{"1", "2"}});
  auto split = cl(u, {{"1"}, {"2"}});

  CHECK(cice_f1(merged, merged) == Approx(1.0));
  CHECK(cice_f1(split, split) == Approx(1.0));

  // candidate merges what the gold splits: P = 1/4, R = 1/2, F1 = 1/3
  auto s = cice_bcubed(merged, split);
  CHECK(s.precision == Approx(0.25).epsilon(1e-12));
  CHECK(s.recall == Approx(0.5).epsilon(1e-12));
  CHECK(s.f1 == Approx(1.0 / 3.0).epsilon(1e-12));

  // candidate refines the gold: recall drops below one
  CHECK(cice_recall(split, merged) == Approx(0.25).epsilon(1e-12));
  CHECK(cice_recall(split, merged) < 1.0);

  // the oracle agrees
  auto o = oracle::cice(merged, split);
  CHECK(s.precision == Approx(o.precision).epsilon(1e-12));
  CHECK(s.recall == Approx(o.recall).epsilon(1e-12));
}

TEST_CASE("CICE coverage and universe requirements") {
  auto u = u4();
  auto covering = cl(u, {{"1", "2"}, {"3", "4"}});
  auto partial = cl(u, {{"1", "2"}, {"3"}});
  CHECK_THROWS_AS(cice_f1(partial, covering), CoverageError);
  CHECK_THROWS_AS(cice_f1(covering, partial), CoverageError);

  auto other = make_universe({"1", "2"}, {"a"});
  CHECK_THROWS_AS(cice_f1(covering, cl(other, {{"1", "2"}})), InvalidInputError);
}

TEST_CASE("CICE on the homogeneity fixture object space") {
  // frozen from hand evaluation of the equations (and the oracle below):
  // candidate 1: P = 1/3,   R = 5/18, F1 = 10/33
  // candidate 2: P = 10/27, R = 8/27, F1 = 80/243
  auto u = make_universe(testsup::ids("", 9), {"x"});
  auto gold = cl(u, {{"1", "2", "3", "4", "5", "6"}, {"7", "8"}, {"9"}});
  auto g1 = cl(u, {{"1"}, {"2"}, {"3", "4", "5"}, {"7", "8", "9"}, {"6"}});
  auto g2 = cl(u, {{"1", "2"}, {"3", "4", "5"}, {"7", "8", "9"}, {"6"}});

  auto s1 = cice_bcubed(g1, gold);
  CHECK(s1.precision == Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(s1.recall == Approx(5.0 / 18.0).epsilon(1e-12));
  CHECK(s1.f1 == Approx(10.0 / 33.0).epsilon(1e-12));

  auto s2 = cice_bcubed(g2, gold);
  CHECK(s2.precision == Approx(10.0 / 27.0).epsilon(1e-12));
  CHECK(s2.recall == Approx(8.0 / 27.0).epsilon(1e-12));
  CHECK(s2.f1 == Approx(80.0 / 243.0).epsilon(1e-12));

  auto o1 = oracle::cice(g1, gold);
  CHECK(s1.f1 == Approx(o1.f1).epsilon(1e-12));
  auto o2 = oracle::cice(g2, gold);
  CHECK(s2.f1 == Approx(o2.f1).epsilon(1e-12));

  CHECK(s1.f1 < s2.f1);
}

TEST_CASE("plain BCubed can be blind where CICE is not") {
  // different clusterings with identical co-membership counts: extended
  // BCubed reaches 1, the Cluster Identity Index denies it
  auto u = make_universe({"1", "2", "3"}, {"a"});
  auto g = cl(u, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  auto c = cl(u, {{"1", "2", "3"}, {"1"}, {"2"}, {"3"}});
  CHECK(bcubed_f1(g, c) == Approx(1.0));
  CHECK(cice_f1(g, c) == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(cice_f1(g, c) < 1.0);
}

TEST_CASE("CICE never exceeds plain BCubed") {
  testsup::Rng rng(99);
  for (int it = 0; it < 60; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 2, 7)), {"a"});
    auto g = testsup::random_covering_clustering(rng, u);
    auto c = testsup::random_covering_clustering(rng, u);
    CHECK(cice_f1(g, c) <= bcubed_f1(g, c) + 1e-12);
  }
}

TEST_CASE("MOCICE on identical biclusterings and empty-side errors") {
  auto u = u4();
  Biclustering b(u, {Bicluster{{"1", "2"}, {"a"}}, Bicluster{{"3"}, {"a"}}});
  CHECK(mocice_f1(b, b).value == 1.0);
  CHECK(mocice_f1(b, b).orientation == Orientation::similarity);

  Biclustering nothing(u, {});
  CHECK_THROWS_AS(mocice_f1(nothing, b), UndefinedScoreError);
  CHECK_THROWS_AS(mocice_f1(b, nothing), UndefinedScoreError);
  Biclustering empty_parts(u, {Bicluster{{"1"}, {}}});
  CHECK_THROWS_AS(mocice_f1(empty_parts, b), UndefinedScoreError);
}

TEST_CASE("empty-product biclusters are retained but score-neutral") {
  auto u = u4();
  Biclustering gold(u, {Bicluster{{"1", "2"}, {"a"}}, Bicluster{{"3"}, {"a"}}});
  Biclustering plain(u, {Bicluster{{"1", "3"}, {"a"}}});
  Biclustering padded(u, {Bicluster{{"1", "3"}, {"a"}}, Bicluster{{"2", "4"}, {}}});
  auto a = mocice_bcubed(plain, gold);
  auto b = mocice_bcubed(padded, gold);
  CHECK(a.precision == b.precision);
  CHECK(a.recall == b.recall);
  CHECK(a.f1 == b.f1);
  CHECK(padded.size() == 2);  // still there positionally
}

TEST_CASE("MOCICE equals CICE on embedded clusterings (fixed cases)") {
  auto u = make_universe(testsup::ids("", 9), {"1'", "2'", "3'"});
  std::vector<std::string> x{"1'", "2'", "3'"};
  auto gold = cl(u, {{"1", "2", "3", "4", "5", "6"}, {"7", "8"}, {"9"}});
  auto g1 = cl(u, {{"1"}, {"2"}, {"3", "4", "5"}, {"7", "8", "9"}, {"6"}});
  auto g2 = cl(u, {{"1", "2"}, {"3", "4", "5"}, {"7", "8", "9"}, {"6"}});

  auto m1 = mocice_bcubed(as_biclustering(g1, x), as_biclustering(gold, x));
  CHECK(m1.precision == Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(m1.recall == Approx(5.0 / 18.0).epsilon(1e-12));
  CHECK(m1.f1 == Approx(10.0 / 33.0).epsilon(1e-12));

  auto m2 = mocice_bcubed(as_biclustering(g2, x), as_biclustering(gold, x));
  CHECK(m2.f1 == Approx(80.0 / 243.0).epsilon(1e-12));

  // the reference fixtures are exactly these embeddings
  auto p1 = mocice_bcubed(homogeneity_fixture_candidate1(), homogeneity_fixture_gold());
  CHECK(p1.f1 == Approx(10.0 / 33.0).epsilon(1e-12));
  auto p2 = mocice_bcubed(homogeneity_fixture_candidate2(), homogeneity_fixture_gold());
  CHECK(p2.f1 == Approx(80.0 / 243.0).epsilon(1e-12));
  CHECK(p1.f1 < p2.f1);

  // rag bag direction, frozen from the reference oracle
  auto r1 = mocice_bcubed(ragbag_fixture_candidate1(), ragbag_fixture_gold());
  auto r2 = mocice_bcubed(ragbag_fixture_candidate2(), ragbag_fixture_gold());
  auto or1 = oracle::mocice(ragbag_fixture_candidate1(), ragbag_fixture_gold());
  auto or2 = oracle::mocice(ragbag_fixture_candidate2(), ragbag_fixture_gold());
  CHECK(r1.f1 == Approx(or1.f1).epsilon(1e-12));
  CHECK(r2.f1 == Approx(or2.f1).epsilon(1e-12));
  CHECK(r1.f1 < r2.f1);
}

TEST_CASE("MOCICE on the rag bag minimal instance") {
  // n = 2 instance; frozen from hand evaluation:
  // worse {{1,2},{3,4,5}}: P = 3/10, R = 8/15, F1 = 48/125
  // better {{1,2,3},{4,5}}: P = 7/15, R = 3/5,  F1 = 21/40
  auto u = make_universe(testsup::ids("", 5), {"x"});
  std::vector<std::string> x{"x"};
  auto gold = as_biclustering(cl(u, {{"1"}, {"2"}, {"3"}, {"4", "5"}}), x);
  auto worse = as_biclustering(cl(u, {{"1", "2"}, {"3", "4", "5"}}), x);
  auto better = as_biclustering(cl(u, {{"1", "2", "3"}, {"4", "5"}}), x);

  auto sw = mocice_bcubed(worse, gold);
  CHECK(sw.precision == Approx(3.0 / 10.0).epsilon(1e-12));
  CHECK(sw.recall == Approx(8.0 / 15.0).epsilon(1e-12));
  CHECK(sw.f1 == Approx(48.0 / 125.0).epsilon(1e-12));

  auto sb = mocice_bcubed(better, gold);
  CHECK(sb.precision == Approx(7.0 / 15.0).epsilon(1e-12));
  CHECK(sb.recall == Approx(3.0 / 5.0).epsilon(1e-12));
  CHECK(sb.f1 == Approx(21.0 / 40.0).epsilon(1e-12));

  CHECK(sw.f1 < sb.f1);
}

TEST_CASE("MOCICE on the size-vs-quantity minimal instance") {
  // r = 2; frozen from hand evaluation:
  // worse (large + singletons): P = 5/7, R = 4/7, F1 = 40/63
  // better (split + pairs):     P = 17/21, R = 5/7, F1 = 85/112
  auto u = make_universe({"a1", "a2", "a3", "p1", "p2", "p3", "p4"}, {"x"});
  std::vector<std::string> x{"x"};
  auto gold = as_biclustering(cl(u, {{"a1", "a2", "a3"}, {"p1", "p2"}, {"p3", "p4"}}), x);
  auto worse = as_biclustering(cl(u, {{"a1", "a2", "a3"}, {"p1"}, {"p2"}, {"p3"}, {"p4"}}), x);
  auto better = as_biclustering(cl(u, {{"a1", "a2"}, {"a3"}, {"p1", "p2"}, {"p3", "p4"}}), x);

  auto sw = mocice_bcubed(worse, gold);
  CHECK(sw.precision == Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(sw.recall == Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(sw.f1 == Approx(40.0 / 63.0).epsilon(1e-12));

  auto sb = mocice_bcubed(better, gold);
  CHECK(sb.precision == Approx(17.0 / 21.0).epsilon(1e-12));
  CHECK(sb.recall == Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(sb.f1 == Approx(85.0 / 112.0).epsilon(1e-12));

  CHECK(sw.f1 < sb.f1);
}

TEST_CASE("adding a spurious object strictly lowers MOCICE") {
  auto u = make_universe({"1", "2", "3", "4", "5"}, {"a", "b"});
  Biclustering gold(u, {Bicluster{{"1", "2"}, {"a", "b"}}, Bicluster{{"3", "4"}, {"a"}}});
  Biclustering cand(u, {Bicluster{{"1", "2"}, {"a"}}, Bicluster{{"3", "4"}, {"a"}}});
  // object 5 is clustered on neither side
  Biclustering polluted_single(u, {Bicluster{{"1", "2"}, {"a"}}, Bicluster{{"3", "4"}, {"a"}},
                                   Bicluster{{"5"}, {"b"}}});
  Biclustering polluted_joined(u, {Bicluster{{"1", "2", "5"}, {"a"}}, Bicluster{{"3", "4"}, {"a"}}});

  double base = mocice_f1(cand, gold).value;
  CHECK(mocice_f1(polluted_single, gold).value < base - 1e-12);
  CHECK(mocice_f1(polluted_joined, gold).value < base - 1e-12);
  // the singleton pollution leaves recall untouched
  CHECK(mocice_recall(polluted_single, gold) == Approx(mocice_recall(cand, gold)).epsilon(1e-15));
}

TEST_CASE("background enlargement leaves MOCICE unchanged exactly") {
  auto small = make_universe({"1", "2", "3"}, {"a", "b"});
  auto large = make_universe({"1", "2", "3", "9", "10"}, {"a", "b", "z"});
  std::vector<Bicluster> cand{Bicluster{{"1", "2"}, {"a"}}, Bicluster{{"2", "3"}, {"b"}}};
  std::vector<Bicluster> gold{Bicluster{{"1", "2", "3"}, {"a", "b"}}};
  double on_small = mocice_f1(Biclustering(small, cand), Biclustering(small, gold)).value;
  double on_large = mocice_f1(Biclustering(large, cand), Biclustering(large, gold)).value;
  CHECK(on_small == on_large);  // bitwise: the measure never reads the universe
}

TEST_CASE("scale and copy invariance on the homogeneity fixture") {
  auto cand = homogeneity_fixture_candidate1();
  auto gold = homogeneity_fixture_gold();
  double base = mocice_f1(cand, gold).value;
  for (unsigned k : {2u, 3u}) {
    CHECK(mocice_f1(scale(cand, k), scale(gold, k)).value == Approx(base).epsilon(1e-9));
    CHECK(mocice_f1(copy(cand, k), copy(gold, k)).value == Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("CICE reaches 1 only for identical clusterings: exhaustive 3-object sweep") {
  auto u = make_universe({"1", "2", "3"}, {"a"});
  // the seven nonempty object subsets
  std::vector<std::vector<std::string>> subsets;
  std::vector<std::string> objs{"1", "2", "3"};
  for (unsigned m = 1; m < 8; ++m) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m & (1u << i)) s.push_back(objs[i]);
    }
    subsets.push_back(std::move(s));
  }
  // all covering clusterings with up to three clusters, duplicates included
  std::vector<std::vector<std::vector<std::string>>> clusterings;
  auto covers = [&](const std::vector<std::vector<std::string>>& cl) {
    std::set<std::string> seen;
    for (const auto& c : cl) seen.insert(c.begin(), c.end());
    return seen.size() == 3;
  };
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (covers({subsets[i]})) clusterings.push_back({subsets[i]});
    for (std::size_t j = i; j < subsets.size(); ++j) {
      if (covers({subsets[i], subsets[j]})) clusterings.push_back({subsets[i], subsets[j]});
      for (std::size_t k = j; k < subsets.size(); ++k) {
        if (covers({subsets[i], subsets[j], subsets[k]})) {
          clusterings.push_back({subsets[i], subsets[j], subsets[k]});
        }
      }
    }
  }
  REQUIRE(clusterings.size() > 50);
  std::size_t optima = 0;
  for (const auto& gc : clusterings) {
    for (const auto& cc : clusterings) {
      double f1 = cice_f1(Clustering(u, gc), Clustering(u, cc));
      bool identical = gc == cc;  // both sorted multisets by construction
      if (f1 == 1.0) ++optima;
      CHECK((f1 == 1.0) == identical);
      if (!identical) CHECK(f1 < 1.0);
    }
  }
  CHECK(optima == clusterings.size());

  // positional order is irrelevant to the optimum
  Clustering ab(u, {{"1"}, {"2", "3"}});
  Clustering ba(u, {{"2", "3"}, {"1"}});
  CHECK(cice_f1(ab, ba) == 1.0);
}

TEST_CASE("a single cluster covering a two-class gold standard is not optimal") {
  // smallest multiple-cluster-coverage instance: P = 1/4, R = 1/2, F1 = 1/3
  auto u = make_universe({"1", "2"}, {"a"});
  Biclustering covering(u, {Bicluster{{"1", "2"}, {"a"}}});
  Biclustering gold(u, {Bicluster{{"1"}, {"a"}}, Bicluster{{"2"}, {"a"}}});
  auto s = mocice_bcubed(covering, gold);
  CHECK(s.precision == Approx(0.25).epsilon(1e-12));
  CHECK(s.recall == Approx(0.5).epsilon(1e-12));
  CHECK(s.f1 == Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("CICE micro overload requires equal clustered universes") {
  auto g = testsup::micro1d({{"1", "2"}});
  auto c = testsup::micro1d({{"1", "2"}, {"3"}});
  CHECK_THROWS_AS(cice_bcubed(g, c), CoverageError);
  CHECK(cice_bcubed(c, c).f1 == Approx(1.0));
}
