#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "biceval/baseline.hpp"
#include "biceval/bcubed.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace biceval;
using doctest::Approx;

namespace {

std::vector<std::vector<MicroObject>> canonical(const MicroClustering& m) {
  std::vector<std::vector<MicroObject>> out;
  for (const auto& cl : m.clusters()) {
    if (!cl.empty()) out.push_back(cl);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("MOCICE equals CICE on embedded clusterings") {
  testsup::Rng rng(1001);
  for (int it = 0; it < 120; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 2, 12)),
                           testsup::ids("f", testsup::draw(rng, 1, 6)));
    auto g = testsup::random_covering_clustering(rng, u);
    auto c = testsup::random_covering_clustering(rng, u);
    auto x = testsup::nonempty_subset(rng, u->features());
    double embedded = mocice_f1(as_biclustering(g, x), as_biclustering(c, x)).value;
    double direct = cice_f1(g, c);
    CHECK(std::abs(embedded - direct) <= 1e-12);
  }
}

TEST_CASE("MOCICE matches the equation-by-equation oracle on random biclusterings") {
  testsup::Rng rng(1002);
  for (int it = 0; it < 50; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 2, 6)),
                           testsup::ids("f", testsup::draw(rng, 1, 3)));
    auto gb = testsup::random_biclustering(rng, u);
    auto cb = testsup::random_biclustering(rng, u);
    auto got = mocice_bcubed(gb, cb);
    auto expected = oracle::mocice(gb, cb);
    CHECK(got.precision == Approx(expected.precision).epsilon(1e-12));
    CHECK(got.recall == Approx(expected.recall).epsilon(1e-12));
    CHECK(got.f1 == Approx(expected.f1).epsilon(1e-12));
  }
}

TEST_CASE("CICE matches the oracle on random covering clusterings") {
  testsup::Rng rng(1003);
  for (int it = 0; it < 40; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 2, 7)), {"a"});
    auto g = testsup::random_covering_clustering(rng, u);
    auto c = testsup::random_covering_clustering(rng, u);
    auto got = cice_bcubed(g, c);
    auto expected = oracle::cice(g, c);
    CHECK(got.f1 == Approx(expected.f1).epsilon(1e-12));
    auto got_plain = bcubed(g, c);
    auto expected_plain = oracle::cice(g, c, false);
    CHECK(got_plain.f1 == Approx(expected_plain.f1).epsilon(1e-12));
  }
}

TEST_CASE("CE never exceeds RNIA and both are symmetric unit-range scores") {
  // CE's domain: clusters disjoint within each side (coverage may be partial)
  testsup::Rng rng(1004);
  for (int it = 0; it < 100; ++it) {
    auto g = testsup::random_micro_partition(rng, testsup::draw(rng, 1, 5),
                                             testsup::draw(rng, 1, 3));
    auto c = testsup::random_micro_partition(rng, testsup::draw(rng, 1, 5),
                                             testsup::draw(rng, 1, 3));
    double ce_gc = ce(g, c).value;
    double rnia_gc = rnia(g, c).value;
    CHECK(ce_gc <= rnia_gc + 1e-12);  // matched intersections are disjoint subsets of I
    CHECK(ce_gc >= 0.0);
    CHECK(ce_gc <= 1.0);
    CHECK(rnia_gc >= 0.0);
    CHECK(rnia_gc <= 1.0);
    CHECK(ce(c, g).value == Approx(ce_gc).epsilon(1e-12));
    CHECK(rnia(c, g).value == Approx(rnia_gc).epsilon(1e-12));
  }
}

TEST_CASE("Rand and VI match their oracles on random partition pairs and are symmetric") {
  testsup::Rng rng(1005);
  for (int it = 0; it < 60; ++it) {
    auto g = testsup::random_micro_partition(rng, 4, 2);
    auto c = testsup::random_micro_partition(rng, 4, 2);
    auto gu = clustered_universe(g);
    auto cu = clustered_universe(c);
    std::vector<MicroObject> all;
    std::set_union(gu.begin(), gu.end(), cu.begin(), cu.end(), std::back_inserter(all));
    if (all.size() < 2) continue;

    double r = rand_index(g, c).value;
    CHECK(r == Approx(oracle::rand_pair_counting(oracle::micro_sets(g), oracle::micro_sets(c)))
                   .epsilon(1e-12));
    CHECK(rand_index(c, g).value == Approx(r).epsilon(1e-12));
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);

    double v = vi(g, c).value;
    CHECK(v == Approx(oracle::vi_entropy(oracle::micro_sets(g), oracle::micro_sets(c)))
                   .epsilon(1e-9));
    CHECK(vi(c, g).value == Approx(v).epsilon(1e-12));
    CHECK(v >= 0.0);
  }
}

TEST_CASE("MOCICE components stay inside the unit interval") {
  testsup::Rng rng(1006);
  for (int it = 0; it < 60; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 2, 6)),
                           testsup::ids("f", testsup::draw(rng, 1, 3)));
    auto s = mocice_bcubed(testsup::random_biclustering(rng, u), testsup::random_biclustering(rng, u));
    CHECK(s.precision >= 0.0);
    CHECK(s.precision <= 1.0 + 1e-15);
    CHECK(s.recall >= 0.0);
    CHECK(s.recall <= 1.0 + 1e-15);
    CHECK(s.f1 >= 0.0);
    CHECK(s.f1 <= 1.0 + 1e-15);
  }
}

TEST_CASE("MOCICE reaches 1 exactly on equal induced micro-clusterings") {
  testsup::Rng rng(1007);
  for (int it = 0; it < 80; ++it) {
    auto u = make_universe(testsup::ids("o", 3), testsup::ids("f", 2));
    auto gb = testsup::random_biclustering(rng, u, 3);
    auto cb = testsup::random_biclustering(rng, u, 3);
    bool same = canonical(micro_transform(gb)) == canonical(micro_transform(cb));
    CHECK((mocice_f1(gb, cb).value == 1.0) == same);
  }
}

TEST_CASE("scale and copy invariance on random biclusterings") {
  testsup::Rng rng(1008);
  for (int it = 0; it < 10; ++it) {
    auto u = make_universe(testsup::ids("o", testsup::draw(rng, 3, 6)),
                           testsup::ids("f", testsup::draw(rng, 2, 3)));
    auto gb = testsup::random_biclustering(rng, u);
    auto cb = testsup::random_biclustering(rng, u);
    double base = mocice_f1(gb, cb).value;
    for (unsigned k : {2u, 3u}) {
      CHECK(mocice_f1(scale(gb, k), scale(cb, k)).value == Approx(base).epsilon(1e-9));
      CHECK(mocice_f1(copy(gb, k), copy(cb, k)).value == Approx(base).epsilon(1e-9));
    }
  }
}
