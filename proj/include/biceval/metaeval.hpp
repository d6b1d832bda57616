#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biceval/core.hpp"
#include "biceval/score.hpp"

namespace biceval {

/// The ten meta-evaluation conditions: A.1-A.5 for traditional clusterings
/// (homogeneity, completeness, rag bag, size vs quantity, perfect match) and
/// B.1-B.5 for biclusterings (penalty for non-intersection area, background
/// independence, scale invariance, copy invariance, multiple cluster coverage
/// penalty).
enum class Condition { A1, A2, A3, A4, A5, B1, B2, B3, B4, B5 };

inline constexpr Condition kAllConditions[] = {Condition::A1, Condition::A2, Condition::A3,
                                               Condition::A4, Condition::A5, Condition::B1,
                                               Condition::B2, Condition::B3, Condition::B4,
                                               Condition::B5};

std::string_view condition_id(Condition c);    // "A.1" ... "B.5"
std::string_view condition_name(Condition c);  // "homogeneity" ...
std::optional<Condition> condition_from_string(std::string_view s);

/// How the scenario's score pairs must relate for a measure to comply.
enum class Relation {
  strictly_better,         // the `better` pair must outscore every `worse` pair
  equal_score,             // every `worse` pair must score equal to `better`
  optimum_iff_identical,   // `better` is identical and must reach the optimum;
                           // every `worse` variant must not
  not_optimum,             // the single `better` pair must not reach the optimum
};

struct ScoredPair {
  Biclustering candidate;
  Biclustering gold;
};

/// One instantiated meta-evaluation condition. `better` holds the reference
/// pair (the premise's preferred clustering, the original pair for the
/// invariance conditions, or the identical pair for perfect-match); `worse`
/// holds the counterpart pairs the relation compares against.
struct Scenario {
  Condition condition;
  Relation relation;
  std::string label;
  ScoredPair better;
  std::vector<ScoredPair> worse;
};

/// Re-checks a scenario's set-theoretic premises from the condition's
/// enunciation, independently of the generator that built it. Throws
/// InvalidInputError with an explanation on violation.
void validate_scenario(const Scenario& s);

// --- reference fixtures -------------------------------------------------------

/// The two fixture families evaluated in the published comparison table:
/// candidates g1/g2 and the gold standard, on objects 1..9 and X = {1',2',3'}.
Biclustering homogeneity_fixture_candidate1();
Biclustering homogeneity_fixture_candidate2();
Biclustering homogeneity_fixture_gold();
Biclustering ragbag_fixture_candidate1();
Biclustering ragbag_fixture_candidate2();
Biclustering ragbag_fixture_gold();

Scenario homogeneity_fixture_scenario();  // tabled under A.1
Scenario ragbag_fixture_scenario();       // tabled under A.3

// --- scenario generators --------------------------------------------------

struct HomogeneityParams {
  std::vector<std::size_t> class_sizes;  // >= 2 classes, each >= 1
  std::size_t mixed_i = 0;               // the two classes the worse clustering mixes
  std::size_t mixed_j = 1;
  std::size_t split_i = 1;  // objects of each mixed class inside the mixed cluster
  std::size_t split_j = 1;
  std::size_t feature_count = 1;  // |X| of the embedding
  static HomogeneityParams randomized(std::uint64_t seed);
};
Scenario gen_homogeneity(const HomogeneityParams& p);

struct CompletenessParams {
  std::vector<std::size_t> class_sizes;  // >= 1 class
  std::size_t class_k = 0;               // class whose objects are split in the worse clustering
  std::size_t part_a = 1;                // sizes of the two pure clusters, part_a + part_b <= |C_k|
  std::size_t part_b = 1;
  std::size_t feature_count = 1;
  static CompletenessParams randomized(std::uint64_t seed);
};
Scenario gen_completeness(const CompletenessParams& p);

/// Rag bag instance with n >= 2: a clean cluster of n same-class objects plus
/// one stray object, and a noise cluster of n objects from n different
/// classes. gen_ragbag(4, 3) reproduces the published fixture.
Scenario gen_ragbag(std::size_t n, std::size_t feature_count = 3);

/// Size-vs-quantity instance with r >= 2.
Scenario gen_size_vs_quantity(std::size_t r, std::size_t feature_count = 1);

/// Perfect-match instance: an identical candidate/gold pair plus a family of
/// non-identical perturbations, on a small random clustering over `universe`.
Scenario gen_perfect_match(const UniversePtr& universe, std::uint64_t seed);

struct B1Params {
  std::uint64_t seed = 0;
  bool pollute_as_singleton = true;  // otherwise the stray object joins an existing bicluster
  static B1Params randomized(std::uint64_t seed);
};
Scenario gen_b1(const B1Params& p);

struct B2Params {
  std::uint64_t seed = 0;
  std::size_t extra_objects = 2;  // exactly one of the two extras may be zero
  std::size_t extra_features = 0;
  static B2Params randomized_objects(std::uint64_t seed);
  static B2Params randomized_features(std::uint64_t seed);
};
Scenario gen_b2(const B2Params& p);

struct B3Params {
  unsigned k = 2;
  std::uint64_t seed = 0;
  static B3Params randomized(std::uint64_t seed);
};
Scenario gen_b3(const B3Params& p);

struct B4Params {
  unsigned k = 2;
  std::uint64_t seed = 0;
  static B4Params randomized(std::uint64_t seed);
};
Scenario gen_b4(const B4Params& p);

struct B5Params {
  std::size_t classes = 2;  // >= 2
  std::uint64_t seed = 0;
  static B5Params randomized(std::uint64_t seed);
};
Scenario gen_b5(const B5Params& p);

// --- measures, compliance, table -----------------------------------------

/// A registered measure as seen by the harness: evaluated on biclustering
/// pairs, with its orientation and optimum score. `components` is set for
/// compound measures (precision/recall, or the two macro-F1 halves of E4SC).
struct MeasureRef {
  std::string name;
  Orientation orientation = Orientation::similarity;
  double optimum = 1.0;
  std::function<double(const Biclustering&, const Biclustering&)> eval;
  std::function<std::pair<double, double>(const Biclustering&, const Biclustering&)> components;
};

const std::vector<MeasureRef>& builtin_measures();
const MeasureRef* find_measure(std::string_view name);

enum class Verdict { pass, fail, error };
std::string_view to_string(Verdict v);

struct CheckOutcome {
  Verdict verdict = Verdict::pass;
  std::string detail;  // witnessing scores or the propagated error
};

/// Evaluates the measure on the scenario's pairs and compares them according
/// to the scenario's relation: strict relations require a margin > 1e-12,
/// equal-score relations hold within 1e-9. Measure errors are reported as
/// Verdict::error.
CheckOutcome check(const MeasureRef& measure, const Scenario& scenario);

struct SuiteOptions {
  std::size_t seeds = 100;     // randomized scenarios per condition
  std::uint64_t base_seed = 0;
};

/// All scenarios the compliance suite runs for one condition: fixed minimal
/// instances, the reference fixtures where applicable, and `opts.seeds` randomized
/// instances. Deterministic: equal options yield bit-identical scenarios.
std::vector<Scenario> scenarios_for(Condition c, const SuiteOptions& opts);

struct ComplianceCell {
  Verdict verdict = Verdict::pass;
  std::size_t scenarios = 0;
  std::size_t failures = 0;
  std::size_t errors = 0;
  std::string witness;  // first failing/erroring scenario, with scores
};

struct ComplianceReport {
  std::vector<std::string> measure_names;
  std::vector<Condition> conditions;
  std::vector<std::vector<ComplianceCell>> cells;  // [measure][condition]
  std::vector<std::pair<std::string, std::string>> metadata;

  const ComplianceCell& cell(std::string_view measure, Condition c) const;
  std::string to_text() const;
  std::string to_tsv() const;
};

ComplianceReport run_compliance(const std::vector<MeasureRef>& measures,
                                const std::vector<Condition>& conditions, const SuiteOptions& opts);

/// Half-up rounding to three decimals, the presentation used by the published
/// score table.
double round3(double v);

struct Table1Cell {
  double score1 = 0.0;  // presentation value for candidate 1, 3 decimals
  double score2 = 0.0;  // candidate 2
  bool violated = false;  // candidate 1 scored equal or better than candidate 2
};

struct Table1Row {
  std::string measure;
  Table1Cell homogeneity;
  Table1Cell ragbag;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool golden_ok = true;  // the ce / rnia / e4sc cells match the published values
  std::vector<std::string> golden_failures;

  const Table1Row& row(std::string_view measure) const;
  std::string to_text() const;
  std::string to_tsv() const;
};

/// Scores the two reference fixtures with every given measure and checks the six
/// published cells (ce, rnia, e4sc are required). Compound measures are
/// presented the way the published table was computed: components rounded to
/// three decimals before being combined.
Table1Report table1(const std::vector<MeasureRef>& measures);

}  // namespace biceval
