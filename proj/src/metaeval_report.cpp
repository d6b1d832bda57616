#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>

#include "biceval/baseline.hpp"
#include "biceval/bcubed.hpp"
#include "biceval/error.hpp"
#include "biceval/metaeval.hpp"

namespace biceval {

namespace {

constexpr double kStrictMargin = 1e-12;
constexpr double kEqualTolerance = 1e-9;

std::string strprintf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

double harmonic(double a, double b) { return (a + b) == 0.0 ? 0.0 : 2.0 * a * b / (a + b); }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "FAIL";
    case Verdict::error: return "ERROR";
  }
  return "?";
}

const std::vector<MeasureRef>& builtin_measures() {
  static const std::vector<MeasureRef> measures = [] {
    std::vector<MeasureRef> v;
    v.push_back({"ce", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return ce(micro_transform(g), micro_transform(c)).value;
                 },
                 nullptr});
    v.push_back({"rnia", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return rnia(micro_transform(g), micro_transform(c)).value;
                 },
                 nullptr});
    v.push_back({"rand", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return rand_index(micro_transform(g), micro_transform(c)).value;
                 },
                 nullptr});
    v.push_back({"vi", Orientation::dissimilarity, 0.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return vi(micro_transform(g), micro_transform(c)).value;
                 },
                 nullptr});
    v.push_back({"e4sc", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return e4sc(micro_transform(g), micro_transform(c)).value;
                 },
                 [](const Biclustering& g, const Biclustering& c) {
                   auto mg = micro_transform(g);
                   auto mc = micro_transform(c);
                   return std::make_pair(e4sc_macro_f1(mg, mc), e4sc_macro_f1(mc, mg));
                 }});
    v.push_back({"bcubed-f1", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return bcubed(micro_transform(g), micro_transform(c)).f1;
                 },
                 [](const Biclustering& g, const Biclustering& c) {
                   auto s = bcubed(micro_transform(g), micro_transform(c));
                   return std::make_pair(s.precision, s.recall);
                 }});
    v.push_back({"cice-f1", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) {
                   return cice_bcubed(micro_transform(g), micro_transform(c)).f1;
                 },
                 [](const Biclustering& g, const Biclustering& c) {
                   auto s = cice_bcubed(micro_transform(g), micro_transform(c));
                   return std::make_pair(s.precision, s.recall);
                 }});
    v.push_back({"mocice-f1", Orientation::similarity, 1.0,
                 [](const Biclustering& g, const Biclustering& c) { return mocice_bcubed(g, c).f1; },
                 [](const Biclustering& g, const Biclustering& c) {
                   auto s = mocice_bcubed(g, c);
                   return std::make_pair(s.precision, s.recall);
                 }});
    return v;
  }();
  return measures;
}

const MeasureRef* find_measure(std::string_view name) {
  for (const auto& m : builtin_measures()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

// Positive when `a` is strictly better than `b` under the orientation.
double improvement(const MeasureRef& m, double a, double b) {
  return m.orientation == Orientation::similarity ? a - b : b - a;
}

}  // namespace

CheckOutcome check(const MeasureRef& measure, const Scenario& scenario) {
  try {
    double reference = measure.eval(scenario.better.candidate, scenario.better.gold);
    switch (scenario.relation) {
      case Relation::strictly_better:
        for (const auto& pair : scenario.worse) {
          double other = measure.eval(pair.candidate, pair.gold);
          if (!(improvement(measure, reference, other) > kStrictMargin)) {
            return {Verdict::fail, strprintf("expected strictly better: better=%.6f worse=%.6f",
                                             reference, other)};
          }
        }
        return {};
      case Relation::equal_score:
        for (const auto& pair : scenario.worse) {
          double other = measure.eval(pair.candidate, pair.gold);
          if (!(std::abs(reference - other) <= kEqualTolerance)) {
            return {Verdict::fail, strprintf("expected equal scores: base=%.12f transformed=%.12f",
                                             reference, other)};
          }
        }
        return {};
      case Relation::optimum_iff_identical: {
        if (!(std::abs(reference - measure.optimum) <= kEqualTolerance)) {
          return {Verdict::fail,
                  strprintf("identical pair misses the optimum: score=%.12f", reference)};
        }
        for (const auto& pair : scenario.worse) {
          double other = measure.eval(pair.candidate, pair.gold);
          if (std::abs(other - measure.optimum) <= kEqualTolerance) {
            return {Verdict::fail,
                    strprintf("non-identical candidate reaches the optimum: score=%.12f", other)};
          }
        }
        return {};
      }
      case Relation::not_optimum:
        if (std::abs(reference - measure.optimum) <= kEqualTolerance) {
          return {Verdict::fail,
                  strprintf("single covering cluster reaches the optimum: score=%.12f", reference)};
        }
        return {};
    }
    return {};
  } catch (const Error& e) {
    return {Verdict::error, e.what()};
  }
}

const ComplianceCell& ComplianceReport::cell(std::string_view measure, Condition c) const {
  for (std::size_t m = 0; m < measure_names.size(); ++m) {
    if (measure_names[m] != measure) continue;
    for (std::size_t k = 0; k < conditions.size(); ++k) {
      if (conditions[k] == c) return cells[m][k];
    }
  }
  throw InvalidInputError("no such compliance cell");
}

ComplianceReport run_compliance(const std::vector<MeasureRef>& measures,
                                const std::vector<Condition>& conditions, const SuiteOptions& opts) {
  ComplianceReport report;
  report.conditions = conditions;
  for (const auto& m : measures) report.measure_names.push_back(m.name);
  report.metadata = {
      {"vi_log_base", "2"},
      {"equal_tolerance", "1e-9"},
      {"strict_margin", "1e-12"},
      {"seeds", std::to_string(opts.seeds)},
      {"base_seed", std::to_string(opts.base_seed)},
  };
  report.cells.assign(measures.size(), std::vector<ComplianceCell>(conditions.size()));

  for (std::size_t k = 0; k < conditions.size(); ++k) {
    auto scenarios = scenarios_for(conditions[k], opts);
    for (const auto& s : scenarios) validate_scenario(s);
    for (std::size_t m = 0; m < measures.size(); ++m) {
      ComplianceCell& cell = report.cells[m][k];
      cell.scenarios = scenarios.size();
      for (const auto& s : scenarios) {
        auto outcome = check(measures[m], s);
        if (outcome.verdict == Verdict::pass) continue;
        if (outcome.verdict == Verdict::fail) {
          ++cell.failures;
        } else {
          ++cell.errors;
        }
        if (cell.witness.empty()) cell.witness = s.label + ": " + outcome.detail;
      }
      cell.verdict = cell.failures > 0 ? Verdict::fail
                     : cell.errors > 0 ? Verdict::error
                                       : Verdict::pass;
    }
  }
  return report;
}

std::string ComplianceReport::to_text() const {
  std::ostringstream out;
  for (const auto& [key, value] : metadata) out << "# " << key << "=" << value << "\n";
  out << strprintf("%-12s", "measure");
  for (Condition c : conditions) out << strprintf("%-7s", std::string(condition_id(c)).c_str());
  out << "\n";
  for (std::size_t m = 0; m < measure_names.size(); ++m) {
    out << strprintf("%-12s", measure_names[m].c_str());
    for (std::size_t k = 0; k < conditions.size(); ++k) {
      out << strprintf("%-7s", std::string(to_string(cells[m][k].verdict)).c_str());
    }
    out << "\n";
  }
  bool header = false;
  for (std::size_t m = 0; m < measure_names.size(); ++m) {
    for (std::size_t k = 0; k < conditions.size(); ++k) {
      const auto& cell = cells[m][k];
      if (cell.verdict == Verdict::pass) continue;
      if (!header) {
        out << "witnesses:\n";
        header = true;
      }
      out << "  " << measure_names[m] << " / " << condition_id(conditions[k]) << " ("
          << condition_name(conditions[k]) << "), " << cell.failures << " failed and " << cell.errors
          << " errored of " << cell.scenarios << ": " << cell.witness << "\n";
    }
  }
  return out.str();
}

std::string ComplianceReport::to_tsv() const {
  std::ostringstream out;
  for (const auto& [key, value] : metadata) out << "# " << key << "=" << value << "\n";
  out << "measure\tcondition\tverdict\tscenarios\tfailures\terrors\twitness\n";
  for (std::size_t m = 0; m < measure_names.size(); ++m) {
    for (std::size_t k = 0; k < conditions.size(); ++k) {
      const auto& cell = cells[m][k];
      out << measure_names[m] << "\t" << condition_id(conditions[k]) << "\t"
          << to_string(cell.verdict) << "\t" << cell.scenarios << "\t" << cell.failures << "\t"
          << cell.errors << "\t" << cell.witness << "\n";
    }
  }
  return out.str();
}

double round3(double v) { return std::floor(v * 1000.0 + 0.5) / 1000.0; }

namespace {

struct GoldenCell {
  double score1;
  double score2;
};

struct GoldenRow {
  const char* measure;
  GoldenCell homogeneity;
  GoldenCell ragbag;
};

// The six published cells.
constexpr GoldenRow kGolden[] = {
    {"ce", {0.556, 0.556}, {0.556, 0.556}},
    {"rnia", {1.000, 1.000}, {1.000, 1.000}},
    {"e4sc", {0.544, 0.606}, {0.543, 0.533}},
};

Table1Cell score_cell(const MeasureRef& m, const Biclustering& g1, const Biclustering& g2,
                      const Biclustering& gold) {
  double full1 = m.eval(g1, gold);
  double full2 = m.eval(g2, gold);
  Table1Cell cell;
  if (m.components) {
    // Compound scores are presented the way the published table combines
    // them: components rounded to three decimals first.
    auto [a1, b1] = m.components(g1, gold);
    auto [a2, b2] = m.components(g2, gold);
    cell.score1 = round3(harmonic(round3(a1), round3(b1)));
    cell.score2 = round3(harmonic(round3(a2), round3(b2)));
  } else {
    cell.score1 = round3(full1);
    cell.score2 = round3(full2);
  }
  cell.violated = !(improvement(m, full2, full1) > kStrictMargin);
  return cell;
}

}  // namespace

const Table1Row& Table1Report::row(std::string_view measure) const {
  for (const auto& r : rows) {
    if (r.measure == measure) return r;
  }
  throw InvalidInputError("no such table row");
}

Table1Report table1(const std::vector<MeasureRef>& measures) {
  for (const char* required : {"ce", "rnia", "e4sc"}) {
    bool found = false;
    for (const auto& m : measures) found = found || m.name == required;
    if (!found) {
      throw InvalidInputError(std::string("table reproduction requires the measure '") + required +
                              "'");
    }
  }

  Table1Report report;
  auto homog_gold = homogeneity_fixture_gold();
  auto ragbag_gold = ragbag_fixture_gold();
  for (const auto& m : measures) {
    Table1Row row;
    row.measure = m.name;
    row.homogeneity = score_cell(m, homogeneity_fixture_candidate1(), homogeneity_fixture_candidate2(),
                                 homog_gold);
    row.ragbag = score_cell(m, ragbag_fixture_candidate1(), ragbag_fixture_candidate2(), ragbag_gold);
    report.rows.push_back(std::move(row));
  }

  for (const auto& golden : kGolden) {
    const auto& row = report.row(golden.measure);
    auto check_cell = [&](const char* name, const Table1Cell& cell, const GoldenCell& expect) {
      if (std::abs(cell.score1 - expect.score1) > 5e-4 ||
          std::abs(cell.score2 - expect.score2) > 5e-4) {
        report.golden_ok = false;
        report.golden_failures.push_back(
            strprintf("%s/%s: got (%.3f, %.3f), published (%.3f, %.3f)", golden.measure, name,
                      cell.score1, cell.score2, expect.score1, expect.score2));
      }
    };
    check_cell("homogeneity", row.homogeneity, golden.homogeneity);
    check_cell("ragbag", row.ragbag, golden.ragbag);
  }
  return report;
}

std::string Table1Report::to_text() const {
  std::ostringstream out;
  out << strprintf("%-12s%-18s%-18s\n", "measure", "homogeneity", "rag bag");
  for (const auto& row : rows) {
    auto cell_text = [](const Table1Cell& c) {
      return strprintf("%.3f  %.3f%s", c.score1, c.score2, c.violated ? " *" : "  ");
    };
    out << strprintf("%-12s%-18s%-18s\n", row.measure.c_str(), cell_text(row.homogeneity).c_str(),
                     cell_text(row.ragbag).c_str());
  }
  out << "(* the condition is violated: candidate 1 scored equal or better than candidate 2)\n";
  if (!golden_ok) {
    out << "published-cell mismatches:\n";
    for (const auto& f : golden_failures) out << "  " << f << "\n";
  }
  return out.str();
}

std::string Table1Report::to_tsv() const {
  std::ostringstream out;
  out << "measure\tfixture\tscore1\tscore2\tviolated\n";
  for (const auto& row : rows) {
    out << strprintf("%s\thomogeneity\t%.3f\t%.3f\t%d\n", row.measure.c_str(),
                     row.homogeneity.score1, row.homogeneity.score2, row.homogeneity.violated ? 1 : 0);
    out << strprintf("%s\tragbag\t%.3f\t%.3f\t%d\n", row.measure.c_str(), row.ragbag.score1,
                     row.ragbag.score2, row.ragbag.violated ? 1 : 0);
  }
  return out.str();
}

}  // namespace biceval
