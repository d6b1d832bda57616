#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biceval/baseline.hpp"
#include "biceval/bcubed.hpp"
#include "biceval/error.hpp"
#include "biceval/io.hpp"
#include "biceval/metaeval.hpp"

namespace {

using namespace biceval;

// Exit codes: 0 success, 1 internal error, 2 usage error, then one code per
// measure precondition family.
enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kUndefinedScore = 4,
  kNotAPartition = 5,
  kCoverage = 6,
  kDomain = 7,
};

struct ScoreOutput {
  std::string measure;
  Orientation orientation;
  double value;
  std::optional<std::pair<double, double>> components;  // precision, recall
};

void print_score(const ScoreOutput& out, const std::string& format) {
  if (format == "tsv") {
    std::printf("%s\t%s\t%.6f", out.measure.c_str(), std::string(to_string(out.orientation)).c_str(),
                out.value);
    if (out.components) std::printf("\t%.6f\t%.6f", out.components->first, out.components->second);
    std::printf("\n");
    return;
  }
  std::printf("measure: %s\n", out.measure.c_str());
  std::printf("orientation: %s\n", std::string(to_string(out.orientation)).c_str());
  std::printf("value: %.6f\n", out.value);
  if (out.components) {
    std::printf("precision: %.6f\n", out.components->first);
    std::printf("recall: %.6f\n", out.components->second);
  }
}

int run_score(const std::string& measure, const std::string& candidate_path,
              const std::string& gold_path, const std::string& orientation,
              const std::string& format) {
  if (find_measure(measure) == nullptr) {
    std::fprintf(stderr, "error: unknown measure '%s'\n", measure.c_str());
    return kUsage;
  }
  if (orientation == "raw" && measure != "ce" && measure != "rnia") {
    std::fprintf(stderr, "error: --orientation raw applies to ce and rnia only\n");
    return kUsage;
  }

  auto candidate_doc = read_clustering_file(candidate_path);
  auto gold_doc = read_clustering_file(gold_path);
  if (!candidate_doc.universe()->same_sets(*gold_doc.universe())) {
    throw InvalidInputError("candidate and gold standard declare different universes");
  }

  ScoreOutput out;
  out.measure = measure;
  out.orientation = Orientation::similarity;

  if (measure == "cice-f1" || measure == "bcubed-f1") {
    // object-space contract: traditional clustering files covering the universe
    auto g = candidate_doc.to_clustering();
    auto c = gold_doc.to_clustering();
    auto s = measure == "cice-f1" ? cice_bcubed(g, c) : bcubed(g, c);
    out.value = s.f1;
    out.components = {s.precision, s.recall};
  } else if (measure == "mocice-f1") {
    auto s = mocice_bcubed(candidate_doc.to_biclustering(), gold_doc.to_biclustering());
    out.value = s.f1;
    out.components = {s.precision, s.recall};
  } else {
    auto g = micro_transform(candidate_doc.to_biclustering());
    auto c = micro_transform(gold_doc.to_biclustering());
    if (measure == "ce") {
      out.value = ce(g, c).value;
    } else if (measure == "rnia") {
      out.value = rnia(g, c).value;
    } else if (measure == "rand") {
      out.value = rand_index(g, c).value;
    } else if (measure == "vi") {
      out.value = vi(g, c).value;
      out.orientation = Orientation::dissimilarity;
    } else {  // e4sc; components are the two macro-averaged F1 halves
      out.value = e4sc(g, c).value;
      out.components = {e4sc_macro_f1(g, c), e4sc_macro_f1(c, g)};
    }
    if (orientation == "raw") {
      out.value = 1.0 - out.value;
      out.orientation = Orientation::dissimilarity;
    }
  }
  print_score(out, format);
  return kOk;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int run_metaeval(const std::string& measures_csv, const std::string& conditions_csv,
                 std::size_t seeds, std::optional<std::uint64_t> base_seed_flag, bool table,
                 const std::string& format) {
  std::vector<MeasureRef> measures;
  if (measures_csv.empty()) {
    measures = builtin_measures();
  } else {
    for (const auto& name : split_csv(measures_csv)) {
      const auto* m = find_measure(name);
      if (m == nullptr) {
        std::fprintf(stderr, "error: unknown measure '%s'\n", name.c_str());
        return kUsage;
      }
      measures.push_back(*m);
    }
  }

  if (table) {
    auto report = table1(measures);
    std::fputs((format == "tsv" ? report.to_tsv() : report.to_text()).c_str(), stdout);
    if (!report.golden_ok) {
      std::fprintf(stderr, "error: the published score cells were not reproduced\n");
      return kInternal;
    }
    return kOk;
  }

  std::vector<Condition> conditions;
  if (conditions_csv.empty()) {
    conditions.assign(std::begin(kAllConditions), std::end(kAllConditions));
  } else {
    for (const auto& name : split_csv(conditions_csv)) {
      auto c = condition_from_string(name);
      if (!c) {
        std::fprintf(stderr, "error: unknown condition '%s'\n", name.c_str());
        return kUsage;
      }
      conditions.push_back(*c);
    }
  }

  SuiteOptions opts;
  opts.seeds = seeds;
  if (base_seed_flag) {
    opts.base_seed = *base_seed_flag;
  } else if (const char* env = std::getenv("BICEVAL_SEED")) {
    opts.base_seed = std::strtoull(env, nullptr, 10);
  }

  auto report = run_compliance(measures, conditions, opts);
  std::fputs((format == "tsv" ? report.to_tsv() : report.to_text()).c_str(), stdout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biceval: external evaluation measures for biclusterings and clusterings"};
  app.require_subcommand(1);

  std::string measure, candidate_path, gold_path;
  std::string orientation = "similarity";
  std::string score_format = "text";
  auto* score_cmd =
      app.add_subcommand("score", "score a candidate clustering file against a gold standard file");
  score_cmd->add_option("--measure", measure,
                        "ce, rnia, rand, vi, e4sc, bcubed-f1, cice-f1 or mocice-f1")
      ->required();
  score_cmd->add_option("--candidate", candidate_path, "candidate clustering file")->required();
  score_cmd->add_option("--gold", gold_path, "gold standard clustering file")->required();
  score_cmd->add_option("--orientation", orientation, "similarity (default) or raw (ce/rnia only)")
      ->check(CLI::IsMember({"similarity", "raw"}));
  score_cmd->add_option("--format", score_format, "text (default) or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::string measures_csv, conditions_csv;
  std::size_t seeds = 100;
  std::optional<std::uint64_t> base_seed;
  bool table = false;
  std::string meta_format = "text";
  auto* meta_cmd = app.add_subcommand(
      "metaeval", "check measures against the meta-evaluation conditions A.1-A.5 and B.1-B.5");
  meta_cmd->add_option("--measures", measures_csv, "comma-separated measure names (default: all)");
  meta_cmd->add_option("--conditions", conditions_csv,
                       "comma-separated condition ids (default: all)");
  meta_cmd->add_option("--seeds", seeds, "randomized scenarios per condition (default 100)");
  meta_cmd->add_option("--base-seed", base_seed,
                       "base seed for scenario generation (BICEVAL_SEED overrides the default)");
  meta_cmd->add_flag("--table1", table, "reproduce the published fixture table and verify its cells");
  meta_cmd->add_option("--format", meta_format, "text (default) or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (score_cmd->parsed()) {
      return run_score(measure, candidate_path, gold_path, orientation, score_format);
    }
    return run_metaeval(measures_csv, conditions_csv, seeds, base_seed, table, meta_format);
  } catch (const NotAPartitionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNotAPartition;
  } catch (const UndefinedScoreError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUndefinedScore;
  } catch (const CoverageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kCoverage;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kDomain;
  } catch (const InvalidInputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kInternal;
  }
}
