#pragma once

#include <string_view>

namespace biceval {

/// Whether larger values of a measure mean better (similarity) or worse
/// (dissimilarity) agreement with the gold standard.
enum class Orientation { similarity, dissimilarity };

enum class ScoreRange { unit, nonnegative };

constexpr std::string_view to_string(Orientation o) {
  return o == Orientation::similarity ? "similarity" : "dissimilarity";
}

/// A measure value together with its orientation and declared range.
/// [0,1]-bounded dissimilarities (CE, RNIA) are converted to similarities via
/// 1 - d before being wrapped; VI never is.
struct Score {
  double value = 0.0;
  Orientation orientation = Orientation::similarity;
  ScoreRange range = ScoreRange::unit;
};

}  // namespace biceval
