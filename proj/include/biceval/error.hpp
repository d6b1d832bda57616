#pragma once

#include <stdexcept>
#include <string>

namespace biceval {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown id, duplicate id within one part, inconsistent
/// universes, bad file syntax.
struct InvalidInputError : Error {
  using Error::Error;
};

/// A parameter lies outside its admissible domain (e.g. k = 0 for scale/copy).
struct DomainError : Error {
  using Error::Error;
};

/// The requested score is undefined for this input (empty clustered universe,
/// fewer than two micro-objects for pair counting, ...).
struct UndefinedScoreError : Error {
  using Error::Error;
};

/// Rand / VI input whose clusters overlap: not a partition even after
/// singleton completion.
struct NotAPartitionError : Error {
  using Error::Error;
};

/// CICE-BCubed coverage assumption violated: some element of the universe is
/// clustered on neither or only one side.
struct CoverageError : Error {
  using Error::Error;
};

}  // namespace biceval
