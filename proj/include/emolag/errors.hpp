#ifndef EMOLAG_ERRORS_HPP
#define EMOLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emolag {

// Base class for every error raised by the library. The CLI maps
// IoError descendants to exit code 2 and AnalysisError descendants
// to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};
struct AnalysisError : Error {
  using Error::Error;
};

// corpus
struct UnreadablePath : IoError {
  using IoError::IoError;
};
struct SchemaError : IoError {
  using IoError::IoError;
};
struct EmptyCorpus : IoError {
  using IoError::IoError;
};
struct EmptyRegionSpec : IoError {
  using IoError::IoError;
};

// lexicon
struct ParseError : IoError {
  using IoError::IoError;
};
struct DuplicateCategory : IoError {
  using IoError::IoError;
};
struct EmptyLexicon : IoError {
  using IoError::IoError;
};
struct UnknownCategory : AnalysisError {
  using AnalysisError::AnalysisError;
};

// series
struct EmptySelection : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct TooShort : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct NoOverlap : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct CategoryMismatch : AnalysisError {
  using AnalysisError::AnalysisError;
};

// econ
struct SingularDesign : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct Underdetermined : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct ConstantSeries : AnalysisError {
  using AnalysisError::AnalysisError;
};
struct ConstantRegressor : AnalysisError {
  using AnalysisError::AnalysisError;
};

// cli
struct ConfigError : IoError {
  using IoError::IoError;
};

}  // namespace emolag

#endif  // EMOLAG_ERRORS_HPP
