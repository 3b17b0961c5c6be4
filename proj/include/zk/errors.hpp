#pragma once

#include <stdexcept>
#include <string>

namespace zk {

struct EmptySubsetError : std::invalid_argument {
  explicit EmptySubsetError(const std::string& what) : std::invalid_argument(what) {}
};

struct DominatingVertexError : std::invalid_argument {
  explicit DominatingVertexError(const std::string& what) : std::invalid_argument(what) {}
};

// Lemma-level hypothesis failure: the complex is not neighbourly enough for
// the unstable wedge splitting.  Carries how far short it fell.
struct NeighbourlinessHypothesisError : std::runtime_error {
  int deficit;
  NeighbourlinessHypothesisError(const std::string& what, int deficit_)
      : std::runtime_error(what), deficit(deficit_) {}
};

struct OracleScaleError : std::runtime_error {
  explicit OracleScaleError(const std::string& what) : std::runtime_error(what) {}
};

struct SimplexExcludedError : std::invalid_argument {
  explicit SimplexExcludedError(const std::string& what) : std::invalid_argument(what) {}
};

struct MixedPrimeError : std::invalid_argument {
  explicit MixedPrimeError(const std::string& what) : std::invalid_argument(what) {}
};

struct DocumentError : std::runtime_error {
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zk
