#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/** A weight matrix does not have full row rank where required. */
class RankDeficientError : public std::runtime_error {
 public:
  explicit RankDeficientError(const std::string& what = "matrix is rank deficient")
      : std::runtime_error(what) {}
};

/** Input size exceeds the configured enumeration limit. */
class LimitExceededError : public std::runtime_error {
 public:
  explicit LimitExceededError(const std::string& what = "column count exceeds limit")
      : std::runtime_error(what) {}
};

/** A claimed fan violates the pairwise common-face axiom or cone shape. */
class MalformedFanError : public std::runtime_error {
 public:
  explicit MalformedFanError(const std::string& what = "malformed fan")
      : std::runtime_error(what) {}
};

/** Columns of a claimed simplicial cone are linearly dependent. */
class SingularConeError : public std::runtime_error {
 public:
  explicit SingularConeError(const std::string& what = "cone columns are dependent")
      : std::runtime_error(what) {}
};

/** An operation requires the primitivity/positive-span conditions. */
class PreconditionFailedError : public std::runtime_error {
 public:
  explicit PreconditionFailedError(const std::string& what = "precondition failed")
      : std::runtime_error(what) {}
};

/** Twisting degrees too small for the cohomology-vanishing threshold. */
class DegreeTooSmallError : public std::runtime_error {
 public:
  std::vector<int> offending_indices;  // 0-based

  explicit DegreeTooSmallError(std::vector<int> indices, const std::string& what)
      : std::runtime_error(what), offending_indices(std::move(indices)) {}
};

/** Problem file could not be parsed or has inconsistent shapes. */
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric
