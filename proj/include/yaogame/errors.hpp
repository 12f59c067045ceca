#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yaogame {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A strategy's label sequence does not match the matrix axis it is used on.
class LabelMismatch : public Error {
 public:
  using Error::Error;
};

/// An offline cost entry is zero or negative; ratios would be undefined.
class ZeroOfflineCost : public Error {
 public:
  using Error::Error;
};

/// A cost-derived ratio fell below 1 and the raw-game flag was not set.
class SubUnitRatio : public Error {
 public:
  using Error::Error;
};

/// A cost model violates its structural invariants (negative or non-finite costs).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// A probability vector is not a distribution (negative mass, bad sum, empty support).
class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Problem-generator parameters out of range (e.g. ski-rental horizon shorter than buy cost).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// Structured-text ingestion failure; message carries position/field diagnostics.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The equalization system is inconsistent or its solution has negative mass.
class NoFeasibleEqualizer : public Error {
 public:
  using Error::Error;
};

/// The equalization system is rank-deficient and no nonnegative representative was found.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Support enumeration exhausted the size bound without an accepted pair.
class NoSupportFound : public Error {
 public:
  using Error::Error;
};

/// Support enumeration would exceed the candidate budget.
class EnumerationRefused : public Error {
 public:
  EnumerationRefused(const std::string& what, std::uint64_t candidates)
      : Error(what), candidate_count(candidates) {}
  std::uint64_t candidate_count;
};

class PivotLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NonFiniteEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace yaogame
