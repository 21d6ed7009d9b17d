#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepcomp {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag that the CLI report writer emits verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed arguments or exceeded artifact limits.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("InvalidInput", message) {}
};

/// A documented operation precondition does not hold for the given values.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("PreconditionViolated", message) {}
};

/// A multiplication table fails one of the group axioms.
/// code() is one of NotClosed, NotAssociative, NoIdentity, MissingInverse;
/// `indices` names the offending element indices.
class GroupError : public Error {
 public:
  GroupError(std::string code, const std::string& message, std::vector<int> indices)
      : Error(std::move(code), message), indices_(std::move(indices)) {}

  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  std::vector<int> indices_;
};

/// A sigma-closure fixpoint would exceed the configured cap.
class ClosureOverflowError : public Error {
 public:
  ClosureOverflowError(std::size_t cap, std::size_t reached)
      : Error("ClosureOverflow", "sigma closure exceeds cap " + std::to_string(cap) +
                                     " (reached " + std::to_string(reached) + " sets)"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Generating a code would exceed the configured element cap.
class SizeOverflowError : public Error {
 public:
  SizeOverflowError(std::size_t cap, std::size_t reached)
      : Error("SizeOverflow", "code enumeration exceeds cap " + std::to_string(cap) +
                                  " (reached " + std::to_string(reached) + " elements)"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Generator images do not extend to a homomorphism.
/// code() is NotWellDefined (conflicting derivations; `element` set),
/// NotHomomorphic (`pair` set), or ImageOutsideTarget.
class HomBuildError : public Error {
 public:
  HomBuildError(std::string code, const std::string& message, int element = -1,
                std::pair<int, int> pair = {-1, -1})
      : Error(std::move(code), message), element_(element), pair_(pair) {}

  int element() const noexcept { return element_; }
  std::pair<int, int> pair() const noexcept { return pair_; }

 private:
  int element_;
  std::pair<int, int> pair_;
};

/// The support/weight construction cannot proceed.
/// code() is NotSeparating, NullFunctional, SupportAmbiguous, WeightIllDefined,
/// or RepresentationFailed. `point` is the target-space point at fault (-1 when
/// not applicable); `candidates` lists singleton-support candidates for
/// SupportAmbiguous.
class DecomposeError : public Error {
 public:
  DecomposeError(std::string code, const std::string& message, int point = -1,
                 std::vector<int> candidates = {})
      : Error(std::move(code), message), point_(point), candidates_(std::move(candidates)) {}

  int point() const noexcept { return point_; }
  const std::vector<int>& candidates() const noexcept { return candidates_; }

 private:
  int point_;
  std::vector<int> candidates_;
};

/// The equivalence search space exceeds the configured budget.
class SearchBudgetError : public Error {
 public:
  SearchBudgetError(unsigned long long required, unsigned long long cap)
      : Error("SearchBudgetExceeded",
              "equivalence search needs " + std::to_string(required) +
                  " candidates, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long required_;
  unsigned long long cap_;
};

/// Instance-file parsing failed. code() is SyntaxError, UnknownReference, or
/// ValidationError (a library error raised while building a declared object;
/// `detail_code` keeps the inner tag).
class ParseError : public Error {
 public:
  ParseError(std::string code, int line, const std::string& message,
             std::string detail_code = "")
      : Error(std::move(code), "line " + std::to_string(line) + ": " + message),
        line_(line),
        detail_code_(std::move(detail_code)) {}

  int line() const noexcept { return line_; }
  const std::string& detail_code() const noexcept { return detail_code_; }

 private:
  int line_;
  std::string detail_code_;
};

}  // namespace sepcomp
