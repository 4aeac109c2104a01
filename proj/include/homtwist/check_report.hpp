#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homtwist/tensor.hpp"

namespace homtwist {

struct Failure {
  std::string equation;
  std::vector<std::size_t> tuple;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  /// Symbolic rendering of both sides; replaces the coefficient vectors in
  /// messages when set (used where the spaces are not finite-dimensional).
  std::string detail;
};

/// Outcome of an axiom scan. `passed()` reflects every tuple scanned even
/// though only the first `cap` failures are kept.
class CheckReport {
 public:
  static constexpr std::size_t default_cap = 16;

  explicit CheckReport(std::size_t cap = default_cap) : cap_(cap) {}

  bool passed() const { return total_ == 0; }
  explicit operator bool() const { return passed(); }
  const std::vector<Failure>& failures() const { return failures_; }
  std::size_t failure_count() const { return total_; }
  std::size_t cap() const { return cap_; }

  void add_failure(Failure f);
  /// Appends another report's failures after this one's.
  void merge(const CheckReport& other);
  /// Same as merge but prefixes the equation ids, e.g. "precondition/".
  void merge_prefixed(const CheckReport& other, const std::string& prefix);

  /// First failure rendered on one line, or "passed".
  std::string summary() const;
  std::string format() const;

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  std::vector<Failure> failures_;
};

using Sides = std::pair<TensorVec, TensorVec>;
using Equation = std::function<Sides(std::span<const std::size_t>)>;

/// Evaluates `eq` on every tuple of the box `ranges` in lexicographic order and
/// records a failure whenever the two sides differ. Uses up to
/// `thread_count()` workers; the result does not depend on the worker count.
void scan(CheckReport& report, const std::string& id, const std::vector<std::size_t>& ranges, const Equation& eq);

/// Worker cap from HOMTWIST_THREADS (unset or 0 means hardware concurrency).
std::size_t thread_count();

std::string format_coeffs(const std::vector<Rational>& coeffs);

}  // namespace homtwist
