#pragma once

// Randomized zero testing of expressions on a box of sample points.
//
// Deciding whether a closed-form expression vanishes identically is
// undecidable in general, so "zero" here always means "zero within
// tolerance at every admissible sample point".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cartan/expr.hpp"

namespace cartan {

struct Interval {
  double low;
  double high;
};

/// Axis-aligned box with a reproducible pseudo-random point set.
class SampleBox {
 public:
  SampleBox(std::vector<Interval> bounds, std::size_t samples,
            std::uint64_t seed = 0);

  /// The same interval on every one of `dims` axes.
  static SampleBox cube(std::size_t dims, double low, double high,
                        std::size_t samples, std::uint64_t seed = 0);

  std::size_t dims() const noexcept { return bounds_.size(); }
  std::size_t samples() const noexcept { return samples_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<Interval>& bounds() const noexcept { return bounds_; }

  /// `samples()` points, identical for identical (bounds, samples, seed).
  const std::vector<std::vector<double>>& points() const noexcept {
    return points_;
  }

 private:
  void generate();

  std::vector<Interval> bounds_;
  std::size_t samples_;
  std::uint64_t seed_;
  std::vector<std::vector<double>> points_;
};

/// Points where |expr| <= threshold are skipped by zero tests.
struct Exclusion {
  Expr expr;
  double threshold = 0.0;
};

struct TolerancePolicy {
  double abs = 1e-9;
  double rel = 0.0;
  std::optional<Exclusion> exclusion;

  /// True when `point` falls in the excluded region (or the exclusion
  /// expression cannot be evaluated there).
  bool excludes(const std::vector<double>& point) const;
};

struct ZeroVerdict {
  bool zero = true;
  std::vector<double> witness;  // first failing point when !zero
  double value = 0.0;           // expression value at the witness
  std::size_t evaluated = 0;    // admissible points tested
  std::size_t skipped = 0;      // excluded or singular points

  explicit operator bool() const noexcept { return zero; }
};

/// Samples `e` on `box`. Zero iff |e(p)| <= abs + rel * scale(p) at every
/// admissible point, where scale(p) is the largest absolute subterm of e
/// at p. Points that are excluded by `pol` or where e cannot be evaluated
/// are skipped; throws InconclusiveError when every point is skipped.
ZeroVerdict is_zero(const Expr& e, const SampleBox& box,
                    const TolerancePolicy& pol);

}  // namespace cartan
