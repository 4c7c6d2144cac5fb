#include "cartan/sampling.hpp"

#include <cmath>
#include <random>

#include "cartan/error.hpp"

namespace cartan {

SampleBox::SampleBox(std::vector<Interval> bounds, std::size_t samples,
                     std::uint64_t seed)
    : bounds_(std::move(bounds)), samples_(samples), seed_(seed) {
  if (samples_ == 0) throw ContextError("SampleBox: sample count must be >= 1");
  for (const Interval& iv : bounds_) {
    if (!(iv.low < iv.high)) {
      throw ContextError("SampleBox: each interval needs low < high");
    }
  }
  generate();
}

SampleBox SampleBox::cube(std::size_t dims, double low, double high,
                          std::size_t samples, std::uint64_t seed) {
  return SampleBox(std::vector<Interval>(dims, Interval{low, high}), samples,
                   seed);
}

void SampleBox::generate() {
  // mt19937_64 output is fixed by the standard; the uniform mapping is done
  // by hand so the points do not depend on the library's distributions.
  std::mt19937_64 rng(seed_);
  points_.reserve(samples_);
  for (std::size_t s = 0; s < samples_; ++s) {
    std::vector<double> p(bounds_.size());
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      p[i] = bounds_[i].low + u * (bounds_[i].high - bounds_[i].low);
    }
    points_.push_back(std::move(p));
  }
}

bool TolerancePolicy::excludes(const std::vector<double>& point) const {
  if (!exclusion) return false;
  try {
    return std::abs(exclusion->expr.eval(point)) <= exclusion->threshold;
  } catch (const EvalError&) {
    return true;
  }
}

ZeroVerdict is_zero(const Expr& e, const SampleBox& box,
                    const TolerancePolicy& pol) {
  if (e.arity() > box.dims()) {
    throw ContextError("is_zero: expression references more variables than "
                       "the sample box has");
  }
  ZeroVerdict verdict;
  if (e.is_constant()) {
    // Closed terms do not need sampling, but the exclusion contract still
    // decides whether any point is admissible.
    for (const auto& p : box.points()) {
      if (pol.excludes(p)) {
        ++verdict.skipped;
        continue;
      }
      ++verdict.evaluated;
      if (std::abs(e.value()) > pol.abs) {
        verdict.zero = false;
        verdict.witness = p;
        verdict.value = e.value();
        return verdict;
      }
    }
  } else {
    for (const auto& p : box.points()) {
      if (pol.excludes(p)) {
        ++verdict.skipped;
        continue;
      }
      Expr::Scaled v{};
      try {
        v = e.eval_scaled(p);
      } catch (const EvalError&) {
        ++verdict.skipped;
        continue;
      }
      ++verdict.evaluated;
      if (std::abs(v.value) > pol.abs + pol.rel * v.scale) {
        verdict.zero = false;
        verdict.witness = p;
        verdict.value = v.value;
        return verdict;
      }
    }
  }
  if (verdict.evaluated == 0) {
    throw InconclusiveError("is_zero: all " + std::to_string(box.samples()) +
                            " sample points were excluded or singular");
  }
  return verdict;
}

}  // namespace cartan
