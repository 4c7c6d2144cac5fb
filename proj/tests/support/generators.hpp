#pragma once

// Hand-rolled random generators for property tests. Everything is driven
// by an explicit mt19937_64 so a failing case can be replayed from its
// seed.

#include <cstdint>
#include <random>
#include <vector>

#include "cartan/expr.hpp"
#include "cartan/form.hpp"
#include "cartan/vector_calculus.hpp"

namespace cartan::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }

  /// Smooth expression over `n` variables, defined everywhere.
  /// Constants are small integers or halves so printing round-trips.
  Expr smooth(std::size_t n, int depth = 3) {
    if (depth <= 0 || coin(0.25)) return leaf(n);
    switch (integer(0, 8)) {
      case 0:
        return smooth(n, depth - 1) + smooth(n, depth - 1);
      case 1:
        return smooth(n, depth - 1) - smooth(n, depth - 1);
      case 2:
      case 3:
        return smooth(n, depth - 1) * smooth(n, depth - 1);
      case 4:
        return sin(smooth(n, depth - 1));
      case 5:
        return cos(smooth(n, depth - 1));
      case 6:
        return pow(smooth(n, depth - 1), static_cast<double>(integer(2, 3)));
      case 7:
        return exp(Expr(0.5) * sin(smooth(n, depth - 1)));
      default:
        return smooth(n, depth - 1) / (Expr(2.0) + cos(smooth(n, depth - 1)));
    }
  }

  /// Polynomial of modest degree in `n` variables.
  Expr polynomial(std::size_t n, int terms = 3) {
    Expr sum(static_cast<double>(integer(-2, 2)));
    for (int k = 0; k < terms; ++k) {
      Expr mono(static_cast<double>(integer(-3, 3)));
      for (std::size_t v = 0; v < n; ++v) {
        const int e = integer(0, 2);
        if (e > 0) mono = mono * pow(Expr::variable(v), e);
      }
      sum = sum + mono;
    }
    return sum;
  }

  /// Polynomial or trigonometric coefficient.
  Expr coefficient(std::size_t n) {
    return coin(0.5) ? polynomial(n) : smooth(n, 2);
  }

  Form form(const Variables& vars, int degree) {
    Form f(vars, degree);
    const std::size_t n = vars.size();
    IndexTuple idx(static_cast<std::size_t>(degree));
    // Visit every increasing tuple; keep about two thirds of them.
    std::vector<int> sel(n, 0);
    std::fill(sel.end() - degree, sel.end(), 1);
    do {
      if (!coin(0.67)) continue;
      idx.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (sel[i]) idx.push_back(static_cast<int>(i));
      }
      f.add_term(idx, coefficient(n));
    } while (std::next_permutation(sel.begin(), sel.end()));
    return f;
  }

  VectorField field(const Variables& vars) {
    std::vector<Expr> c;
    for (std::size_t i = 0; i < vars.size(); ++i) c.push_back(coefficient(vars.size()));
    return VectorField(vars, std::move(c));
  }

  Vec3 poly3(std::size_t n) { return {polynomial(n), polynomial(n), polynomial(n)}; }

  std::vector<double> point(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> p(n);
    for (double& x : p) x = real(lo, hi);
    return p;
  }

 private:
  Expr leaf(std::size_t n) {
    if (coin(0.6)) return Expr::variable(static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)));
    return Expr(static_cast<double>(integer(-6, 6)) / 2.0);
  }

  std::mt19937_64 rng_;
};

inline Variables xyz() { return Variables{"x", "y", "z"}; }
inline Variables xyzt() { return Variables{"x", "y", "z", "t"}; }

}  // namespace cartan::testing
