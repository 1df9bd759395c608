#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "mobius/grid.hpp"

namespace mobius {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A continuous complex-valued function on the real line, represented as an
/// evaluator plus its declared limits at -inf and +inf.  Values are immutable
/// after construction and evaluation is pure, so instances may be shared
/// freely between threads.
///
/// Membership in C_0(R) (vanishing at both ends) is exactly "both declared
/// limits are zero"; the `vanishing()` accessor reflects that.
class RealLineFunction {
public:
  using Evaluator = std::function<Complex(double)>;

  RealLineFunction() : RealLineFunction(zero()) {}

  /// A function declared to vanish at both ends of the line.
  static RealLineFunction vanishing(Evaluator f) {
    return RealLineFunction(std::move(f), Complex(0.0), Complex(0.0));
  }

  /// A function with arbitrary declared limits.
  static RealLineFunction with_limits(Evaluator f, Complex at_neg_inf,
                                      Complex at_pos_inf) {
    return RealLineFunction(std::move(f), at_neg_inf, at_pos_inf);
  }

  static RealLineFunction constant(Complex c) {
    return RealLineFunction([c](double) { return c; }, c, c);
  }

  static RealLineFunction zero() { return constant(Complex(0.0)); }
  static RealLineFunction one() { return constant(Complex(1.0)); }

  Complex operator()(double x) const { return eval_(x); }
  Complex limit_neg() const { return limit_neg_; }
  Complex limit_pos() const { return limit_pos_; }
  bool vanishing() const {
    return limit_neg_ == Complex(0.0) && limit_pos_ == Complex(0.0);
  }

  friend RealLineFunction operator+(const RealLineFunction& f,
                                    const RealLineFunction& g) {
    return RealLineFunction(
        [f, g](double x) { return f(x) + g(x); },
        f.limit_neg_ + g.limit_neg_, f.limit_pos_ + g.limit_pos_);
  }

  friend RealLineFunction operator-(const RealLineFunction& f,
                                    const RealLineFunction& g) {
    return RealLineFunction(
        [f, g](double x) { return f(x) - g(x); },
        f.limit_neg_ - g.limit_neg_, f.limit_pos_ - g.limit_pos_);
  }

  friend RealLineFunction operator*(const RealLineFunction& f,
                                    const RealLineFunction& g) {
    return RealLineFunction(
        [f, g](double x) { return f(x) * g(x); },
        f.limit_neg_ * g.limit_neg_, f.limit_pos_ * g.limit_pos_);
  }

  friend RealLineFunction operator*(Complex c, const RealLineFunction& f) {
    return RealLineFunction([c, f](double x) { return c * f(x); },
                            c * f.limit_neg_, c * f.limit_pos_);
  }

  friend RealLineFunction operator*(const RealLineFunction& f, Complex c) {
    return c * f;
  }

  friend RealLineFunction operator-(const RealLineFunction& f) {
    return Complex(-1.0) * f;
  }

private:
  RealLineFunction(Evaluator f, Complex lneg, Complex lpos)
      : eval_(std::move(f)), limit_neg_(lneg), limit_pos_(lpos) {}

  Evaluator eval_;
  Complex limit_neg_;
  Complex limit_pos_;
};

/// Pullback under x -> -x; the order-two automorphism generating the Z_2
/// action.  Limits swap, vanishing is preserved.
inline RealLineFunction flip(const RealLineFunction& f) {
  return RealLineFunction::with_limits([f](double x) { return f(-x); },
                                       f.limit_pos(), f.limit_neg());
}

/// Pointwise complex conjugate.
inline RealLineFunction conj(const RealLineFunction& f) {
  return RealLineFunction::with_limits(
      [f](double x) { return std::conj(f(x)); }, std::conj(f.limit_neg()),
      std::conj(f.limit_pos()));
}

/// x -> exp(2*pi*i * f(x)).
inline RealLineFunction unit_exponential(const RealLineFunction& f) {
  auto e = [](Complex z) { return std::exp(Complex(0.0, kTwoPi) * z); };
  return RealLineFunction::with_limits(
      [f, e](double x) { return e(f(x)); }, e(f.limit_neg()),
      e(f.limit_pos()));
}

/// Max of |f| over the grid samples and the two declared limits.
inline double sup_norm(const RealLineFunction& f, const Grid& grid) {
  double m = std::max(std::abs(f.limit_neg()), std::abs(f.limit_pos()));
  for (double x : grid.points())
    m = std::max(m, std::abs(f(x)));
  return m;
}

inline double sup_distance(const RealLineFunction& f,
                           const RealLineFunction& g, const Grid& grid) {
  return sup_norm(f - g, grid);
}

/// Whether the sampled values at +-L have reached the declared limits.
inline bool tails_consistent(const RealLineFunction& f, const Grid& grid,
                             double tol = kTailTolerance) {
  const double l = grid.half_width();
  return std::abs(f(-l) - f.limit_neg()) < tol &&
         std::abs(f(l) - f.limit_pos()) < tol;
}

} // namespace mobius
