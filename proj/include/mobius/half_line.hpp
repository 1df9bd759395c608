#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "mobius/crossed_product.hpp"

namespace mobius {

/// Which open half-line a function lives on: x > 0 or x < 0.
enum class Chart { positive, negative };

inline const char* chart_name(Chart c) {
  return c == Chart::positive ? "positive" : "negative";
}

/// Tolerance for "vanishes at the puncture" membership checks of the ideal.
inline constexpr double kIdealVanishTolerance = 1e-8;

/// An element of C_0(R^+) or C_0(R^-), stored in the logarithmic coordinate
/// t with x = +e^t (positive chart) or x = -e^t (negative chart).  In this
/// coordinate the chart maps psi^{+-} are exact relabelings, so no
/// interpolation ever happens.
class HalfLineFunction {
public:
  using Evaluator = std::function<Complex(double)>;

  HalfLineFunction(Chart chart, Evaluator eval_t)
      : chart_(chart), eval_t_(std::move(eval_t)) {}

  /// Wrap a function given in the half-line coordinate x itself.
  static HalfLineFunction from_x_function(Chart chart,
                                          std::function<Complex(double)> f) {
    const double sign = chart == Chart::positive ? 1.0 : -1.0;
    return HalfLineFunction(
        chart, [f, sign](double t) { return f(sign * std::exp(t)); });
  }

  Chart chart() const { return chart_; }
  /// Value at the point x = +-e^t.
  Complex at_log_coordinate(double t) const { return eval_t_(t); }

private:
  Chart chart_;
  Evaluator eval_t_;
};

/// psi^+ (f) = f o exp  and  psi^- (f) = f o (-exp): in the stored
/// coordinate both are the identity relabeling, returning the t-evaluator
/// as a whole-line C_0 function.
inline RealLineFunction psi_chart(const HalfLineFunction& f) {
  return RealLineFunction::vanishing(
      [f](double t) { return f.at_log_coordinate(t); });
}

/// Inverse of psi_chart onto the requested half line.
inline HalfLineFunction psi_chart_inverse(const RealLineFunction& g, Chart chart) {
  return HalfLineFunction(chart, [g](double t) { return g(t); });
}

/// Restriction of a whole-line function to the open half-line:
/// in log coordinates t -> f(+-e^t).  Meaningful as an element of
/// C_0(R^{+-}) when f vanishes at 0 and at the far end.
inline HalfLineFunction restrict_to_half_line(const RealLineFunction& f,
                                              Chart chart) {
  const double sign = chart == Chart::positive ? 1.0 : -1.0;
  return HalfLineFunction(chart,
                          [f, sign](double t) { return f(sign * std::exp(t)); });
}

/// The isomorphism Psi of (C_0(R^-) (+) C_0(R^+)) x| Z_2 onto M_2(C_0(R)),
///
///   Psi(F) = [ psi^-(F(e)|R^-)    psi^-(F(eps)|R^-) ]
///            [ psi^+(F(eps)|R^+)  psi^+(F(e)|R^+)   ]
///
/// extended to the unitization by unit -> identity matrix.  Requires both
/// components to vanish at the puncture x = 0.
inline FunctionMatrix psi_iso(const CrossedProductElement& f) {
  if (std::abs(f.comp_e()(0.0)) >= kIdealVanishTolerance)
    throw precondition_error(
        "psi_iso: component at e does not vanish at 0; F(e)(0) = " +
        std::to_string(std::abs(f.comp_e()(0.0))));
  if (std::abs(f.comp_eps()(0.0)) >= kIdealVanishTolerance)
    throw precondition_error(
        "psi_iso: component at eps does not vanish at 0; F(eps)(0) = " +
        std::to_string(std::abs(f.comp_eps()(0.0))));

  RealLineFunction unit_part = RealLineFunction::constant(f.unit_scalar());
  return FunctionMatrix::from_entries(
      psi_chart(restrict_to_half_line(f.comp_e(), Chart::negative)) + unit_part,
      psi_chart(restrict_to_half_line(f.comp_eps(), Chart::negative)),
      psi_chart(restrict_to_half_line(f.comp_eps(), Chart::positive)),
      psi_chart(restrict_to_half_line(f.comp_e(), Chart::positive)) + unit_part);
}

} // namespace mobius
