#pragma once

#include <cmath>
#include <functional>
#include <variant>
#include <vector>

#include "mobius/crossed_product.hpp"

namespace mobius {

/// A measure on the transversal R given by a density, integrated over
/// [-support_halfwidth, support_halfwidth].  Invariance under the flip
/// (evenness of the density) is what makes the induced functional a trace.
struct TransverseMeasure {
  std::function<double(double)> density;
  double support_halfwidth = 20.0;

  static TransverseMeasure lebesgue(double halfwidth = 20.0) {
    return {[](double) { return 1.0; }, halfwidth};
  }
  static TransverseMeasure from_density(std::function<double(double)> d,
                                        double halfwidth = 20.0) {
    return {std::move(d), halfwidth};
  }
};

/// Whether the measure is invariant under x -> -x on the grid samples.
inline bool is_invariant(const TransverseMeasure& mu, const Grid& grid) {
  for (double x : grid.points())
    if (std::abs(mu.density(x) - mu.density(-x)) >= 1e-10)
      return false;
  return true;
}

/// A finite-dimensional representation of Z_2: e -> identity, eps -> an
/// involution.
struct GroupRepresentation {
  int dim = 1;
  std::vector<Complex> image_e;   // dim x dim, row-major
  std::vector<Complex> image_eps; // dim x dim, row-major

  GroupRepresentation(int d, std::vector<Complex> e, std::vector<Complex> eps)
      : dim(d), image_e(std::move(e)), image_eps(std::move(eps)) {
    const std::size_t n = static_cast<std::size_t>(dim);
    if (dim < 1 || image_e.size() != n * n || image_eps.size() != n * n)
      throw config_error("representation matrices must be dim x dim");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (std::abs(image_e[i * n + j] - (i == j ? Complex(1.0) : Complex(0.0))) >=
            1e-12)
          throw config_error("representation must send e to the identity");
    // eps^2 = identity
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex s(0.0);
        for (std::size_t k = 0; k < n; ++k)
          s += image_eps[i * n + k] * image_eps[k * n + j];
        if (std::abs(s - (i == j ? Complex(1.0) : Complex(0.0))) >= 1e-12)
          throw config_error("representation must send eps to an involution");
      }
  }

  /// The one-dimensional sign representation e -> 1, eps -> -1.
  static GroupRepresentation sign() {
    return GroupRepresentation(1, {Complex(1.0)}, {Complex(-1.0)});
  }

  Complex trace_e() const {
    Complex s(0.0);
    for (int i = 0; i < dim; ++i)
      s += image_e[static_cast<std::size_t>(i) * dim + i];
    return s;
  }
  Complex trace_eps() const {
    Complex s(0.0);
    for (int i = 0; i < dim; ++i)
      s += image_eps[static_cast<std::size_t>(i) * dim + i];
    return s;
  }
};

/// Trace of rho(a) for a group algebra element a.
inline Complex representation_trace(const GroupRepresentation& rho,
                                    const GroupAlgebraElement& a) {
  return a.c_e * rho.trace_e() + a.c_eps * rho.trace_eps();
}

/// A trace on the crossed product: either integration of the e-component
/// against a transverse measure, or Tr o rho o ev_0 for a Z_2
/// representation rho.
class TraceFunctional {
public:
  static TraceFunctional measure(TransverseMeasure mu) {
    return TraceFunctional(std::move(mu));
  }
  static TraceFunctional representation(GroupRepresentation rho) {
    return TraceFunctional(std::move(rho));
  }

  bool is_measure() const {
    return std::holds_alternative<TransverseMeasure>(kind_);
  }
  const TransverseMeasure& as_measure() const {
    return std::get<TransverseMeasure>(kind_);
  }
  const GroupRepresentation& as_representation() const {
    return std::get<GroupRepresentation>(kind_);
  }

private:
  explicit TraceFunctional(TransverseMeasure mu) : kind_(std::move(mu)) {}
  explicit TraceFunctional(GroupRepresentation rho) : kind_(std::move(rho)) {}
  std::variant<TransverseMeasure, GroupRepresentation> kind_;
};

/// tau_mu(F) = integral of F(e) d mu (trapezoid over the grid up to the
/// cutoff), or tau_rho(F) = Tr(rho(ev_0 F)).
inline Complex apply_trace(const TraceFunctional& tau,
                           const CrossedProductElement& f, const Grid& grid) {
  if (!tau.is_measure())
    return representation_trace(tau.as_representation(), ev0(f));

  const TransverseMeasure& mu = tau.as_measure();
  if (std::abs(f.unit_scalar()) >= 1e-12)
    throw integrability_error(
        "measure trace: the adjoined unit is not integrable");
  const double cutoff = std::min(mu.support_halfwidth, grid.half_width());
  std::vector<double> xs;
  for (double x : grid.points())
    if (std::abs(x) <= cutoff)
      xs.push_back(x);
  if (xs.size() < 2)
    throw config_error("measure trace: no quadrature nodes below the cutoff");

  auto integrand = [&](double x) { return f.comp_e()(x) * mu.density(x); };
  if (std::abs(integrand(xs.front())) > kTailTolerance ||
      std::abs(integrand(xs.back())) > kTailTolerance)
    throw integrability_error(
        "measure trace: integrand has not decayed at the cutoff; refusing to "
        "report a divergent quadrature");
  Complex total(0.0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    total += 0.5 * (xs[i + 1] - xs[i]) * (integrand(xs[i]) + integrand(xs[i + 1]));
  return total;
}

/// The pairing of a trace with a difference of lifted projections,
/// tau(a) - tau(b).  For representation traces this is exactly the pairing
/// of the class [ev0 a] - [ev0 b], since the functional factors through
/// ev_0.  For measure traces the difference a - b is integrated as one
/// element: canonical lifts decay only like their profile, so the two
/// integrals may diverge separately while their difference is finite; the
/// result is the lift-level number.
inline Complex pair_difference(const TraceFunctional& tau,
                               const CrossedProductElement& a,
                               const CrossedProductElement& b,
                               const Grid& grid) {
  if (!is_idempotent(ev0(a), 1e-10) || !is_idempotent(ev0(b), 1e-10))
    throw precondition_error(
        "pair_difference: arguments must be lifts of projections (ev0 "
        "idempotent)");
  if (tau.is_measure())
    return apply_trace(tau, a - b, grid);
  return apply_trace(tau, a, grid) - apply_trace(tau, b, grid);
}

} // namespace mobius
