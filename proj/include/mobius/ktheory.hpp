#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "mobius/half_line.hpp"

namespace mobius {

/// The pair (chi, theta) used to lift projections out of the fixed-point
/// quotient: theta runs from 0 at -inf to 1 at +inf, and chi is its
/// pullback 1 - theta(ln|x|), so chi(0) = 1, chi(+-inf) = 0, chi is even,
/// and chi seen through either half-line chart is exactly 1 - theta.
struct LiftProfile {
  RealLineFunction chi;
  RealLineFunction theta;

  /// Build the compatible pair from a real monotone theta profile.
  static LiftProfile from_theta(std::function<double(double)> theta_fn) {
    RealLineFunction theta = RealLineFunction::with_limits(
        [theta_fn](double t) { return Complex(theta_fn(t)); }, Complex(0.0),
        Complex(1.0));
    RealLineFunction chi = RealLineFunction::vanishing([theta_fn](double x) {
      if (x == 0.0)
        return Complex(1.0);
      return Complex(1.0 - theta_fn(std::log(std::abs(x))));
    });
    return LiftProfile{std::move(chi), std::move(theta)};
  }

  /// Default profile theta(t) = (1 + tanh(t/2))/2, monotone with phase
  /// gradient well inside the winding guard on the default grid.
  static LiftProfile logistic() {
    return from_theta([](double t) { return 0.5 * (1.0 + std::tanh(0.5 * t)); });
  }
};

/// Checks the defining constraints of a profile on the given grid:
/// chi(0) = 1, declared limits, and chart compatibility chi o (+-exp) = 1 - theta.
inline void validate_profile(const LiftProfile& p, const Grid& grid) {
  if (std::abs(p.chi(0.0) - Complex(1.0)) >= 1e-12)
    throw precondition_error("profile: chi(0) must be 1");
  if (p.chi.limit_neg() != Complex(0.0) || p.chi.limit_pos() != Complex(0.0))
    throw precondition_error("profile: chi must vanish at +-inf");
  if (p.theta.limit_neg() != Complex(0.0) || p.theta.limit_pos() != Complex(1.0))
    throw precondition_error("profile: theta limits must be (0, 1)");
  RealLineFunction one_minus_theta = RealLineFunction::one() - p.theta;
  for (Chart chart : {Chart::positive, Chart::negative}) {
    RealLineFunction pulled = psi_chart(restrict_to_half_line(p.chi, chart));
    // pulled has declared limits 0,0; compare pointwise only
    for (double t : grid.points())
      if (std::abs(pulled(t) - one_minus_theta(t)) >= 1e-12)
        throw precondition_error(
            "profile: chi through the " + std::string(chart_name(chart)) +
            " chart does not reproduce 1 - theta");
  }
}

/// chi * p, the canonical self-adjoint preimage of a projection p in C Z_2
/// under evaluation at the fixed point.
inline CrossedProductElement lift_projection(const GroupAlgebraElement& p,
                                             const LiftProfile& profile) {
  if (!is_idempotent(p))
    throw precondition_error("lift_projection: p is not idempotent");
  if (!is_self_adjoint(p))
    throw precondition_error("lift_projection: p is not self-adjoint");
  return CrossedProductElement::scaled_group_element(profile.chi, p);
}

/// Image of a lifted projection under the index-1 boundary: the unitary
/// exp(2*pi*i*lift) seen in unitized M_2(C_0(R)).
///
/// The lift has the form f*p with p = ev0(lift) a projection commuting with
/// the scalar profile f, so the exponential collapses to
///   exp(2*pi*i*f*p) = 1 + (e^{2*pi*i*f} - 1) p,
/// whose non-unit part lies in the ideal of functions vanishing at 0 and
/// +-inf and can be pushed through Psi.  The generic pointwise 2x2
/// exponential is deliberately not used here; it serves as the independent
/// check in the test suite.
inline FunctionMatrix exponential_boundary(const CrossedProductElement& lift,
                                           const Grid& grid) {
  if (std::abs(lift.unit_scalar()) >= 1e-12)
    throw precondition_error("exponential_boundary: lift must lie in the "
                             "non-unitized algebra");
  if (sup_distance(lift, involution(lift), grid) >= 1e-10)
    throw precondition_error("exponential_boundary: lift is not self-adjoint");
  const GroupAlgebraElement p = ev0(lift);
  if (!is_idempotent(p, 1e-10))
    throw precondition_error(
        "exponential_boundary: ev0(lift) is not idempotent");
  if (p.norm1() < 1e-12)
    return FunctionMatrix::identity();

  // The nonzero idempotents of C Z_2 all have c_e in {1/2, 1}, so the scalar
  // profile can be recovered from the e-component.
  if (std::abs(p.c_e) < 1e-12)
    throw boundary_map_error("exponential_boundary: degenerate projection");
  RealLineFunction profile = (Complex(1.0) / p.c_e) * lift.comp_e();

  // The collapse is only valid when lift = profile * p.  Together with
  // self-adjointness this forces the profile to be real and, when p has an
  // eps part, even, which is exactly commuting with p.
  CrossedProductElement reconstructed =
      CrossedProductElement::scaled_group_element(profile, p);
  if (sup_distance(lift, reconstructed, grid) >= 1e-8)
    throw boundary_map_error(
        "exponential_boundary: lift is not a scalar profile times its "
        "fixed-point projection; the exponential would leave unit + ideal");

  // u - 1 = (e^{2 pi i profile} - 1) p must vanish at 0 and +-inf.  The
  // profile decays like 1/|x|, so its far tail sits at x = +-e^L, not at
  // the window edge: probe the declared limits and the chart-scale points.
  RealLineFunction h =
      unit_exponential(profile) - RealLineFunction::one();
  if (std::abs(h(0.0)) >= kIdealVanishTolerance)
    throw boundary_map_error(
        "exponential_boundary: exp(2 pi i profile) - 1 does not vanish at the "
        "fixed point; u - 1 is not in the ideal");
  const double far = std::exp(grid.half_width());
  const double near0 = std::exp(-grid.half_width());
  for (double x : {-far, -near0, near0, far})
    if (std::abs(h(x)) >= kTailTolerance)
      throw boundary_map_error(
          "exponential_boundary: exp(2 pi i profile) - 1 has not decayed at "
          "x = " + std::to_string(x) + "; u - 1 is not in the ideal");
  if (std::abs(h.limit_neg()) >= kIdealVanishTolerance ||
      std::abs(h.limit_pos()) >= kIdealVanishTolerance)
    throw boundary_map_error(
        "exponential_boundary: exp(2 pi i profile) - 1 does not vanish at "
        "+-inf; u - 1 is not in the ideal");

  CrossedProductElement u =
      CrossedProductElement::scaled_group_element(h, p) +
      CrossedProductElement::unit();
  FunctionMatrix w = psi_iso(u);
  const double defect = unitarity_defect(w, grid);
  if (defect >= 1e-9)
    throw tolerance_error(
        "exponential_boundary: image misses unitarity by " +
        std::to_string(defect));
  return w;
}

/// Total phase change of a nonvanishing loop on the compactified line,
/// divided by 2*pi.  The loop runs from the declared limit at -inf through
/// the grid samples to the declared limit at +inf; both limits must be 1.
/// Any single principal-branch step of pi/2 or more aborts: the grid cannot
/// certify the count.
inline int winding_number(const RealLineFunction& u, const Grid& grid) {
  if (std::abs(u.limit_neg() - Complex(1.0)) > 1e-6 ||
      std::abs(u.limit_pos() - Complex(1.0)) > 1e-6)
    throw precondition_error(
        "winding_number: loop limits must both equal 1 on the compactified "
        "line");
  std::vector<Complex> vals;
  vals.reserve(grid.size() + 2);
  vals.push_back(u.limit_neg());
  for (double x : grid.points())
    vals.push_back(u(x));
  vals.push_back(u.limit_pos());
  for (const Complex& v : vals)
    if (std::abs(v) <= 0.1)
      throw precondition_error(
          "winding_number: loop passes too close to 0; no winding defined");

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
    const double step = std::arg(vals[k + 1] / vals[k]);
    if (std::abs(step) >= kPi / 2.0)
      throw resolution_error(
          "winding_number: phase step of " + std::to_string(step) +
          " rad between consecutive samples; refine the grid (increase "
          "samples)");
    total += step;
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 1e-6)
    throw normalization_error(
        "winding_number: accumulated phase " + std::to_string(turns) +
        " turns is not an integer");
  return static_cast<int>(rounded);
}

/// A K_1 class over the compactified line, as an integer multiple of the
/// reference generator g_ref = [e^{-2 pi i theta}] (the class every boundary
/// image is measured against; g_ref itself has raw phase winding -1).
struct KOneClass {
  int winding = 0;
  friend bool operator==(const KOneClass& a, const KOneClass& b) {
    return a.winding == b.winding;
  }
};

/// Class of a unitary loop of 2x2 matrices: winding of the pointwise
/// determinant, in g_ref units.  The two limit matrices must agree (the
/// compactified line has a single point at infinity); their common
/// determinant normalizes the loop.
inline KOneClass det_winding(const FunctionMatrix& u, const Grid& grid) {
  const double defect = unitarity_defect(u, grid);
  if (defect >= 1e-8)
    throw precondition_error("det_winding: matrix is not pointwise unitary; "
                             "defect " + std::to_string(defect));
  const Mat2 vn = u.limit_neg(), vp = u.limit_pos();
  if ((vn - vp).max_abs() > 1e-6)
    throw precondition_error(
        "det_winding: limit matrices at -inf and +inf differ; the loop does "
        "not close at infinity");
  const Complex c = vn.det();
  if (std::abs(std::abs(c) - 1.0) > 1e-6)
    throw precondition_error("det_winding: limit matrix is not unitary");

  RealLineFunction det_loop = RealLineFunction::with_limits(
      [u, c](double x) { return u(x).det() / c; }, vn.det() / c, vp.det() / c);
  const int raw = winding_number(det_loop, grid);
  return KOneClass{-raw};
}

/// The rotation by t*pi/4 connecting the identity to (1/sqrt 2)[[1,-1],[1,1]];
/// conjugation by it carries the symmetric minimal projections to the
/// diagonal matrix units.
inline Mat2 rotation_homotopy(double t) {
  if (t < 0.0 || t > 1.0)
    throw precondition_error("rotation_homotopy: t must lie in [0, 1]");
  return Mat2::rotation(t * kPi / 4.0);
}

/// A discretized path of function matrices on [0, 1].
struct HomotopyPath {
  std::function<FunctionMatrix(double)> sample;
  int steps = 64;
};

/// Path t -> R(t * angle) W R(t * angle)^T.
inline HomotopyPath rotation_conjugation_path(const FunctionMatrix& w,
                                              double angle, int steps) {
  return HomotopyPath{
      [w, angle](double t) {
        FunctionMatrix r = FunctionMatrix::from_constant(Mat2::rotation(t * angle));
        FunctionMatrix rt =
            FunctionMatrix::from_constant(Mat2::rotation(t * angle).adjoint());
        return matrix_product(r, matrix_product(w, rt));
      },
      steps};
}

enum class HomotopyKind { unitary, projection };

struct HomotopyReport {
  bool pass = true;
  double first_violation_t = -1.0;
  std::string note;
};

/// Walks the path at steps+1 samples.  Discontinuities (consecutive
/// sup-distance >= 0.2) abort with a path error; pointwise failures of the
/// unitary/projection conditions are reported with the first violating t.
/// For unitary paths the determinant winding must be constant and every
/// sample must be the identity at infinity.
inline HomotopyReport verify_homotopy(const HomotopyPath& path,
                                      HomotopyKind kind, const Grid& grid) {
  if (path.steps < 1)
    throw precondition_error("verify_homotopy: need at least one step");
  HomotopyReport report;
  FunctionMatrix prev;
  bool have_prev = false;
  int winding0 = 0;
  bool have_winding = false;

  for (int k = 0; k <= path.steps; ++k) {
    const double t = static_cast<double>(k) / path.steps;
    FunctionMatrix sample = path.sample(t);
    if (have_prev && sup_distance(prev, sample, grid) >= 0.2)
      throw path_error("verify_homotopy: jump of sup-norm >= 0.2 at t = " +
                       std::to_string(t));
    prev = sample;
    have_prev = true;

    auto fail = [&](const std::string& why) {
      if (report.pass) {
        report.pass = false;
        report.first_violation_t = t;
        report.note = why;
      }
    };

    if (kind == HomotopyKind::unitary) {
      if (unitarity_defect(sample, grid) >= 1e-8) {
        fail("sample is not unitary");
        continue;
      }
      if ((sample.limit_neg() - Mat2::identity()).max_abs() > 1e-6 ||
          (sample.limit_pos() - Mat2::identity()).max_abs() > 1e-6) {
        fail("sample is not the identity at infinity");
        continue;
      }
      const int w = det_winding(sample, grid).winding;
      if (!have_winding) {
        winding0 = w;
        have_winding = true;
      } else if (w != winding0) {
        fail("determinant winding changed along the path");
      }
    } else {
      double idem = 0.0, sa = 0.0;
      auto probe = [&](const Mat2& m) {
        idem = std::max(idem, (m * m - m).max_abs());
        sa = std::max(sa, (m - m.adjoint()).max_abs());
      };
      probe(sample.limit_neg());
      probe(sample.limit_pos());
      for (double x : grid.points())
        probe(sample(x));
      if (idem >= 1e-8)
        fail("sample is not idempotent");
      else if (sa >= 1e-8)
        fail("sample is not self-adjoint");
    }
  }
  return report;
}

} // namespace mobius
