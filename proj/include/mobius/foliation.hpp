#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius {

/// A bundle over S^1 with discrete structure group, described by the
/// monodromy diffeomorphism of the fiber R together with its declared
/// order and fixed-point data.  The deck direction is implicit; only the
/// fiber action matters for leaves and holonomy.
struct DiscreteBundle {
  std::function<double(double)> generator;
  int declared_order = 1;
  std::vector<double> declared_fixed_points;
  std::vector<double> declared_stable_fixed_points;
  double probe_halfwidth = 20.0;

  /// The Mobius bundle: monodromy x -> -x, order 2, fixed point 0.
  static DiscreteBundle mobius() {
    return {[](double x) { return -x; }, 2, {0.0}, {}, 20.0};
  }

  /// Product foliation: trivial monodromy.
  static DiscreteBundle trivial() {
    return {[](double x) { return x; }, 1, {}, {}, 20.0};
  }
};

/// n-fold iterate of the monodromy.
inline double iterate_generator(const DiscreteBundle& bundle, int n, double r) {
  double y = r;
  for (int i = 0; i < n; ++i)
    y = bundle.generator(y);
  return y;
}

/// Checks the declared order and fixed points against probes.
inline void validate_bundle(const DiscreteBundle& bundle, int probes = 201) {
  if (bundle.declared_order < 1)
    throw config_error("bundle order must be positive");
  const double l = bundle.probe_halfwidth;
  for (int i = 0; i < probes; ++i) {
    const double r = -l + 2.0 * l * i / (probes - 1);
    if (std::abs(iterate_generator(bundle, bundle.declared_order, r) - r) >= 1e-10)
      throw inconsistency_error(
          "generator^order is not the identity at r = " + std::to_string(r));
  }
  for (double r : bundle.declared_fixed_points)
    if (std::abs(bundle.generator(r) - r) >= 1e-12)
      throw inconsistency_error(
          "declared fixed point is not fixed: r = " + std::to_string(r));
}

/// Index of the isotropy subgroup at r: the smallest n >= 1 with
/// generator^n(r) = r.  The isotropy group itself is n Z.
inline int isotropy_index(const DiscreteBundle& bundle, double r) {
  if (std::abs(r) > bundle.probe_halfwidth)
    throw precondition_error("basepoint outside the probe range");
  for (int n = 1; n <= bundle.declared_order; ++n)
    if (std::abs(iterate_generator(bundle, n, r) - r) < 1e-10)
      return n;
  throw inconsistency_error(
      "no power up to the declared order fixes r = " + std::to_string(r));
}

/// A leaf of the foliation: a circle covering the base wrap_count times.
struct Leaf {
  double basepoint = 0.0;
  int isotropy_index = 1;
  int wrap_count = 1;
};

inline Leaf leaf_through(const DiscreteBundle& bundle, double r) {
  const int n = isotropy_index(bundle, r);
  return Leaf{r, n, n};
}

/// The (cyclic) holonomy group at a point, recorded by its order.
struct HolonomyGroup {
  int order = 1;
};

namespace detail {

/// Smallest n whose iterate fixes a punctured neighbourhood of r, probed at
/// 8 dyadic offsets per side.  Throws if the two sides disagree.
inline int stable_isotropy_index(const DiscreteBundle& bundle, double r) {
  for (int n = 1; n <= bundle.declared_order; ++n) {
    bool left = true, right = true;
    for (int j = 0; j < 8; ++j) {
      const double off = 1e-3 * static_cast<double>(1 << j);
      if (std::abs(iterate_generator(bundle, n, r + off) - (r + off)) >= 1e-10)
        right = false;
      if (std::abs(iterate_generator(bundle, n, r - off) - (r - off)) >= 1e-10)
        left = false;
    }
    if (left != right)
      throw ambiguity_error(
          "one-sided stability at r = " + std::to_string(r) +
          " for power n = " + std::to_string(n));
    if (left && right)
      return n;
  }
  throw inconsistency_error(
      "no power up to the declared order is stable at r = " + std::to_string(r));
}

} // namespace detail

/// Holonomy group at r as the quotient of isotropy by stable isotropy:
/// order = (stable isotropy index) / (isotropy index).
inline HolonomyGroup holonomy_group(const DiscreteBundle& bundle, double r) {
  const int iso = isotropy_index(bundle, r);
  const int stable = detail::stable_isotropy_index(bundle, r);
  if (stable % iso != 0)
    throw inconsistency_error("stable isotropy does not contain isotropy at r = " +
                              std::to_string(r));
  return HolonomyGroup{stable / iso};
}

/// Descriptive record of the reduced groupoid over the complete transversal.
struct TransversalGroupoidDescriptor {
  std::string fiber_label;
  int group_order = 1;
  std::string identification_note;
};

inline TransversalGroupoidDescriptor transversal_groupoid(
    const DiscreteBundle& bundle) {
  return TransversalGroupoidDescriptor{
      "R", bundle.declared_order,
      "(F x G)/~ with (x,g) ~ (x,h) iff g^{-1}h lies in the stable isotropy "
      "group at x"};
}

} // namespace mobius
