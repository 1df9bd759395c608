#pragma once

#include <string>
#include <utility>

#include "mobius/group_algebra.hpp"
#include "mobius/real_line_function.hpp"

namespace mobius {

/// An element of C_0(R) x| Z_2 or of its minimal unitization: a map
/// F : Z_2 -> C_0(R) stored as the pair (F(e), F(eps)), plus a scalar
/// multiple of the adjoined unit.  Both components always vanish at
/// +-inf; the unit scalar carries the only non-vanishing part.
class CrossedProductElement {
public:
  CrossedProductElement()
      : comp_e_(RealLineFunction::zero()), comp_eps_(RealLineFunction::zero()),
        unit_scalar_(0.0) {}

  CrossedProductElement(RealLineFunction comp_e, RealLineFunction comp_eps,
                        Complex unit_scalar = Complex(0.0))
      : comp_e_(std::move(comp_e)), comp_eps_(std::move(comp_eps)),
        unit_scalar_(unit_scalar) {
    if (!comp_e_.vanishing() || !comp_eps_.vanishing())
      throw precondition_error(
          "crossed product components must vanish at +-inf; "
          "non-vanishing parts belong to the unit scalar");
  }

  /// f * 1_e, supported on the identity.
  static CrossedProductElement on_e(RealLineFunction f) {
    return CrossedProductElement(std::move(f), RealLineFunction::zero());
  }

  /// f * 1_eps, supported on the flip.
  static CrossedProductElement on_eps(RealLineFunction f) {
    return CrossedProductElement(RealLineFunction::zero(), std::move(f));
  }

  /// The adjoined unit of the unitization.
  static CrossedProductElement unit() {
    return CrossedProductElement(RealLineFunction::zero(),
                                 RealLineFunction::zero(), Complex(1.0));
  }

  /// f * (c_e 1_e + c_eps 1_eps), a scalar profile times a group algebra
  /// element.
  static CrossedProductElement scaled_group_element(
      const RealLineFunction& f, const GroupAlgebraElement& p) {
    return CrossedProductElement(p.c_e * f, p.c_eps * f);
  }

  const RealLineFunction& comp_e() const { return comp_e_; }
  const RealLineFunction& comp_eps() const { return comp_eps_; }
  Complex unit_scalar() const { return unit_scalar_; }

  friend CrossedProductElement operator+(const CrossedProductElement& f,
                                         const CrossedProductElement& g) {
    return CrossedProductElement(f.comp_e_ + g.comp_e_,
                                 f.comp_eps_ + g.comp_eps_,
                                 f.unit_scalar_ + g.unit_scalar_);
  }

  friend CrossedProductElement operator-(const CrossedProductElement& f,
                                         const CrossedProductElement& g) {
    return CrossedProductElement(f.comp_e_ - g.comp_e_,
                                 f.comp_eps_ - g.comp_eps_,
                                 f.unit_scalar_ - g.unit_scalar_);
  }

  friend CrossedProductElement operator*(Complex c,
                                         const CrossedProductElement& f) {
    return CrossedProductElement(c * f.comp_e_, c * f.comp_eps_,
                                 c * f.unit_scalar_);
  }

private:
  RealLineFunction comp_e_;
  RealLineFunction comp_eps_;
  Complex unit_scalar_;
};

/// Twisted convolution
///   (F * G)(e)   = F(e) G(e)   + F(eps) flip(G(eps))
///   (F * G)(eps) = F(e) G(eps) + F(eps) flip(G(e))
/// extended to the unitization in the standard way.
inline CrossedProductElement convolve(const CrossedProductElement& f,
                                      const CrossedProductElement& g) {
  const Complex lam = f.unit_scalar(), mu = g.unit_scalar();
  RealLineFunction at_e = f.comp_e() * g.comp_e() +
                          f.comp_eps() * flip(g.comp_eps()) +
                          lam * g.comp_e() + mu * f.comp_e();
  RealLineFunction at_eps = f.comp_e() * g.comp_eps() +
                            f.comp_eps() * flip(g.comp_e()) +
                            lam * g.comp_eps() + mu * f.comp_eps();
  return CrossedProductElement(std::move(at_e), std::move(at_eps), lam * mu);
}

/// F*(e) = conj(F(e)), F*(eps) = conj(flip(F(eps))).  Order two, and
/// (F * G)* = G* * F*.
inline CrossedProductElement involution(const CrossedProductElement& f) {
  return CrossedProductElement(conj(f.comp_e()), conj(flip(f.comp_eps())),
                               std::conj(f.unit_scalar()));
}

/// Evaluation at the fixed point 0, a unital homomorphism onto C Z_2.
inline GroupAlgebraElement ev0(const CrossedProductElement& f) {
  return {f.comp_e()(0.0) + f.unit_scalar(), f.comp_eps()(0.0)};
}

inline double sup_distance(const CrossedProductElement& f,
                           const CrossedProductElement& g, const Grid& grid) {
  double m = std::abs(f.unit_scalar() - g.unit_scalar());
  m = std::max(m, sup_distance(f.comp_e(), g.comp_e(), grid));
  return std::max(m, sup_distance(f.comp_eps(), g.comp_eps(), grid));
}

inline double sup_norm(const CrossedProductElement& f, const Grid& grid) {
  return sup_distance(f, CrossedProductElement(), grid);
}

} // namespace mobius
