#pragma once

#include <complex>
#include <utility>

#include "mobius/function_matrix.hpp"

namespace mobius {

/// An element c_e * 1_e + c_eps * 1_eps of the group algebra C Z_2, the
/// image of the crossed product under evaluation at the fixed point.
struct GroupAlgebraElement {
  Complex c_e{0.0};
  Complex c_eps{0.0};

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b) {
    return {a.c_e + b.c_e, a.c_eps + b.c_eps};
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b) {
    return {a.c_e - b.c_e, a.c_eps - b.c_eps};
  }
  friend GroupAlgebraElement operator*(Complex c, const GroupAlgebraElement& a) {
    return {c * a.c_e, c * a.c_eps};
  }
  friend bool operator==(const GroupAlgebraElement& a,
                         const GroupAlgebraElement& b) {
    return a.c_e == b.c_e && a.c_eps == b.c_eps;
  }

  double norm1() const { return std::abs(c_e) + std::abs(c_eps); }
};

inline GroupAlgebraElement group_unit() { return {Complex(1.0), Complex(0.0)}; }

/// Z_2 group algebra product: eps * eps = e.
inline GroupAlgebraElement group_algebra_product(const GroupAlgebraElement& a,
                                                 const GroupAlgebraElement& b) {
  return {a.c_e * b.c_e + a.c_eps * b.c_eps,
          a.c_e * b.c_eps + a.c_eps * b.c_e};
}

inline GroupAlgebraElement group_algebra_adjoint(const GroupAlgebraElement& a) {
  return {std::conj(a.c_e), std::conj(a.c_eps)};
}

/// The isomorphism C Z_2 -> C (+) C, a -> (a_e + a_eps, a_e - a_eps).
/// Multiplicative for the coordinatewise product on the right.
inline std::pair<Complex, Complex> character_iso(const GroupAlgebraElement& a) {
  return {a.c_e + a.c_eps, a.c_e - a.c_eps};
}

/// The regular representation on C^2: e -> identity, eps -> the swap matrix.
inline Mat2 regular_representation(const GroupAlgebraElement& a) {
  return Mat2::of(a.c_e, a.c_eps, a.c_eps, a.c_e);
}

/// The pair of minimal projections (1/2)(1_e + 1_eps) and (1/2)(1_e - 1_eps).
inline std::pair<GroupAlgebraElement, GroupAlgebraElement> minimal_projections() {
  GroupAlgebraElement plus{Complex(0.5), Complex(0.5)};
  GroupAlgebraElement minus{Complex(0.5), Complex(-0.5)};
  return {plus, minus};
}

inline bool is_idempotent(const GroupAlgebraElement& a, double tol = 1e-10) {
  return (group_algebra_product(a, a) - a).norm1() < tol;
}

inline bool is_self_adjoint(const GroupAlgebraElement& a, double tol = 1e-10) {
  return (group_algebra_adjoint(a) - a).norm1() < tol;
}

} // namespace mobius
