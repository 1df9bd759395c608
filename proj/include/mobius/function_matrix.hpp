#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "mobius/real_line_function.hpp"

namespace mobius {

/// Constant complex 2x2 matrix.  All the matrix algebra in this project is
/// 2x2, so a small fixed type beats a general one.
struct Mat2 {
  std::array<std::array<Complex, 2>, 2> a{};

  Complex& operator()(int i, int j) { return a[i][j]; }
  const Complex& operator()(int i, int j) const { return a[i][j]; }

  static Mat2 identity() {
    Mat2 m;
    m(0, 0) = m(1, 1) = Complex(1.0);
    return m;
  }
  static Mat2 zero() { return Mat2{}; }
  static Mat2 diag(Complex x, Complex y) {
    Mat2 m;
    m(0, 0) = x;
    m(1, 1) = y;
    return m;
  }
  static Mat2 of(Complex a00, Complex a01, Complex a10, Complex a11) {
    Mat2 m;
    m(0, 0) = a00;
    m(0, 1) = a01;
    m(1, 0) = a10;
    m(1, 1) = a11;
    return m;
  }
  /// Plane rotation by `angle`.
  static Mat2 rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return of(c, -s, s, c);
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = x(i, j) + y(i, j);
    return r;
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = x(i, j) - y(i, j);
    return r;
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }
  friend Mat2 operator*(Complex c, const Mat2& x) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = c * x(i, j);
    return r;
  }

  Mat2 adjoint() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = std::conj(a[j][i]);
    return r;
  }

  Complex trace() const { return a[0][0] + a[1][1]; }
  Complex det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m = std::max(m, std::abs(a[i][j]));
    return m;
  }
};

/// exp(2*pi*i*H) for a Hermitian 2x2 H, via the spectral closed form.
/// H = m*I + D with D traceless, D^2 = rho^2*I, so
/// exp(2*pi*i*H) = e^{2*pi*i*m} (cos(2*pi*rho) I + i sin(2*pi*rho)/rho D).
inline Mat2 unitary_exponential_2x2(const Mat2& h) {
  const double m = 0.5 * (h(0, 0) + h(1, 1)).real();
  const double delta = 0.5 * (h(0, 0) - h(1, 1)).real();
  const double rho = std::sqrt(delta * delta + std::norm(h(0, 1)));
  double sinc; // sin(2*pi*rho)/rho, continuous at rho = 0
  if (rho > 1e-8) {
    sinc = std::sin(kTwoPi * rho) / rho;
  } else {
    const double u = kTwoPi * rho;
    sinc = kTwoPi * (1.0 - u * u / 6.0 + u * u * u * u / 120.0);
  }
  Mat2 d = h - Mat2::diag(m, m);
  Mat2 r = std::cos(kTwoPi * rho) * Mat2::identity() + Complex(0.0, 1.0) * (sinc * d);
  return std::exp(Complex(0.0, kTwoPi * m)) * r;
}

/// A 2x2 matrix of RealLineFunctions; the concrete picture of (unitized)
/// M_2(C_0(R)).  `unitized` records whether entries are allowed nonzero
/// limits at +-inf; when false every entry vanishes there.
class FunctionMatrix {
public:
  FunctionMatrix() : unitized_(false) {
    for (auto& row : e_)
      for (auto& f : row)
        f = RealLineFunction::zero();
  }

  static FunctionMatrix from_entries(RealLineFunction a00, RealLineFunction a01,
                                     RealLineFunction a10, RealLineFunction a11) {
    FunctionMatrix m;
    m.e_ = {{{std::move(a00), std::move(a01)}, {std::move(a10), std::move(a11)}}};
    m.unitized_ = !(m.e_[0][0].vanishing() && m.e_[0][1].vanishing() &&
                    m.e_[1][0].vanishing() && m.e_[1][1].vanishing());
    return m;
  }

  static FunctionMatrix from_constant(const Mat2& c) {
    return from_entries(
        RealLineFunction::constant(c(0, 0)), RealLineFunction::constant(c(0, 1)),
        RealLineFunction::constant(c(1, 0)), RealLineFunction::constant(c(1, 1)));
  }

  static FunctionMatrix identity() { return from_constant(Mat2::identity()); }

  /// f(x) * P, entrywise.
  static FunctionMatrix scale(const RealLineFunction& f, const Mat2& p) {
    return from_entries(f * p(0, 0), f * p(0, 1), f * p(1, 0), f * p(1, 1));
  }

  const RealLineFunction& entry(int i, int j) const { return e_[i][j]; }
  bool unitized() const { return unitized_; }

  Mat2 operator()(double x) const {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = e_[i][j](x);
    return m;
  }

  Mat2 limit_neg() const {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = e_[i][j].limit_neg();
    return m;
  }

  Mat2 limit_pos() const {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = e_[i][j].limit_pos();
    return m;
  }

  friend FunctionMatrix operator+(const FunctionMatrix& x, const FunctionMatrix& y) {
    return from_entries(x.e_[0][0] + y.e_[0][0], x.e_[0][1] + y.e_[0][1],
                        x.e_[1][0] + y.e_[1][0], x.e_[1][1] + y.e_[1][1]);
  }

  friend FunctionMatrix operator-(const FunctionMatrix& x, const FunctionMatrix& y) {
    return from_entries(x.e_[0][0] - y.e_[0][0], x.e_[0][1] - y.e_[0][1],
                        x.e_[1][0] - y.e_[1][0], x.e_[1][1] - y.e_[1][1]);
  }

private:
  std::array<std::array<RealLineFunction, 2>, 2> e_;
  bool unitized_;
};

/// Pointwise 2x2 product (AB)(x) = A(x) B(x), limits included.
inline FunctionMatrix matrix_product(const FunctionMatrix& a,
                                     const FunctionMatrix& b) {
  auto ent = [&](int i, int j) {
    return a.entry(i, 0) * b.entry(0, j) + a.entry(i, 1) * b.entry(1, j);
  };
  return FunctionMatrix::from_entries(ent(0, 0), ent(0, 1), ent(1, 0), ent(1, 1));
}

inline FunctionMatrix matrix_adjoint(const FunctionMatrix& a) {
  return FunctionMatrix::from_entries(conj(a.entry(0, 0)), conj(a.entry(1, 0)),
                                      conj(a.entry(0, 1)), conj(a.entry(1, 1)));
}

/// Max entrywise |a_ij| over the grid and the two limit matrices.
inline double sup_norm(const FunctionMatrix& a, const Grid& grid) {
  double m = std::max(a.limit_neg().max_abs(), a.limit_pos().max_abs());
  for (double x : grid.points())
    m = std::max(m, a(x).max_abs());
  return m;
}

inline double sup_distance(const FunctionMatrix& a, const FunctionMatrix& b,
                           const Grid& grid) {
  return sup_norm(a - b, grid);
}

inline bool pointwise_self_adjoint(const FunctionMatrix& h, const Grid& grid,
                                   double tol = 1e-10) {
  auto defect = [](const Mat2& m) { return (m - m.adjoint()).max_abs(); };
  if (defect(h.limit_neg()) >= tol || defect(h.limit_pos()) >= tol)
    return false;
  for (double x : grid.points())
    if (defect(h(x)) >= tol)
      return false;
  return true;
}

/// x -> exp(2*pi*i*H(x)) by direct spectral exponentiation at every sample.
/// Requires H pointwise self-adjoint on the grid.  This is the generic
/// route used as an independent check against the commuting-projection
/// identity, never through it.
inline FunctionMatrix pointwise_unitary_exponential(const FunctionMatrix& h,
                                                    const Grid& grid) {
  if (!pointwise_self_adjoint(h, grid))
    throw precondition_error(
        "pointwise_unitary_exponential: input is not self-adjoint on the grid");
  auto ent = [h](int i, int j) {
    return RealLineFunction::with_limits(
        [h, i, j](double x) { return unitary_exponential_2x2(h(x))(i, j); },
        unitary_exponential_2x2(h.limit_neg())(i, j),
        unitary_exponential_2x2(h.limit_pos())(i, j));
  };
  return FunctionMatrix::from_entries(ent(0, 0), ent(0, 1), ent(1, 0), ent(1, 1));
}

/// Largest deviation of U from unitarity, max(||U*U - I||) over the grid
/// and the limit matrices.  Works on one sampled matrix at a time rather
/// than through product closures.
inline double unitarity_defect(const FunctionMatrix& u, const Grid& grid) {
  auto defect = [](const Mat2& m) {
    return (m.adjoint() * m - Mat2::identity()).max_abs();
  };
  double worst = std::max(defect(u.limit_neg()), defect(u.limit_pos()));
  for (double x : grid.points())
    worst = std::max(worst, defect(u(x)));
  return worst;
}

} // namespace mobius
