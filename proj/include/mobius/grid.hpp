#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius {

/// Default half-width of the sampling window [-L, L].
inline constexpr double kDefaultHalfWidth = 20.0;
/// Default number of samples (odd, so 0 is a grid point).
inline constexpr int kDefaultSamples = 4001;
/// Tolerance for "the sampled value has reached its declared limit" checks.
inline constexpr double kTailTolerance = 1e-6;

/// A finite symmetric sampling grid on [-L, L], strictly increasing and
/// containing 0.  All tolerance-based checks in the library sample on one
/// of these.
class Grid {
public:
  /// Uniform grid with `samples` points on [-half_width, half_width].
  /// `samples` must be odd so the grid is symmetric and contains 0.
  static Grid uniform(double half_width = kDefaultHalfWidth,
                      int samples = kDefaultSamples) {
    if (!(half_width > 0.0))
      throw config_error("grid half-width must be positive");
    if (samples < 3 || samples % 2 == 0)
      throw config_error("grid sample count must be odd and >= 3");
    const int m = (samples - 1) / 2;
    const double h = half_width / m;
    std::vector<double> pts(samples);
    for (int i = -m; i <= m; ++i)
      pts[i + m] = i * h; // (-i)*h == -(i*h) exactly, so symmetry is exact
    return Grid(std::move(pts));
  }

  /// Wrap an explicit point set.  Rejects empty, unsorted, or asymmetric sets
  /// and sets not containing 0.
  static Grid from_points(std::vector<double> pts) {
    if (pts.empty())
      throw config_error("grid must not be empty");
    bool has_zero = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == 0.0)
        has_zero = true;
      if (i + 1 < pts.size() && !(pts[i] < pts[i + 1]))
        throw config_error("grid points must be strictly increasing");
      if (pts[i] != -pts[pts.size() - 1 - i])
        throw config_error("grid must be symmetric under x -> -x");
    }
    if (!has_zero)
      throw config_error("grid must contain 0");
    return Grid(std::move(pts));
  }

  /// Same window, (factor) times finer spacing.  Used for oracle comparisons.
  Grid refined(int factor) const {
    const int n = static_cast<int>(points_.size());
    return uniform(half_width(), factor * (n - 1) + 1);
  }

  const std::vector<double>& points() const { return points_; }
  double half_width() const { return points_.back(); }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }

private:
  explicit Grid(std::vector<double> pts) : points_(std::move(pts)) {}
  std::vector<double> points_;
};

} // namespace mobius
