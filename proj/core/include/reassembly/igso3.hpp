#pragma once

#include <vector>

#include "reassembly/geometry.hpp"

namespace reassembly::geometry {

/// Angle-marginal density of the isotropic Gaussian on SO(3),
///   f(w) = ((1 - cos w)/pi) * sum_l (2l+1) exp(-l(l+1) eps2)
///                                   * sin((l+0.5) w) / sin(w/2),
/// truncated at l_max = 2000 for eps2 < 0.05, else 200. Tiny negative
/// truncation residues are clamped to zero.
double igso3_pdf(double omega, double eps2);

int igso3_series_lmax(double eps2);

/// Tabulated inverse-CDF sampler for the angle marginal of one eps2.
/// The table is immutable after construction and safe to share across
/// threads.
class IgSo3Sampler {
 public:
  explicit IgSo3Sampler(double eps2, int grid_size = 4096);

  double eps2() const { return eps2_; }

  /// Draws an angle in [0, pi] by inverse-CDF with linear interpolation.
  double sample_angle(Rng& rng) const;

  /// Draws a rotation with the given mean: mean * exp(omega * axis).
  Mat3 sample(const Mat3& mean, Rng& rng) const;

  /// CDF value at an angle (linear interpolation on the table).
  double cdf(double omega) const;

 private:
  double eps2_;
  std::vector<double> grid_;
  std::vector<double> cdf_;
};

}  // namespace reassembly::geometry
