#include "reassembly/igso3.hpp"

#include <algorithm>
#include <cmath>

namespace reassembly::geometry {

int igso3_series_lmax(double eps2) { return eps2 < 0.05 ? 2000 : 200; }

double igso3_pdf(double omega, double eps2) {
  if (omega < 0.0 || omega > M_PI) throw std::domain_error("igso3_pdf: omega outside [0, pi]");
  if (eps2 <= 0.0) throw std::domain_error("igso3_pdf: eps2 must be > 0");
  const int lmax = igso3_series_lmax(eps2);
  const double half = std::sin(0.5 * omega);
  double sum = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    const double weight = (2.0 * l + 1.0) * std::exp(-static_cast<double>(l) * (l + 1.0) * eps2);
    if (weight < 1e-17) break;
    double ratio;
    if (omega < 1e-6) {
      ratio = 2.0 * l + 1.0;  // limit of sin((l+.5)w)/sin(w/2) at w -> 0
    } else {
      ratio = std::sin((l + 0.5) * omega) / half;
    }
    sum += weight * ratio;
  }
  const double f = (1.0 - std::cos(omega)) / M_PI * sum;
  return std::max(f, 0.0);
}

IgSo3Sampler::IgSo3Sampler(double eps2, int grid_size) : eps2_(eps2) {
  if (eps2 <= 0.0) throw std::domain_error("IgSo3Sampler: eps2 must be > 0");
  if (grid_size < 2) throw std::domain_error("IgSo3Sampler: grid too small");
  grid_.resize(grid_size);
  std::vector<double> pdf(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    grid_[i] = M_PI * static_cast<double>(i) / (grid_size - 1);
    pdf[i] = igso3_pdf(grid_[i], eps2);
  }
  cdf_.assign(grid_size, 0.0);
  for (int i = 1; i < grid_size; ++i) {
    cdf_[i] = cdf_[i - 1] + 0.5 * (pdf[i] + pdf[i - 1]) * (grid_[i] - grid_[i - 1]);
  }
  const double total = cdf_.back();
  if (total <= 0.0) throw std::domain_error("IgSo3Sampler: degenerate density");
  for (double& c : cdf_) c /= total;
}

double IgSo3Sampler::sample_angle(Rng& rng) const {
  const double u = rng.uniform();
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
  if (i == 0) i = 1;
  if (i >= cdf_.size()) i = cdf_.size() - 1;
  const double c0 = cdf_[i - 1], c1 = cdf_[i];
  const double w = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
  return grid_[i - 1] + w * (grid_[i] - grid_[i - 1]);
}

Mat3 IgSo3Sampler::sample(const Mat3& mean, Rng& rng) const {
  check_rotation(mean, 1e-6);
  const double omega = sample_angle(rng);
  const Vec3 axis = uniform_axis(rng);
  return mean * matrix_exp(omega * axis);
}

double IgSo3Sampler::cdf(double omega) const {
  if (omega <= 0.0) return 0.0;
  if (omega >= M_PI) return 1.0;
  const double step = M_PI / (grid_.size() - 1);
  const std::size_t i = std::min(static_cast<std::size_t>(omega / step), grid_.size() - 2);
  const double w = (omega - grid_[i]) / step;
  return cdf_[i] + w * (cdf_[i + 1] - cdf_[i]);
}

}  // namespace reassembly::geometry
