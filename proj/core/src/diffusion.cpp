#include "reassembly/diffusion.hpp"

#include <cmath>

#include "reassembly/errors.hpp"

namespace reassembly::diffusion {

NoiseSchedule::NoiseSchedule(int timesteps, double beta_start, double beta_end) : T_(timesteps) {
  if (timesteps < 1) throw ConfigError("schedule: T must be >= 1");
  if (!(beta_start > 0.0 && beta_start <= beta_end && beta_end < 1.0)) {
    throw ConfigError("schedule: need 0 < beta_start <= beta_end < 1");
  }
  beta_.resize(timesteps);
  alpha_.resize(timesteps);
  alpha_bar_.resize(timesteps);
  double prod = 1.0;
  for (int t = 1; t <= timesteps; ++t) {
    const double b = (timesteps == 1)
                         ? beta_start
                         : beta_start + (t - 1) * (beta_end - beta_start) / (timesteps - 1);
    beta_[t - 1] = b;
    alpha_[t - 1] = 1.0 - b;
    prod *= 1.0 - b;
    alpha_bar_[t - 1] = prod;
  }
}

std::size_t NoiseSchedule::index(int t) const {
  if (t < 1 || t > T_) throw std::domain_error("schedule: timestep out of range");
  return static_cast<std::size_t>(t - 1);
}

static void check_same_size(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const char* where) {
  if (a.size() != b.size()) throw DimensionError(std::string(where) + ": size mismatch");
}

Eigen::VectorXd forward_euclidean(const Eigen::VectorXd& x0, int t, const Eigen::VectorXd& z,
                                  const NoiseSchedule& sched) {
  check_same_size(x0, z, "forward_euclidean");
  const double ab = sched.alpha_bar(t);
  return std::sqrt(ab) * x0 + std::sqrt(1.0 - ab) * z;
}

Eigen::VectorXd x0_to_eps(const Eigen::VectorXd& x_t, const Eigen::VectorXd& x0_hat, int t,
                          const NoiseSchedule& sched) {
  check_same_size(x_t, x0_hat, "x0_to_eps");
  const double ab = sched.alpha_bar(t);
  if (ab >= 1.0) throw std::domain_error("x0_to_eps: alpha_bar = 1 has no noise to recover");
  return (x_t - std::sqrt(ab) * x0_hat) / std::sqrt(1.0 - ab);
}

Eigen::VectorXd eps_to_x0(const Eigen::VectorXd& x_t, const Eigen::VectorXd& eps, int t,
                          const NoiseSchedule& sched) {
  check_same_size(x_t, eps, "eps_to_x0");
  const double ab = sched.alpha_bar(t);
  if (ab >= 1.0) return x_t;
  return (x_t - std::sqrt(1.0 - ab) * eps) / std::sqrt(ab);
}

Eigen::VectorXd reverse_step_euclidean(const Eigen::VectorXd& x_t, const Eigen::VectorXd& eps_hat,
                                       int t, const NoiseSchedule& sched, int t_prev) {
  check_same_size(x_t, eps_hat, "reverse_step_euclidean");
  if (t_prev < 0) t_prev = t - 1;
  if (t_prev >= t) throw std::domain_error("reverse_step_euclidean: t_prev must be < t");
  const double ab_t = sched.alpha_bar(t);
  const double a = ab_t / sched.alpha_bar(t_prev);
  return (x_t - ((1.0 - a) / std::sqrt(1.0 - ab_t)) * eps_hat) / std::sqrt(a);
}

Eigen::VectorXd reverse_step_euclidean_stochastic(const Eigen::VectorXd& x_t,
                                                  const Eigen::VectorXd& eps_hat, int t,
                                                  const NoiseSchedule& sched, Rng& rng) {
  Eigen::VectorXd mean = reverse_step_euclidean(x_t, eps_hat, t, sched);
  if (t <= 1) return mean;
  // DDPM posterior variance beta_t * (1 - abar_{t-1}) / (1 - abar_t).
  const double var =
      sched.beta(t) * (1.0 - sched.alpha_bar(t - 1)) / (1.0 - sched.alpha_bar(t));
  const double sigma = std::sqrt(std::max(var, 0.0));
  for (Eigen::Index i = 0; i < mean.size(); ++i) mean[i] += sigma * rng.normal();
  return mean;
}

So3ChainSampler::So3ChainSampler(const NoiseSchedule& sched, int grid_size) {
  samplers_.resize(static_cast<std::size_t>(sched.timesteps()));
  for (int t = 1; t <= sched.timesteps(); ++t) {
    const double eps2 = 1.0 - sched.alpha_bar(t);
    samplers_[static_cast<std::size_t>(t - 1)] = std::make_unique<IgSo3Sampler>(eps2, grid_size);
  }
}

const IgSo3Sampler& So3ChainSampler::at(int t) const {
  if (t < 1 || t > static_cast<int>(samplers_.size()))
    throw std::domain_error("So3ChainSampler: timestep out of range");
  return *samplers_[static_cast<std::size_t>(t - 1)];
}

Mat3 forward_rotation_so3(const Mat3& r0, int t, Rng& rng, const NoiseSchedule& sched,
                          const So3ChainSampler& chain) {
  const Mat3 mean = geometry::geodesic_scale(std::sqrt(sched.alpha_bar(t)), r0);
  return chain.at(t).sample(mean, rng);
}

Mat3 rotation_x0_to_eps(const Mat3& r_t, const Mat3& r0_hat, int t, const NoiseSchedule& sched) {
  const double ab = sched.alpha_bar(t);
  if (ab >= 1.0) throw std::domain_error("rotation_x0_to_eps: alpha_bar = 1");
  const Mat3 residual =
      geometry::geodesic_scale(std::sqrt(ab), r0_hat).transpose() * r_t;
  return geometry::geodesic_scale(1.0 / std::sqrt(1.0 - ab), residual);
}

Mat3 reverse_step_rotation(const Mat3& r_t, const Mat3& eps_rot_hat, int t,
                           const NoiseSchedule& sched, int t_prev) {
  if (t_prev < 0) t_prev = t - 1;
  if (t_prev >= t) throw std::domain_error("reverse_step_rotation: t_prev must be < t");
  const double ab_t = sched.alpha_bar(t);
  const double ab_prev = sched.alpha_bar(t_prev);
  const double a = ab_t / ab_prev;
  const Mat3 keep = geometry::geodesic_scale(std::sqrt(ab_prev) / a, r_t);
  const Mat3 remove = geometry::geodesic_scale((1.0 - ab_prev) / std::sqrt(ab_t), eps_rot_hat);
  return keep * remove.transpose();
}

Mat3 reverse_step_rotation_x0_anchored(const Mat3& r_t, const Mat3& r0_hat, int t,
                                       const NoiseSchedule& sched, int t_prev) {
  if (t_prev < 0) t_prev = t - 1;
  if (t_prev >= t) throw std::domain_error("reverse_step_rotation_x0_anchored: t_prev < t");
  const double ab_t = sched.alpha_bar(t);
  const double ab_prev = sched.alpha_bar(t_prev);
  const Mat3 residual =
      geometry::geodesic_scale(std::sqrt(ab_t), r0_hat).transpose() * r_t;
  const Mat3 anchor = geometry::geodesic_scale(std::sqrt(ab_prev), r0_hat);
  const Mat3 scaled =
      geometry::geodesic_scale(std::sqrt(1.0 - ab_prev) / std::sqrt(1.0 - ab_t), residual);
  return anchor * scaled;
}

Eigen::Vector2d forward_rotation_2d(const geometry::Angle2D& r0, int t, const Eigen::Vector2d& z,
                                    const NoiseSchedule& sched) {
  Eigen::VectorXd x0(2), zz(2);
  x0 << r0.c, r0.s;
  zz << z.x(), z.y();
  const Eigen::VectorXd out = forward_euclidean(x0, t, zz, sched);
  return {out[0], out[1]};
}

geometry::Angle2D rotation_2d_readout(const Eigen::Vector2d& raw, bool* degenerate) {
  return geometry::Angle2D{raw.x(), raw.y()}.projected(degenerate);
}

}  // namespace reassembly::diffusion
