#pragma once

#include <memory>
#include <vector>

#include "reassembly/geometry.hpp"
#include "reassembly/igso3.hpp"

namespace reassembly::diffusion {

using geometry::Mat3;

/// Linear-beta noise schedule. Timesteps are 1-based: beta(t), alpha(t),
/// alpha_bar(t) for t in [1, T]; alpha_bar(0) is defined as 1 so the final
/// reverse step is well-formed.
class NoiseSchedule {
 public:
  NoiseSchedule(int timesteps, double beta_start, double beta_end);

  int timesteps() const { return T_; }
  double beta(int t) const { return beta_.at(index(t)); }
  double alpha(int t) const { return alpha_.at(index(t)); }
  double alpha_bar(int t) const { return t == 0 ? 1.0 : alpha_bar_.at(index(t)); }

 private:
  std::size_t index(int t) const;
  int T_;
  std::vector<double> beta_, alpha_, alpha_bar_;
};

// --- Euclidean chain -----------------------------------------------------

/// x_t = sqrt(abar_t) x0 + sqrt(1 - abar_t) z.
Eigen::VectorXd forward_euclidean(const Eigen::VectorXd& x0, int t, const Eigen::VectorXd& z,
                                  const NoiseSchedule& sched);

/// eps = (x_t - sqrt(abar_t) x0_hat) / sqrt(1 - abar_t).
Eigen::VectorXd x0_to_eps(const Eigen::VectorXd& x_t, const Eigen::VectorXd& x0_hat, int t,
                          const NoiseSchedule& sched);

/// x0 = (x_t - sqrt(1 - abar_t) eps) / sqrt(abar_t).
Eigen::VectorXd eps_to_x0(const Eigen::VectorXd& x_t, const Eigen::VectorXd& eps, int t,
                          const NoiseSchedule& sched);

/// Deterministic reverse step from t to t_prev (t_prev < t, often t-1):
///   x_prev = (1/sqrt(a)) (x_t - ((1 - a)/sqrt(1 - abar_t)) eps_hat),
/// with a = abar_t / abar_prev, the single-step form when t_prev = t-1.
Eigen::VectorXd reverse_step_euclidean(const Eigen::VectorXd& x_t, const Eigen::VectorXd& eps_hat,
                                       int t, const NoiseSchedule& sched, int t_prev = -1);

/// Stochastic ancestral variant (ablation): adds the posterior sigma_t noise.
Eigen::VectorXd reverse_step_euclidean_stochastic(const Eigen::VectorXd& x_t,
                                                  const Eigen::VectorXd& eps_hat, int t,
                                                  const NoiseSchedule& sched, Rng& rng);

// --- SO(3) chain -----------------------------------------------------------

/// Caches one inverse-CDF sampler per timestep (eps2 = 1 - abar_t).
/// Immutable after construction; shareable across threads.
class So3ChainSampler {
 public:
  explicit So3ChainSampler(const NoiseSchedule& sched, int grid_size = 4096);

  const IgSo3Sampler& at(int t) const;

 private:
  std::vector<std::unique_ptr<IgSo3Sampler>> samplers_;
};

/// R_t ~ IGSO3(lambda(sqrt(abar_t), r0), 1 - abar_t).
Mat3 forward_rotation_so3(const Mat3& r0, int t, Rng& rng, const NoiseSchedule& sched,
                          const So3ChainSampler& chain);

/// eps_rot = lambda(1/sqrt(1 - abar_t), lambda(sqrt(abar_t), r0_hat)^T R_t);
/// the SO(3) analogue of the Euclidean x0 -> eps identity.
Mat3 rotation_x0_to_eps(const Mat3& r_t, const Mat3& r0_hat, int t, const NoiseSchedule& sched);

/// Reverse rotation step in the form given with the rotational chain:
///   R_prev = lambda(sqrt(abar_prev)/a, R_t) * lambda((1-abar_prev)/sqrt(abar_t), eps)^T,
/// with a = abar_t / abar_prev. See also reverse_step_rotation_x0_anchored,
/// which this artifact uses as the default sampling step.
Mat3 reverse_step_rotation(const Mat3& r_t, const Mat3& eps_rot_hat, int t,
                           const NoiseSchedule& sched, int t_prev = -1);

/// x0-anchored posterior-mean step:
///   R_prev = lambda(sqrt(abar_prev), r0_hat)
///            * lambda(sqrt(1-abar_prev)/sqrt(1-abar_t), lambda(sqrt(abar_t), r0_hat)^T R_t).
/// Contracts exactly onto r0_hat at t_prev = 0.
Mat3 reverse_step_rotation_x0_anchored(const Mat3& r_t, const Mat3& r0_hat, int t,
                                       const NoiseSchedule& sched, int t_prev = -1);

// --- 2D rotation chain -----------------------------------------------------

/// Diffuses the raw [cos t, sin t] 2-vector in Euclidean space.
Eigen::Vector2d forward_rotation_2d(const geometry::Angle2D& r0, int t, const Eigen::Vector2d& z,
                                    const NoiseSchedule& sched);

/// Readout: projection of a raw 2-vector back onto the circle.
geometry::Angle2D rotation_2d_readout(const Eigen::Vector2d& raw, bool* degenerate = nullptr);

}  // namespace reassembly::diffusion
