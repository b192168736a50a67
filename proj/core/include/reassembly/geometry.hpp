#pragma once

#include <Eigen/Dense>

#include "reassembly/errors.hpp"
#include "reassembly/rng.hpp"

namespace reassembly::geometry {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Unit quaternion (w, x, y, z). q and -q denote the same rotation; the
/// canonical sign convention is w >= 0, breaking ties toward x, y, z >= 0.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quaternion normalized() const;
  Quaternion canonical() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }

  Eigen::Vector4d coeffs() const { return {w, x, y, z}; }
};

Quaternion quat_multiply(const Quaternion& a, const Quaternion& b);

/// 2D rotation stored as the unit vector [cos t, sin t].
struct Angle2D {
  double c = 1.0, s = 0.0;

  static Angle2D from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
  double angle() const { return std::atan2(s, c); }

  /// Projects onto the unit circle. Sets *degenerate when the input vector
  /// norm is ~0 (result falls back to angle 0).
  Angle2D projected(bool* degenerate = nullptr) const;
};

Angle2D angle2d_compose(const Angle2D& a, const Angle2D& b);
Angle2D angle2d_inverse(const Angle2D& a);
Eigen::Matrix2d angle2d_to_matrix(const Angle2D& a);

/// Absolute angular separation on the circle, in [0, pi].
double angle2d_distance(const Angle2D& a, const Angle2D& b);

// --- SO(3) -------------------------------------------------------------

/// Throws InvalidRotationError unless R^T R = I and det R = +1 within tol.
void check_rotation(const Mat3& R, double tol = 1e-6);
bool is_rotation(const Mat3& R, double tol = 1e-6);

Mat3 quat_to_matrix(const Quaternion& q);

/// Largest-component (Shepperd) extraction; stable for angles near pi.
Quaternion matrix_to_quat(const Mat3& R);

/// Lie-algebra log: axis-angle vector with norm in [0, pi].
Vec3 matrix_log(const Mat3& R);

/// Rodrigues exponential of an axis-angle vector.
Mat3 matrix_exp(const Vec3& v);

/// Geodesic flow from the identity: exp(gamma * log(R)).
/// When the angle of R is within branch_tol of pi the principal branch is
/// ambiguous; the canonical branch is used and *branch_warning is set.
Mat3 geodesic_scale(double gamma, const Mat3& R, bool* branch_warning = nullptr);

/// Relative rotation angle in radians, in [0, pi].
double geodesic_distance(const Mat3& r1, const Mat3& r2);

/// Uniform rotation on SO(3) (subgroup-algorithm quaternion sampling).
Quaternion uniform_quaternion(Rng& rng);
Mat3 uniform_rotation(Rng& rng);

/// Uniform direction on the unit sphere.
Vec3 uniform_axis(Rng& rng);

// --- Poses ---------------------------------------------------------------

struct Pose2 {
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();
  Angle2D rotation;
};

struct Pose3 {
  Vec3 translation = Vec3::Zero();
  Quaternion rotation;
};

}  // namespace reassembly::geometry
