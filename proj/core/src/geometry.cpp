#include "reassembly/geometry.hpp"

#include <cmath>

namespace reassembly::geometry {

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n < 1e-300) throw InvalidRotationError("cannot normalize zero-norm quaternion");
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::canonical() const {
  const Quaternion q = normalized();
  double sign = 0.0;
  if (q.w != 0.0)
    sign = q.w;
  else if (q.x != 0.0)
    sign = q.x;
  else if (q.y != 0.0)
    sign = q.y;
  else
    sign = q.z;
  if (sign < 0.0) return {-q.w, -q.x, -q.y, -q.z};
  return q;
}

Quaternion quat_multiply(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Angle2D Angle2D::projected(bool* degenerate) const {
  const double n = std::sqrt(c * c + s * s);
  if (degenerate) *degenerate = false;
  if (n < 1e-12) {
    if (degenerate) *degenerate = true;
    return {1.0, 0.0};
  }
  return {c / n, s / n};
}

Angle2D angle2d_compose(const Angle2D& a, const Angle2D& b) {
  // Angle addition on the circle.
  return Angle2D{a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s}.projected();
}

Angle2D angle2d_inverse(const Angle2D& a) { return {a.c, -a.s}; }

Eigen::Matrix2d angle2d_to_matrix(const Angle2D& a) {
  Eigen::Matrix2d m;
  m << a.c, -a.s, a.s, a.c;
  return m;
}

double angle2d_distance(const Angle2D& a, const Angle2D& b) {
  const double dot = a.c * b.c + a.s * b.s;
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

bool is_rotation(const Mat3& R, double tol) {
  const double ortho = (R.transpose() * R - Mat3::Identity()).norm();
  return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

void check_rotation(const Mat3& R, double tol) {
  if (!is_rotation(R, tol)) throw InvalidRotationError("matrix is not in SO(3)");
}

Mat3 quat_to_matrix(const Quaternion& q_in) {
  const double n = q_in.norm();
  if (n < 1e-300) throw InvalidRotationError("zero-norm quaternion has no rotation");
  const Quaternion q = (std::abs(n - 1.0) > 1e-6) ? q_in.normalized() : q_in;
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3 R;
  R << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return R;
}

Quaternion matrix_to_quat(const Mat3& R) {
  check_rotation(R, 1e-6);
  // Shepperd's method: pick the largest of (trace, R00, R11, R22).
  const double tr = R.trace();
  Quaternion q;
  if (tr > R(0, 0) && tr > R(1, 1) && tr > R(2, 2)) {
    const double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (R(2, 1) - R(1, 2)) / s;
    q.y = (R(0, 2) - R(2, 0)) / s;
    q.z = (R(1, 0) - R(0, 1)) / s;
  } else if (R(0, 0) > R(1, 1) && R(0, 0) > R(2, 2)) {
    const double s = std::sqrt(1.0 + R(0, 0) - R(1, 1) - R(2, 2)) * 2.0;
    q.w = (R(2, 1) - R(1, 2)) / s;
    q.x = 0.25 * s;
    q.y = (R(0, 1) + R(1, 0)) / s;
    q.z = (R(0, 2) + R(2, 0)) / s;
  } else if (R(1, 1) > R(2, 2)) {
    const double s = std::sqrt(1.0 + R(1, 1) - R(0, 0) - R(2, 2)) * 2.0;
    q.w = (R(0, 2) - R(2, 0)) / s;
    q.x = (R(0, 1) + R(1, 0)) / s;
    q.y = 0.25 * s;
    q.z = (R(1, 2) + R(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + R(2, 2) - R(0, 0) - R(1, 1)) * 2.0;
    q.w = (R(1, 0) - R(0, 1)) / s;
    q.x = (R(0, 2) + R(2, 0)) / s;
    q.y = (R(1, 2) + R(2, 1)) / s;
    q.z = 0.25 * s;
  }
  return q.canonical();
}

Vec3 matrix_log(const Mat3& R) {
  // Quaternion route avoids the sin(theta) ~ 0 division near pi.
  const Quaternion q = matrix_to_quat(R);
  const double vnorm = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  const double angle = 2.0 * std::atan2(vnorm, std::abs(q.w));
  if (vnorm < 1e-300) return Vec3::Zero();
  return Vec3(q.x, q.y, q.z) * (angle / vnorm);
}

Mat3 matrix_exp(const Vec3& v) {
  const double theta = v.norm();
  Mat3 W;
  W << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  if (theta < 1e-8) return Mat3::Identity() + W + 0.5 * W * W;
  return Mat3::Identity() + W * (std::sin(theta) / theta) +
         W * W * ((1.0 - std::cos(theta)) / (theta * theta));
}

Mat3 geodesic_scale(double gamma, const Mat3& R, bool* branch_warning) {
  check_rotation(R, 1e-6);
  const Vec3 v = matrix_log(R);
  if (branch_warning) *branch_warning = v.norm() > M_PI - 1e-6;
  if (gamma == 0.0) return Mat3::Identity();
  return matrix_exp(gamma * v);
}

double geodesic_distance(const Mat3& r1, const Mat3& r2) {
  const Quaternion q = matrix_to_quat(Mat3(r1.transpose() * r2));
  const double vnorm = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  return 2.0 * std::atan2(vnorm, std::abs(q.w));
}

Quaternion uniform_quaternion(Rng& rng) {
  // Subgroup-algorithm sampling: uniform on S^3 from three uniforms.
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double u3 = rng.uniform();
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const Quaternion q{a * std::sin(2.0 * M_PI * u2), a * std::cos(2.0 * M_PI * u2),
                     b * std::sin(2.0 * M_PI * u3), b * std::cos(2.0 * M_PI * u3)};
  return q.canonical();
}

Mat3 uniform_rotation(Rng& rng) { return quat_to_matrix(uniform_quaternion(rng)); }

Vec3 uniform_axis(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace reassembly::geometry
