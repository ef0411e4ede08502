#pragma once

#include <cmath>
#include <stdexcept>

namespace tqg {

/// Plain real 3-vector. Bloch vectors live here; measurement axes use
/// Direction below.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vec3 operator*(double s, Vec3 v) {
    return {s * v.x, s * v.y, s * v.z};
  }
  friend constexpr Vec3 operator*(Vec3 v, double s) { return s * v; }
  friend constexpr bool operator==(Vec3 a, Vec3 b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double deg_to_rad(double deg) { return deg * (3.14159265358979323846 / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / 3.14159265358979323846); }

/// Unit vector on the Bloch sphere. Normalized at construction; a
/// (near-)zero input is rejected rather than silently producing NaNs.
class Direction {
 public:
  explicit Direction(Vec3 v) {
    const double n = v.norm();
    if (n < 1e-12) throw std::invalid_argument("zero-length direction");
    v_ = {v.x / n, v.y / n, v.z / n};
  }
  Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}

  /// Polar angle theta from +z, azimuth phi from +x, both in radians.
  static Direction from_spherical(double theta, double phi) {
    return Direction(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                     std::cos(theta));
  }
  static Direction from_spherical_deg(double theta_deg, double phi_deg) {
    return from_spherical(deg_to_rad(theta_deg), deg_to_rad(phi_deg));
  }
  /// In-plane axis in the xz-plane, angle measured from +z toward +x.
  static Direction from_xz_angle(double angle_rad) {
    return Direction(std::sin(angle_rad), 0.0, std::cos(angle_rad));
  }
  static Direction x_axis() { return Direction(1.0, 0.0, 0.0); }
  static Direction y_axis() { return Direction(0.0, 1.0, 0.0); }
  static Direction z_axis() { return Direction(0.0, 0.0, 1.0); }

  Vec3 vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  Direction opposite() const { return Direction(unchecked_tag{}, {-v_.x, -v_.y, -v_.z}); }

  friend bool operator==(const Direction& a, const Direction& b) { return a.v_ == b.v_; }

 private:
  struct unchecked_tag {};
  Direction(unchecked_tag, Vec3 v) : v_(v) {}
  Vec3 v_;
};

inline double dot(const Direction& a, const Direction& b) { return dot(a.vec(), b.vec()); }
inline double dot(const Direction& a, Vec3 b) { return dot(a.vec(), b); }
inline double dot(Vec3 a, const Direction& b) { return dot(a, b.vec()); }

}  // namespace tqg
