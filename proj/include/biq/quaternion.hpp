#pragma once

#include <cmath>
#include <iosfwd>
#include <Eigen/Core>

namespace biq {

// Quaternion r + i*x + j*y + k*z over double, usable as an Eigen scalar.
struct Quaternion {
  double r = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double real) : r(real) {}  // implicit: reals embed as scalars
  Quaternion(double r_, double x_, double y_, double z_) : r(r_), x(x_), y(y_), z(z_) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  Quaternion operator-() const { return {-r, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& q) { r += q.r; x += q.x; y += q.y; z += q.z; return *this; }
  Quaternion& operator-=(const Quaternion& q) { r -= q.r; x -= q.x; y -= q.y; z -= q.z; return *this; }
  Quaternion& operator*=(const Quaternion& q) { *this = *this * q; return *this; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.r + b.r, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.r - b.r, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.r * b.r - a.x * b.x - a.y * b.y - a.z * b.z,
            a.r * b.x + a.x * b.r + a.y * b.z - a.z * b.y,
            a.r * b.y - a.x * b.z + a.y * b.r + a.z * b.x,
            a.r * b.z + a.x * b.y - a.y * b.x + a.z * b.r};
  }
  friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.r, s * q.x, s * q.y, s * q.z}; }
  friend Quaternion operator*(const Quaternion& q, double s) { return s * q; }
  friend Quaternion operator/(const Quaternion& q, double s) { return {q.r / s, q.x / s, q.y / s, q.z / s}; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.r == b.r && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

inline Quaternion conj(const Quaternion& q) { return {q.r, -q.x, -q.y, -q.z}; }
inline double real(const Quaternion& q) { return q.r; }
inline double norm2(const Quaternion& q) { return q.r * q.r + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double qabs(const Quaternion& q) { return std::sqrt(norm2(q)); }
inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace biq

namespace Eigen {

template <>
struct NumTraits<biq::Quaternion> {
  using Real = biq::Quaternion;
  using NonInteger = biq::Quaternion;
  using Literal = biq::Quaternion;
  using Nested = biq::Quaternion;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return biq::Quaternion(NumTraits<double>::epsilon()); }
  static inline Real dummy_precision() { return biq::Quaternion(NumTraits<double>::dummy_precision()); }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
