#include "biq/hlinalg.hpp"

#include <ostream>

namespace biq {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  os << q.r;
  if (q.x) os << (q.x > 0 ? "+" : "") << q.x << "i";
  if (q.y) os << (q.y > 0 ? "+" : "") << q.y << "j";
  if (q.z) os << (q.z > 0 ? "+" : "") << q.z << "k";
  return os;
}

double g0(const HMat& X, const HMat& Y) {
  double tr = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Quaternion &xa = X(a, b), &yb = Y(b, a);
      tr += xa.r * yb.r - xa.x * yb.x - xa.y * yb.y - xa.z * yb.z;
    }
  return -tr;
}

HMat bracket(const HMat& X, const HMat& Y) { return X * Y - Y * X; }

HMat ad(const HMat& p, const HMat& X) { return p * X * hconj(p); }

KpSplit kp_split(const HMat& X) {
  KpSplit s;
  s.k_part = HMat::Zero();
  s.p_part = HMat::Zero();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      bool in_k = (a == 0 && b == 0) || (a > 0 && b > 0);
      (in_k ? s.k_part : s.p_part)(a, b) = X(a, b);
    }
  return s;
}

HMat rotation_point(double theta) {
  HMat p = HMat::Zero();
  p(0, 0) = std::cos(theta);
  p(0, 1) = std::sin(theta);
  p(1, 0) = -std::sin(theta);
  p(1, 1) = std::cos(theta);
  p(2, 2) = 1.0;
  return p;
}

namespace {

std::array<HMat, 21> make_basis(bool normalized) {
  std::array<HMat, 21> b;
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  int idx = 0;
  for (int a = 0; a < 3; ++a)
    for (const auto& u : units) {
      b[idx] = HMat::Zero();
      b[idx](a, a) = u;
      ++idx;
    }
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const double s = normalized ? 1.0 / std::sqrt(2.0) : 1.0;
  for (const auto& ab : pairs) {
    b[idx] = HMat::Zero();
    b[idx](ab[0], ab[1]) = s;
    b[idx](ab[1], ab[0]) = -s;
    ++idx;
    for (const auto& u : units) {
      b[idx] = HMat::Zero();
      b[idx](ab[0], ab[1]) = u * s;
      b[idx](ab[1], ab[0]) = u * s;
      ++idx;
    }
  }
  return b;
}

}  // namespace

const std::array<HMat, 21>& sp3_basis() {
  static const std::array<HMat, 21> b = make_basis(false);
  return b;
}

const std::array<HMat, 21>& sp3_onb() {
  static const std::array<HMat, 21> b = make_basis(true);
  return b;
}

double max_abs_entry(const HMat& X) {
  double m = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m = std::max(m, qabs(X(a, b)));
  return m;
}

bool is_antihermitian(const HMat& X, double tol) {
  HMat d = X + hconj(X);
  return max_abs_entry(d) <= tol;
}

}  // namespace biq
