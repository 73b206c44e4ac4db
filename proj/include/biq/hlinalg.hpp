#pragma once

#include <array>

#include "biq/quaternion.hpp"

namespace biq {

using HMat = Eigen::Matrix<Quaternion, 3, 3>;
using HMat2 = Eigen::Matrix<Quaternion, 2, 2>;

// Quaternionic conjugate transpose. Eigen's adjoint() applies the identity
// conjugation to non-complex scalars, so this is a separate free function.
template <typename Derived>
auto hconj(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Plain out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

// Bi-invariant metric g0(X, Y) = -Re tr(XY) on sp(3).
double g0(const HMat& X, const HMat& Y);

inline double g0norm(const HMat& X) { return std::sqrt(g0(X, X)); }

HMat bracket(const HMat& X, const HMat& Y);

// Conjugation Ad_p X = p X p^{-1}; p must be unit symplectic (p^{-1} = hconj(p)).
HMat ad(const HMat& p, const HMat& X);

// Splitting of sp(3) for the symmetric pair (Sp(3), Sp(1) x Sp(2)):
// k = first diagonal entry + lower-right 2x2 block, p = off-block entries.
struct KpSplit {
  HMat k_part;
  HMat p_part;
};
KpSplit kp_split(const HMat& X);

// Rotation by theta in the (1,2) coordinate plane, identity on the third.
HMat rotation_point(double theta);

// Fixed ordered basis of sp(3), 21 elements:
// u*E_aa for a = 0,1,2 and u = i,j,k (indices 0..8), then for (a,b) in
// {(0,1),(0,2),(1,2)}: E_ab - E_ba followed by u*(E_ab + E_ba), u = i,j,k
// (indices 9..20). g0-orthogonal; diagonal elements have norm 1, the rest
// norm sqrt(2).
const std::array<HMat, 21>& sp3_basis();

// Same basis rescaled to be g0-orthonormal.
const std::array<HMat, 21>& sp3_onb();

double max_abs_entry(const HMat& X);
bool is_antihermitian(const HMat& X, double tol = 1e-12);

}  // namespace biq
