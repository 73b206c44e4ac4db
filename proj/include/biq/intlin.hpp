#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace biq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using Vec2R = Eigen::Matrix<Rat, 2, 1>;

// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D a
// divisibility chain d0 | d1 | ... (zeros trailing, all entries >= 0).
struct SnfResult {
  IMat U, D, V;
};

// Deterministic SNF: pivot = smallest nonzero absolute value in the working
// submatrix, ties broken by lowest row then column index.
SnfResult snf(const IMat& A);

// Exact determinant by cofactor expansion; intended for small square matrices.
Int det_exact(const IMat& A);

// Solution set {x in R^2/Z^2 : M x in Z^m} of a rank-<=2 congruence system:
// a (possibly trivial) subtorus spanned by free_directions plus finitely many
// torsion cosets. torsion_reps are coset representatives with entries in [0,1);
// their count equals the product of the nonzero elementary divisors.
struct TorusSubgroup {
  std::vector<Vec2R> free_directions;  // primitive integer vectors (columns of V)
  std::vector<Vec2R> torsion_reps;
  std::vector<Int> divisors;  // elementary divisors of M, zeros trailing
};

TorusSubgroup solve_torus(const IMat& M);

// r - floor(r), in [0,1).
Rat mod1(const Rat& r);

bool lex_less(const Vec2R& a, const Vec2R& b);

}  // namespace biq
