#pragma once

// Numerical verification of quasi-positive curvature: at a marked point of the
// quotient, every horizontal 2-plane must have a positive zero-plane defect,
// and at the known flat point the defect must vanish on a constructed plane.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "biq/catalog.hpp"
#include "biq/hlinalg.hpp"

namespace biq {

struct MetricConfig {
  double t = 1.0;                  // Cheeger parameter of Phi1
  int restarts = 64;               // multistart count for the minimizer
  std::uint64_t seed = 42;
  int max_iters = 5000;
  double rel_tol = 1e-14;          // stop on relative decrease below this
  double stop_below = 1e-16;       // stop outright once the value is this small
  double grad_h = 1e-5;            // central-difference step
  double zero_threshold = 1e-10;   // classify minimum as a zero plane
  double positive_threshold = 1e-6;  // classify minimum as positive
  int polish_iters = 40;           // Levenberg refinement steps per restart
  double polish_h = 1e-7;          // forward-difference step for the Jacobian
  int stall_block = 250;           // gradient iterations per progress check
  double stall_rel = 1e-3;         // stop when a block improves less than this
};

// Cheeger reshaping of a tangent vector: scales the k-component by t/(t+1).
HMat metric_phi1(const HMat& X, double t);
HMat metric_phi1_inv(const HMat& X, double t);

// g0-orthonormal basis of the horizontal space at p = rotation_point(theta)
// for the action generated by `gens`: the orthocomplement of the six vertical
// vectors Ad_p(A_i) - B_i. Throws std::runtime_error unless they span a
// 6-dimensional space (so the horizontal dimension is 15).
struct HorizontalFrame {
  HMat p;
  std::array<HMat, 6> vertical;
  std::vector<HMat> basis;                  // 15 matrices, g0-orthonormal
  Eigen::Matrix<double, 21, Eigen::Dynamic> coords;  // columns in the sp3 onb

  HMat vector(const Eigen::VectorXd& coeffs) const;  // basis * coeffs
};

HorizontalFrame horizontal_frame(const LieAlgebraPair& gens, double theta);

// Sum of squared g0-norms of the five brackets whose simultaneous vanishing
// characterizes a zero-curvature plane: [X,Y], [X_k,Y_k], [X_p,Y_p] and the
// k/p brackets of the Ad_{p^{-1}}-translates.
double defect_raw(const HMat& p, const HMat& X, const HMat& Y);

struct ZeroPlaneDefect {
  double value = 0;      // defect of the orthonormalized pair
  double raw = 0;        // defect of the pair as given
  double gram_det = 0;   // Gram determinant of the pair as given
  bool dependent = false;  // pair did not span a plane; value is +infinity
};

// Defect of the plane spanned by two horizontal coefficient vectors.
struct DefectEvaluator {
  explicit DefectEvaluator(const LieAlgebraPair& gens, double theta);

  ZeroPlaneDefect plane_defect(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  double objective(const Eigen::VectorXd& ab) const;  // 30 coords, +inf if degenerate

  // The five bracket matrices flattened to a 105-vector in g0-isometric
  // coordinates, so residuals(a,b).squaredNorm() equals the raw defect.
  Eigen::VectorXd residuals(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;

  HorizontalFrame frame;
  HMat p;
  std::vector<HMat> basis_k, basis_p;        // kp pieces of the frame basis
  std::vector<HMat> ad_basis_k, ad_basis_p;  // same for Ad_{p^{-1}} basis
};

struct MinDefectResult {
  double value = 0;
  bool converged = false;
  int restart = -1;             // restart that produced the minimum
  Eigen::VectorXd x_coeffs, y_coeffs;
  double gram_det = 0;
  HMat X, Y;
};

// Projected-gradient multistart minimization of the plane defect over
// orthonormal pairs of horizontal vectors. Deterministic for a fixed config.
MinDefectResult min_defect(const DefectEvaluator& ev, const MetricConfig& cfg);

struct ScanRow {
  std::string name;
  double theta = 0;
  double min_value = 0;
  bool converged = false;
  std::string label;  // "positive", "zero" or "indeterminate"
};

std::string classify_value(double v, const MetricConfig& cfg);

ScanRow scan_point(const std::string& name, double theta, const MetricConfig& cfg);

std::vector<ScanRow> theta_scan(const std::string& name, const std::vector<double>& thetas,
                                const MetricConfig& cfg);

}  // namespace biq
