#include "biq/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

namespace biq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

HMat scaled(const HMat& m, double s) {
  HMat r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r(a, b) = m(a, b) * Quaternion(s);
  return r;
}

HMat combine(const std::vector<HMat>& basis, const Eigen::VectorXd& coeffs) {
  HMat r = HMat::Zero();
  for (int m = 0; m < static_cast<int>(basis.size()); ++m) {
    const double c = coeffs(m);
    if (c == 0.0) continue;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) r(a, b) += basis[m](a, b) * Quaternion(c);
  }
  return r;
}

double norm2_bracket(const HMat& X, const HMat& Y) {
  HMat B = bracket(X, Y);
  return g0(B, B);
}

}  // namespace

HMat metric_phi1(const HMat& X, double t) {
  KpSplit s = kp_split(X);
  return s.p_part + scaled(s.k_part, t / (t + 1.0));
}

HMat metric_phi1_inv(const HMat& X, double t) {
  KpSplit s = kp_split(X);
  return s.p_part + scaled(s.k_part, (t + 1.0) / t);
}

HMat HorizontalFrame::vector(const Eigen::VectorXd& coeffs) const {
  return combine(basis, coeffs);
}

HorizontalFrame horizontal_frame(const LieAlgebraPair& gens, double theta) {
  HorizontalFrame f;
  f.p = rotation_point(theta);
  for (int i = 0; i < 6; ++i)
    f.vertical[i] = ad(f.p, gens.gens[i].first) - gens.gens[i].second;

  const auto& onb = sp3_onb();
  Eigen::MatrixXd C(6, 21);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 21; ++j) C(i, j) = g0(f.vertical[i], onb[j]);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
  svd.setThreshold(1e-9);
  if (svd.rank() != 6)
    throw std::runtime_error("vertical space of " + gens.name + " is not 6-dimensional");

  f.coords = svd.matrixV().rightCols(15);
  f.basis.reserve(15);
  for (int m = 0; m < 15; ++m) {
    HMat h = HMat::Zero();
    for (int j = 0; j < 21; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) h(a, b) += onb[j](a, b) * Quaternion(f.coords(j, m));
    f.basis.push_back(h);
  }
  return f;
}

double defect_raw(const HMat& p, const HMat& X, const HMat& Y) {
  KpSplit xs = kp_split(X), ys = kp_split(Y);
  HMat pinv = hconj(p);
  KpSplit axs = kp_split(ad(pinv, X)), ays = kp_split(ad(pinv, Y));
  return norm2_bracket(X, Y) + norm2_bracket(xs.k_part, ys.k_part) +
         norm2_bracket(xs.p_part, ys.p_part) +
         norm2_bracket(axs.k_part, ays.k_part) +
         norm2_bracket(axs.p_part, ays.p_part);
}

DefectEvaluator::DefectEvaluator(const LieAlgebraPair& gens, double theta)
    : frame(horizontal_frame(gens, theta)), p(frame.p) {
  HMat pinv = hconj(p);
  for (const HMat& h : frame.basis) {
    KpSplit s = kp_split(h);
    basis_k.push_back(s.k_part);
    basis_p.push_back(s.p_part);
    KpSplit a = kp_split(ad(pinv, h));
    ad_basis_k.push_back(a.k_part);
    ad_basis_p.push_back(a.p_part);
  }
}

namespace {

std::array<HMat, 5> defect_brackets(const DefectEvaluator& ev, const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b) {
  HMat X = combine(ev.frame.basis, a), Y = combine(ev.frame.basis, b);
  HMat Xk = combine(ev.basis_k, a), Yk = combine(ev.basis_k, b);
  HMat Xp = X - Xk, Yp = Y - Yk;
  HMat AXk = combine(ev.ad_basis_k, a), AYk = combine(ev.ad_basis_k, b);
  HMat AXp = combine(ev.ad_basis_p, a), AYp = combine(ev.ad_basis_p, b);
  return {bracket(X, Y), bracket(Xk, Yk), bracket(Xp, Yp), bracket(AXk, AYk),
          bracket(AXp, AYp)};
}

double defect_from_coeffs(const DefectEvaluator& ev, const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b) {
  double s = 0;
  for (const HMat& B : defect_brackets(ev, a, b)) s += g0(B, B);
  return s;
}

// g0-isometric coordinates of an antihermitian matrix: the three imaginary
// parts of each diagonal entry and sqrt(2) times the components of the three
// above-diagonal entries.
void flatten_antihermitian(const HMat& m, double* out) {
  static const double kSqrt2 = std::sqrt(2.0);
  int n = 0;
  for (int a = 0; a < 3; ++a) {
    out[n++] = m(a, a).x;
    out[n++] = m(a, a).y;
    out[n++] = m(a, a).z;
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      out[n++] = kSqrt2 * m(a, b).r;
      out[n++] = kSqrt2 * m(a, b).x;
      out[n++] = kSqrt2 * m(a, b).y;
      out[n++] = kSqrt2 * m(a, b).z;
    }
}

// Gram-Schmidt in frame coordinates (the frame is g0-orthonormal). Returns
// false if the pair does not span a plane.
bool orthonormalize(Eigen::VectorXd& a, Eigen::VectorXd& b) {
  double na = a.norm();
  if (na < 1e-150) return false;
  a /= na;
  b -= a.dot(b) * a;
  double nb = b.norm();
  if (nb < 1e-12) return false;
  b /= nb;
  return true;
}

}  // namespace

ZeroPlaneDefect DefectEvaluator::plane_defect(const Eigen::VectorXd& a,
                                              const Eigen::VectorXd& b) const {
  ZeroPlaneDefect d;
  d.raw = defect_from_coeffs(*this, a, b);
  d.gram_det = a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2);
  Eigen::VectorXd u = a, v = b;
  if (!orthonormalize(u, v)) {
    d.dependent = true;
    d.value = kInf;
    return d;
  }
  d.value = defect_from_coeffs(*this, u, v);
  return d;
}

double DefectEvaluator::objective(const Eigen::VectorXd& ab) const {
  Eigen::VectorXd a = ab.head(15), b = ab.tail(15);
  if (!orthonormalize(a, b)) return kInf;
  return defect_from_coeffs(*this, a, b);
}

Eigen::VectorXd DefectEvaluator::residuals(const Eigen::VectorXd& a,
                                           const Eigen::VectorXd& b) const {
  Eigen::VectorXd r(105);
  std::array<HMat, 5> br = defect_brackets(*this, a, b);
  for (int i = 0; i < 5; ++i) flatten_antihermitian(br[i], r.data() + 21 * i);
  return r;
}

namespace {

// Levenberg refinement of an orthonormalized iterate. The defect is a sum of
// squared bracket norms, so near an exact zero plane the residual vector is
// asymptotically linear in the iterate and a damped Gauss-Newton step
// converges quadratically where plain gradient descent crawls through the
// ill-conditioned quadratic basin. Deterministic; only accepts decreases.
void polish(const DefectEvaluator& ev, const MetricConfig& cfg, Eigen::VectorXd& x, double& f) {
  Eigen::VectorXd r = ev.residuals(x.head(15), x.tail(15));
  double raw = r.squaredNorm();
  double lambda = 1e-3;
  Eigen::MatrixXd J(105, 30);
  for (int it = 0; it < cfg.polish_iters && raw > 1e-32; ++it) {
    for (int i = 0; i < 30; ++i) {
      Eigen::VectorXd xp = x;
      xp(i) += cfg.polish_h;
      J.col(i) = (ev.residuals(xp.head(15), xp.tail(15)) - r) / cfg.polish_h;
    }
    Eigen::MatrixXd jtj = J.transpose() * J;
    Eigen::VectorXd jtr = J.transpose() * r;
    bool stepped = false;
    for (int attempt = 0; attempt < 12 && !stepped; ++attempt) {
      Eigen::MatrixXd m = jtj;
      m.diagonal() += lambda * (jtj.diagonal().array() + 1e-12).matrix();
      Eigen::VectorXd xn = x + m.ldlt().solve(-jtr);
      Eigen::VectorXd an = xn.head(15), bn = xn.tail(15);
      if (orthonormalize(an, bn)) {
        xn.head(15) = an;
        xn.tail(15) = bn;
        Eigen::VectorXd rn = ev.residuals(an, bn);
        double rawn = rn.squaredNorm();
        if (std::isfinite(rawn) && rawn < raw) {
          x = xn;
          r = rn;
          raw = rawn;
          lambda = std::max(lambda * 0.1, 1e-12);
          stepped = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!stepped) break;
  }
  f = std::min(f, raw);
}

}  // namespace

MinDefectResult min_defect(const DefectEvaluator& ev, const MetricConfig& cfg) {
  MinDefectResult best;
  best.value = kInf;
  Eigen::VectorXd best_ab;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (restart + 1)));
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    Eigen::VectorXd x(30);
    double f = kInf;
    for (int tries = 0; tries < 100 && !std::isfinite(f); ++tries) {
      for (int i = 0; i < 30; ++i) x(i) = uni(rng);
      f = ev.objective(x);
    }
    if (!std::isfinite(f)) continue;

    // Keep the iterate on the orthonormal-pair slice; the objective only
    // depends on the spanned plane.
    {
      Eigen::VectorXd a = x.head(15), b = x.tail(15);
      orthonormalize(a, b);
      x.head(15) = a;
      x.tail(15) = b;
      f = ev.objective(x);
    }

    double alpha = 0.1;
    bool converged = false;
    double f_block = f;
    Eigen::VectorXd g(30), trial(30);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      if (f < cfg.stop_below) {
        converged = true;
        break;
      }
      for (int i = 0; i < 30; ++i) {
        trial = x;
        trial(i) = x(i) + cfg.grad_h;
        double fp = ev.objective(trial);
        trial(i) = x(i) - cfg.grad_h;
        double fm = ev.objective(trial);
        g(i) = (fp - fm) / (2.0 * cfg.grad_h);
      }
      if (g.norm() == 0.0) {
        converged = true;
        break;
      }
      bool accepted = false;
      double fnew = f;
      while (alpha > 1e-18) {
        trial = x - alpha * g;
        fnew = ev.objective(trial);
        if (std::isfinite(fnew) && fnew < f) {
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) {
        converged = true;
        break;
      }
      double decrease = f - fnew;
      Eigen::VectorXd a = trial.head(15), b = trial.tail(15);
      orthonormalize(a, b);
      x.head(15) = a;
      x.tail(15) = b;
      f = ev.objective(x);
      alpha = std::min(alpha * 2.0, 1e6);
      if (decrease < cfg.rel_tol * std::max(f, cfg.stop_below)) {
        converged = true;
        break;
      }
      // A flat tail makes per-step decreases hover above rel_tol forever;
      // hand such iterates to the Levenberg polish instead of grinding.
      if ((iter + 1) % cfg.stall_block == 0) {
        if (f_block - f < cfg.stall_rel * std::max(f, cfg.stop_below)) break;
        f_block = f;
      }
    }

    polish(ev, cfg, x, f);
    if (f < cfg.stop_below) converged = true;

    if (f < best.value) {
      best.value = f;
      best.converged = converged;
      best.restart = restart;
      best_ab = x;
    }
  }

  if (best.restart >= 0) {
    Eigen::VectorXd a = best_ab.head(15), b = best_ab.tail(15);
    ZeroPlaneDefect d = ev.plane_defect(a, b);
    orthonormalize(a, b);
    best.x_coeffs = a;
    best.y_coeffs = b;
    best.gram_det = d.gram_det;
    best.X = ev.frame.vector(a);
    best.Y = ev.frame.vector(b);
  }
  return best;
}

std::string classify_value(double v, const MetricConfig& cfg) {
  if (v >= cfg.positive_threshold) return "positive";
  if (v <= cfg.zero_threshold) return "zero";
  return "indeterminate";
}

ScanRow scan_point(const std::string& name, double theta, const MetricConfig& cfg) {
  DefectEvaluator ev(u_pair(name), theta);
  MinDefectResult r = min_defect(ev, cfg);
  ScanRow row;
  row.name = name;
  row.theta = theta;
  row.min_value = r.value;
  row.converged = r.converged;
  row.label = classify_value(r.value, cfg);
  return row;
}

std::vector<ScanRow> theta_scan(const std::string& name, const std::vector<double>& thetas,
                                const MetricConfig& cfg) {
  std::vector<ScanRow> rows;
  rows.reserve(thetas.size());
  for (double th : thetas) rows.push_back(scan_point(name, th, cfg));
  return rows;
}

}  // namespace biq
