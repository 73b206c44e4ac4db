#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "biq/catalog.hpp"
#include "biq/curvature.hpp"
#include "biq/hlinalg.hpp"
#include "util.hpp"

using namespace biq;

namespace {

Eigen::VectorXd coeffs_of(const HorizontalFrame& f, const HMat& x) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(f.basis.size()));
  for (std::size_t i = 0; i < f.basis.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = g0(x, f.basis[i]);
  return c;
}

Eigen::VectorXd random_coeffs(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) c(i) = u(rng);
  return c;
}

const std::vector<std::string>& embedded_names() {
  static const std::vector<std::string> names = {"N1", "N2", "N3", "N4",
                                                 "N5", "N6", "N7", "N8"};
  return names;
}

}  // namespace

TEST_CASE("metric reshaping is invertible and positive") {
  std::mt19937 rng(53);
  const HMat x = testutil::random_antihermitian(rng);
  for (double t : {0.5, 1.0, 2.0}) {
    const HMat y = metric_phi1_inv(metric_phi1(x, t), t);
    CHECK(max_abs_entry(y - x) < 1e-12);
    CHECK(g0(metric_phi1(x, t), x) > 0);
  }

  // Pure p-vectors pass through; pure k-vectors scale by t/(t+1).
  const KpSplit s = kp_split(x);
  const double t = 1.5;
  CHECK(max_abs_entry(metric_phi1(s.p_part, t) - s.p_part) < 1e-14);
  CHECK(max_abs_entry(metric_phi1(s.k_part, t) - (t / (t + 1.0)) * s.k_part) < 1e-14);
}

TEST_CASE("horizontal frames have dimension 15 and are orthonormal") {
  auto check_frame = [](const std::string& name, double theta) {
    const HorizontalFrame f = horizontal_frame(u_pair(name), theta);
    REQUIRE(f.basis.size() == 15);
    for (std::size_t a = 0; a < f.basis.size(); ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        const double expect = a == b ? 1.0 : 0.0;
        CHECK(std::abs(g0(f.basis[a], f.basis[b]) - expect) < 1e-12);
      }
      // Orthogonal to every vertical direction.
      for (const HMat& v : f.vertical) CHECK(std::abs(g0(f.basis[a], v)) < 1e-12);
    }
    // vector() reproduces the basis from unit coefficient vectors.
    Eigen::VectorXd e = Eigen::VectorXd::Zero(15);
    e(3) = 1.0;
    CHECK(max_abs_entry(f.vector(e) - f.basis[3]) < 1e-14);
  };
  for (const std::string& name : embedded_names()) check_frame(name, 0.5);
  check_frame("N2", 0.0);
}

TEST_CASE("frame verticals match the generator translates") {
  for (const std::string& name : embedded_names()) {
    const LieAlgebraPair gens = u_pair(name);
    for (double theta : {0.0, 0.5, 1.2}) {
      const HorizontalFrame f = horizontal_frame(gens, theta);
      const HMat p = rotation_point(theta);
      CHECK(max_abs_entry(f.p - p) < 1e-14);
      for (int m = 0; m < 6; ++m) {
        const HMat v = ad(p, gens.gens[m].first) - gens.gens[m].second;
        CHECK(max_abs_entry(f.vertical[m] - v) < 1e-12);
      }
    }
  }
}

TEST_CASE("u_pair rejects names without embedding data") {
  CHECK_THROWS_AS(u_pair("N9"), std::invalid_argument);
  CHECK_THROWS_AS(u_pair("M1"), std::invalid_argument);
  CHECK_THROWS_AS(u_pair("bogus"), std::invalid_argument);
}

TEST_CASE("horizontal vectors satisfy the diagonal constraints of the embeddings") {
  std::mt19937 rng(59);
  // For these six embeddings the vertical space pins the diagonal of any
  // horizontal vector: the last entry vanishes, and the first two are either
  // opposite (N1, N2, N3, N6) or the first vanishes too (N4, N5).
  auto check = [&](const std::string& name, double theta, bool opposite) {
    const HorizontalFrame f = horizontal_frame(u_pair(name), theta);
    for (int trial = 0; trial < 50; ++trial) {
      const HMat x = f.vector(random_coeffs(rng, 15));
      CHECK(qabs(x(2, 2)) < 1e-12);
      if (opposite)
        CHECK(qabs(x(0, 0) + x(1, 1)) < 1e-12);
      else
        CHECK(qabs(x(0, 0)) < 1e-12);
    }
  };
  for (const char* name : {"N1", "N2", "N3", "N6"}) check(name, 0.5, true);
  for (const char* name : {"N4", "N5"}) check(name, 0.0, false);
}

TEST_CASE("the constructed flat plane at the quarter turn") {
  const auto [x, y] = n4_zero_pair();

  // Shape: x lives in the lower-right block, y in the first row/column.
  CHECK(qabs(x(0, 0)) == 0);
  CHECK(qabs(x(0, 1)) == 0);
  CHECK(qabs(x(0, 2)) == 0);
  CHECK(qabs(y(1, 1)) == 0);
  CHECK(qabs(y(1, 2)) == 0);
  CHECK(qabs(y(2, 1)) == 0);
  CHECK(qabs(y(2, 2)) == 0);
  CHECK(is_antihermitian(x));
  CHECK(is_antihermitian(y));

  // The commutation conditions for a flat plane, in terms of the block
  // entries x4 = x(1,1), x5 = x(1,2), y2 = y(0,1), y3 = y(0,2):
  // y2*x5 = 0 and y2*x4 = y3*conj(x5).
  const Quaternion x4 = x(1, 1), x5 = x(1, 2), y2 = y(0, 1), y3 = y(0, 2);
  CHECK(qabs(y2 * x5) < 1e-15);
  CHECK(qabs(y2 * x4 - y3 * conj(x5)) < 1e-15);
  CHECK(max_abs_entry(bracket(x, y)) < 1e-15);

  const double theta = M_PI / 2;
  const DefectEvaluator ev(u_pair("N4"), theta);

  // Both vectors are horizontal at the quarter turn.
  for (const HMat& v : ev.frame.vertical) {
    CHECK(std::abs(g0(x, v)) < 1e-12);
    CHECK(std::abs(g0(y, v)) < 1e-12);
  }
  const Eigen::VectorXd cx = coeffs_of(ev.frame, x);
  const Eigen::VectorXd cy = coeffs_of(ev.frame, y);
  CHECK(max_abs_entry(ev.frame.vector(cx) - x) < 1e-12);
  CHECK(max_abs_entry(ev.frame.vector(cy) - y) < 1e-12);

  CHECK(defect_raw(ev.p, x, y) < 1e-24);
  const ZeroPlaneDefect d = ev.plane_defect(cx, cy);
  CHECK_FALSE(d.dependent);
  CHECK(d.raw < 1e-24);
  CHECK(d.value < 1e-24);

  // diag(0, i, 0) is horizontal here as well.
  HMat e11 = HMat::Zero();
  e11(1, 1) = Quaternion::i();
  for (const HMat& v : ev.frame.vertical) CHECK(std::abs(g0(e11, v)) < 1e-12);
}

TEST_CASE("plane defect degenerates on dependent pairs and is span-invariant") {
  std::mt19937 rng(61);
  const DefectEvaluator ev(u_pair("N1"), 0.5);
  const Eigen::VectorXd a = random_coeffs(rng, 15);
  const Eigen::VectorXd b = random_coeffs(rng, 15);

  CHECK(ev.plane_defect(a, a).dependent);
  CHECK(ev.plane_defect(a, Eigen::VectorXd(2.0 * a)).dependent);
  CHECK(ev.plane_defect(a, Eigen::VectorXd::Zero(15)).dependent);

  const ZeroPlaneDefect base = ev.plane_defect(a, b);
  REQUIRE_FALSE(base.dependent);
  CHECK(base.value > 0);
  CHECK(base.gram_det > 0);

  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    double m00 = u(rng), m01 = u(rng), m10 = u(rng), m11 = u(rng);
    if (std::abs(m00 * m11 - m01 * m10) < 0.1) continue;  // keep it invertible
    const Eigen::VectorXd a2 = m00 * a + m01 * b;
    const Eigen::VectorXd b2 = m10 * a + m11 * b;
    const ZeroPlaneDefect d2 = ev.plane_defect(a2, b2);
    REQUIRE_FALSE(d2.dependent);
    CHECK(d2.value == doctest::Approx(base.value).epsilon(1e-9));
  }

  // The defect is symmetric in the two arguments.
  const ZeroPlaneDefect swapped = ev.plane_defect(b, a);
  CHECK(swapped.value == doctest::Approx(base.value).epsilon(1e-12));
  CHECK(defect_raw(ev.p, ev.frame.vector(a), ev.frame.vector(b)) ==
        doctest::Approx(defect_raw(ev.p, ev.frame.vector(b), ev.frame.vector(a)))
            .epsilon(1e-12));
}

TEST_CASE("residual vector reproduces the raw defect") {
  std::mt19937 rng(67);
  const DefectEvaluator ev(u_pair("N4"), 0.5);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd a = random_coeffs(rng, 15);
    const Eigen::VectorXd b = random_coeffs(rng, 15);
    const ZeroPlaneDefect d = ev.plane_defect(a, b);
    const double r2 = ev.residuals(a, b).squaredNorm();
    CHECK(r2 == doctest::Approx(d.raw).epsilon(1e-12));
  }
}

TEST_CASE("objective is smooth: central differences are step-consistent") {
  std::mt19937 rng(71);
  const DefectEvaluator ev(u_pair("N2"), 0.5);
  Eigen::VectorXd x = random_coeffs(rng, 30);
  Eigen::VectorXd dir = random_coeffs(rng, 30);
  dir /= dir.norm();
  const double f0 = ev.objective(x);
  REQUIRE(std::isfinite(f0));
  auto dd = [&](double h) {
    return (ev.objective(x + h * dir) - ev.objective(x - h * dir)) / (2 * h);
  };
  const double d1 = dd(1e-3), d2 = dd(5e-4);
  CHECK(std::abs(d1 - d2) < 1e-3 * std::max(1.0, std::abs(d1)));
}

TEST_CASE("generic planes away from the flat locus have positive defect") {
  std::mt19937 rng(73);
  const DefectEvaluator ev(u_pair("N4"), M_PI / 6);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ZeroPlaneDefect d =
        ev.plane_defect(random_coeffs(rng, 15), random_coeffs(rng, 15));
    if (d.dependent) continue;
    ++checked;
    CHECK(d.value > 1e-8);
  }
  CHECK(checked > 0);
}

TEST_CASE("min_defect certifies the flat plane at the quarter turn") {
  MetricConfig cfg;
  cfg.restarts = 8;
  const DefectEvaluator ev(u_pair("N4"), M_PI / 2);
  const MinDefectResult r = min_defect(ev, cfg);
  CHECK(r.converged);
  CHECK(r.value <= 1e-10);
  CHECK(r.restart >= 0);
  // The reported minimizing pair is orthonormal and realizes the value.
  CHECK(std::abs(g0(r.X, r.X) - 1.0) < 1e-6);
  CHECK(std::abs(g0(r.Y, r.Y) - 1.0) < 1e-6);
  CHECK(std::abs(g0(r.X, r.Y)) < 1e-6);
  CHECK(defect_raw(ev.p, r.X, r.Y) == doctest::Approx(r.value).epsilon(1e-6));
}

TEST_CASE("classify_value thresholds") {
  const MetricConfig cfg;
  CHECK(classify_value(1.0, cfg) == "positive");
  CHECK(classify_value(2e-6, cfg) == "positive");
  CHECK(classify_value(1e-12, cfg) == "zero");
  CHECK(classify_value(0.0, cfg) == "zero");
  CHECK(classify_value(1e-8, cfg) == "indeterminate");
}

TEST_CASE("theta scans label the marked points") {
  MetricConfig cfg;
  cfg.restarts = 4;
  {
    const auto rows = theta_scan("N5", {0.3, 0.5, 0.7}, cfg);
    REQUIRE(rows.size() == 3);
    for (const ScanRow& r : rows) {
      CHECK(r.name == "N5");
      CHECK(r.label == "positive");
      CHECK(r.min_value > 1e-6);
    }
  }
  {
    const auto rows = theta_scan("N1", {0.0, 0.5}, cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].theta == 0.0);
    const bool known = rows[0].label == "positive" || rows[0].label == "zero" ||
                       rows[0].label == "indeterminate";
    CHECK(known);
    CHECK(rows[1].label == "positive");
  }
  CHECK_THROWS_AS(theta_scan("N9", {0.5}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(scan_point("M1", 0.5, cfg), std::invalid_argument);
}
