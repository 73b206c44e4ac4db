#include "biq/intlin.hpp"

#include <stdexcept>

namespace biq {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Euclidean quotient: a = q*b + r with 0 <= r < |b|.
Int euclid_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r < 0) q += (b > 0 ? -1 : 1);
  return q;
}

void swap_rows(IMat& M, Eigen::Index a, Eigen::Index b) { M.row(a).swap(M.row(b)); }
void swap_cols(IMat& M, Eigen::Index a, Eigen::Index b) { M.col(a).swap(M.col(b)); }

}  // namespace

SnfResult snf(const IMat& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  SnfResult s;
  s.U = IMat::Identity(m, m);
  s.V = IMat::Identity(n, n);
  s.D = A;
  IMat& D = s.D;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of D[t:, t:], lowest (row, col) on ties.
      Eigen::Index pi = -1, pj = -1;
      Int best;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          Int a = abs_int(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) { t = std::min(m, n); break; }  // submatrix is zero
      if (pi != t) { swap_rows(D, t, pi); swap_rows(s.U, t, pi); }
      if (pj != t) { swap_cols(D, t, pj); swap_cols(s.V, t, pj); }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = euclid_div(D(i, t), D(t, t));
        if (q != 0) { D.row(i) -= q * D.row(t); s.U.row(i) -= q * s.U.row(t); }
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = euclid_div(D(t, j), D(t, t));
        if (q != 0) { D.col(j) -= q * D.col(t); s.V.col(j) -= q * s.V.col(t); }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull a non-multiple into row t and keep reducing.
      bool fixed = true;
      for (Eigen::Index i = t + 1; i < m && fixed; ++i)
        for (Eigen::Index j = t + 1; j < n && fixed; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.row(t) += D.row(i);
            s.U.row(t) += s.U.row(i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t >= std::min(m, n)) break;
  }

  for (Eigen::Index t = 0; t < std::min(m, n); ++t)
    if (D(t, t) < 0) { D.row(t) = -D.row(t); s.U.row(t) = -s.U.row(t); }
  return s;
}

Int det_exact(const IMat& A) {
  const Eigen::Index n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("det_exact: square matrix required");
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  if (n == 2) return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
  Int det = 0;
  int sign = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (A(0, j) != 0) {
      IMat minor(n - 1, n - 1);
      for (Eigen::Index r = 1; r < n; ++r) {
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < n; ++c)
          if (c != j) minor(r - 1, cc++) = A(r, c);
      }
      det += sign * A(0, j) * det_exact(minor);
    }
    sign = -sign;
  }
  return det;
}

Rat mod1(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);  // den > 0 (canonical)
  Int q = num / den, rem = num % den;
  if (rem < 0) rem += den;
  return Rat(rem, den);
}

bool lex_less(const Vec2R& a, const Vec2R& b) {
  if (a(0) != b(0)) return a(0) < b(0);
  return a(1) < b(1);
}

TorusSubgroup solve_torus(const IMat& M) {
  if (M.cols() != 2) throw std::invalid_argument("solve_torus: matrix must have 2 columns");
  SnfResult s = snf(M);
  const Eigen::Index k = std::min<Eigen::Index>(M.rows(), 2);

  TorusSubgroup H;
  Int d[2] = {0, 0};
  for (Eigen::Index v = 0; v < 2; ++v) {
    if (v < k) d[v] = s.D(v, v);
    H.divisors.push_back(d[v]);
    if (d[v] == 0) {
      Vec2R dir;
      dir(0) = Rat(s.V(0, v));
      dir(1) = Rat(s.V(1, v));
      H.free_directions.push_back(dir);
    }
  }

  Int n0 = d[0] == 0 ? Int(1) : d[0];
  Int n1 = d[1] == 0 ? Int(1) : d[1];
  for (Int t0 = 0; t0 < n0; ++t0)
    for (Int t1 = 0; t1 < n1; ++t1) {
      Rat y0 = d[0] == 0 ? Rat(0) : Rat(t0, d[0]);
      Rat y1 = d[1] == 0 ? Rat(0) : Rat(t1, d[1]);
      Vec2R x;
      x(0) = mod1(Rat(s.V(0, 0)) * y0 + Rat(s.V(0, 1)) * y1);
      x(1) = mod1(Rat(s.V(1, 0)) * y0 + Rat(s.V(1, 1)) * y1);
      H.torsion_reps.push_back(x);
    }
  return H;
}

}  // namespace biq
