#pragma once

// Shared helpers for the unit tests: random equivalence moves on specs,
// independent conjugacy checks at rational torus points, and random
// anti-Hermitian matrices.

#include <algorithm>
#include <array>
#include <random>

#include "biq/freeness.hpp"
#include "biq/hlinalg.hpp"
#include "biq/intlin.hpp"
#include "biq/reps.hpp"

namespace testutil {

// One uniformly chosen generator of the equivalence group acting on specs:
// factor swap, coordinate swap, coordinate conjugation, and the per-factor
// Weyl moves (row permutation, row sign flip).
inline biq::BiquotientSpec random_symmetry_move(const biq::BiquotientSpec& s,
                                                std::mt19937& rng) {
  biq::BiquotientSpec r = s;
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:  // factor swap (f1, f2) -> (f2, f1)
      std::swap(r.left, r.right);
      break;
    case 1: {  // coordinate swap z <-> w
      r.left.col(0).swap(r.left.col(1));
      r.right.col(0).swap(r.right.col(1));
      std::swap(r.left_type, r.right_type);
      break;
    }
    case 2: {  // conjugate one coordinate globally
      int c = std::uniform_int_distribution<int>(0, 1)(rng);
      r.left.col(c) = -r.left.col(c);
      r.right.col(c) = -r.right.col(c);
      break;
    }
    case 3: {  // permute the rows of one factor
      biq::TorusImage& m = std::uniform_int_distribution<int>(0, 1)(rng) ? r.left : r.right;
      std::array<int, 3> p{0, 1, 2};
      std::shuffle(p.begin(), p.end(), rng);
      biq::TorusImage t;
      for (int i = 0; i < 3; ++i) t.row(i) = m.row(p[i]);
      m = t;
      break;
    }
    case 4: {  // flip the sign of one row of one factor
      biq::TorusImage& m = std::uniform_int_distribution<int>(0, 1)(rng) ? r.left : r.right;
      int i = std::uniform_int_distribution<int>(0, 2)(rng);
      m.row(i) = -m.row(i);
      break;
    }
    default:
      break;  // identity move
  }
  return r;
}

inline biq::BiquotientSpec random_symmetry_word(const biq::BiquotientSpec& s,
                                                std::mt19937& rng, int length = 6) {
  biq::BiquotientSpec r = s;
  for (int i = 0; i < length; ++i) r = random_symmetry_move(r, rng);
  return r;
}

// Fold a torus angle into [0, 1/2]: t and -t parametrize conjugate entries.
inline biq::Rat fold(const biq::Rat& t) {
  biq::Rat u = biq::mod1(t);
  return std::min(u, biq::Rat(1) - u);
}

inline std::array<biq::Rat, 3> row_evals(const biq::TorusImage& m, const biq::Vec2R& x) {
  std::array<biq::Rat, 3> e;
  for (int r = 0; r < 3; ++r)
    e[r] = biq::mod1(biq::Rat(m(r, 0)) * x(0) + biq::Rat(m(r, 1)) * x(1));
  return e;
}

// Exact, certifier-independent check that the two images at x are conjugate
// in Sp(3): equal angle multisets after folding by inversion.
inline bool conjugate_at(const biq::BiquotientSpec& s, const biq::Vec2R& x) {
  std::array<biq::Rat, 3> l = row_evals(s.left, x), r = row_evals(s.right, x);
  for (auto& v : l) v = fold(v);
  for (auto& v : r) v = fold(v);
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return l == r;
}

// True when both images at x are the same central element (all six angles
// equal to a common c in {0, 1/2}).
inline bool central_at(const biq::BiquotientSpec& s, const biq::Vec2R& x) {
  std::array<biq::Rat, 3> l = row_evals(s.left, x), r = row_evals(s.right, x);
  const biq::Rat c = l[0];
  if (c != 0 && c != biq::Rat(1, 2)) return false;
  for (const auto& v : l)
    if (v != c) return false;
  for (const auto& v : r)
    if (v != c) return false;
  return true;
}

inline bool violation_at(const biq::BiquotientSpec& s, const biq::Vec2R& x) {
  return conjugate_at(s, x) && !central_at(s, x);
}

// Random anti-Hermitian 3x3 with coefficients uniform in [-1, 1] over the
// fixed 21-element basis.
inline biq::HMat random_antihermitian(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  biq::HMat m = biq::HMat::Zero();
  for (const biq::HMat& b : biq::sp3_basis()) m += u(rng) * b;
  return m;
}

}  // namespace testutil
