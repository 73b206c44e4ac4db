#pragma once

#include <string>
#include <vector>

#include "biq/hlinalg.hpp"
#include "biq/intlin.hpp"

namespace biq {

// Irreducible representation phi_i x phi_j of Sp(1) x Sp(1); complex dimension
// (i+1)(j+1), orthogonal type iff i+j is even (else symplectic).
struct Irrep {
  int i = 0, j = 0;
  int complex_dim() const { return (i + 1) * (j + 1); }
  bool orthogonal() const { return (i + j) % 2 == 0; }
  friend auto operator<=>(const Irrep&, const Irrep&) = default;
};

// Multiset of irreps; a quaternionic representation decomposition.
struct RepDecomposition {
  std::vector<std::pair<Irrep, int>> terms;  // (irrep, multiplicity), sorted by irrep

  int complex_dim() const;
  // A sum of irreps is symplectic iff every orthogonal-type summand has even
  // multiplicity.
  bool symplectic() const;
  bool trivial() const;
  bool uses_coord(int coord) const;                // 0 = z, 1 = w
  std::string name(bool two_vars = false) const;   // e.g. "4φ0+φ1", "2φ00+φ12"
};

// All 2n-dimensional complex symplectic representations of Sp(1) (hdim = n,
// quaternionic dimension). Entries use only the first index (j = 0).
std::vector<RepDecomposition> enumerate_sp1(int hdim);

// Same for Sp(1) x Sp(1).
std::vector<RepDecomposition> enumerate_sp1xsp1(int hdim);

// Exponent matrix of the maximal-torus image: one row (a, b) per quaternionic
// coordinate, i.e. one representative per +/- pair of weights, normalized so
// the first nonzero entry is positive. Rows sorted descending.
using TorusImage = Eigen::Matrix<int, 3, 2>;
TorusImage torus_image(const RepDecomposition& rep);

enum class FactorType { Sp1, SO3 };
inline const char* to_string(FactorType t) { return t == FactorType::Sp1 ? "Sp1" : "SO3"; }

// A biquotient datum: exponent matrices of both homomorphism images plus the
// effective type of each Sp(1) coordinate. A coordinate has SO(3) type when it
// occurs only with even exponents across both factors (and occurs at all).
struct BiquotientSpec {
  std::string name;
  TorusImage left = TorusImage::Zero();
  TorusImage right = TorusImage::Zero();
  FactorType left_type = FactorType::Sp1;   // z coordinate
  FactorType right_type = FactorType::Sp1;  // w coordinate
};

BiquotientSpec make_spec(std::string name, const RepDecomposition& f1, const RepDecomposition& f2);
BiquotientSpec make_spec(std::string name, const TorusImage& left, const TorusImage& right);

bool uses_both_coords(const BiquotientSpec& s);

// Canonical form under the full symmetry group: factor swap, z <-> w relabel,
// per-coordinate conjugation (column negation), and per-factor Weyl moves
// (row reorder, row sign flips). Deterministic and idempotent; equality of
// canonical forms is the deduplication criterion.
BiquotientSpec canonicalize(const BiquotientSpec& s);

// Flattened comparison key (12 exponents + 2 types) of the spec as-is.
std::array<int, 14> spec_key(const BiquotientSpec& s);

// Lie algebra map of phi_3: sp(1) -> sp(2), the quaternionic form of the
// 4-dimensional irreducible representation of Sp(1).
HMat2 phi3_algebra(const Quaternion& t);

}  // namespace biq
