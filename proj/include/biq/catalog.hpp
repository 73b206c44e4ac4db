#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biq/reps.hpp"

namespace biq {

// One named effectively free action of Sp(1) x Sp(1) on Sp(3).
struct CatalogEntry {
  std::string name;        // M1..M4, N1..N13, O1, O2
  BiquotientSpec spec;     // exponent data (catalog parametrization, not canonical)
  std::string left_desc;   // subgroup notation for the embedding tables
  std::string right_desc;
  std::string left_torus;  // torus-image notation
  std::string right_torus;
  bool homogeneous = false;
};

// The 19 named classes in catalog order (M1..M4, N1..N13, O1, O2).
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(const std::string& name);

// Lie algebra embedding u = span of (u1, u2) generator pairs for the actions
// whose curvature is scanned (N1..N8): generators are (r = i, j, k; s = 0) then
// (r = 0; s = i, j, k) for the (r, s) parametrization of sp(1) + sp(1).
struct LieAlgebraPair {
  std::string name;
  std::array<std::pair<HMat, HMat>, 6> gens;
};

LieAlgebraPair u_pair(const std::string& name);

// Actions rejected in the classification, kept as regression inputs:
// each is (left, right) exponent data with a known non-free torus point.
struct RejectedExample {
  TorusImage left, right;
  Vec2R witness;  // known failing point (quarter/eighth/tenth turns)
};
const std::vector<RejectedExample>& rejected_examples();

// Explicit zero-curvature plane for N4 at the rotation point theta = pi/2.
std::pair<HMat, HMat> n4_zero_pair();

}  // namespace biq
