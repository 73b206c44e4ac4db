#pragma once

// Effective-freeness certification for two-sided Sp(1)xSp(1) actions on Sp(3),
// reduced to exact lattice computations on the maximal torus.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "biq/intlin.hpp"
#include "biq/reps.hpp"

namespace biq {

// Free: every conjugacy coincidence on the torus happens at the identity
// lattice only (all twelve exponent evaluations integral).  EffectivelyFree:
// coincidences may also land on the common -I coset (all evaluations in
// Z + 1/2), so a finite central kernel acts trivially but the induced action
// is free.  NotFree: some coincidence is noncentral; witnesses record them.
enum class FreenessStatus { Free, EffectivelyFree, NotFree };

std::string to_string(FreenessStatus s);

// A torus point (x, y) in R^2/Z^2 whose conjugated images agree but are
// noncentral, together with the six per-row evaluations on each side.
struct Witness {
  Vec2R point;                      // (x, y), entries in [0,1)
  std::array<Rat, 3> left_eval;     // left rows . point, mod 1
  std::array<Rat, 3> right_eval;    // conjugated right rows . point, mod 1
  int pattern = 0;                  // index of the conjugacy pattern that failed
};

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::Free;
  std::vector<Witness> witnesses;   // sorted by point, deduplicated by point
};

// One way the images can coincide inside a maximal torus: a permutation of the
// three quaternionic coordinates combined with per-coordinate inversion.
struct ConjugacyPattern {
  std::array<int, 3> perm;    // sigma: row i of the right image moves to slot perm[i]
  std::array<int, 3> sign;    // +1 or -1 per coordinate
};

const std::vector<ConjugacyPattern>& conjugacy_patterns();  // all 48

// Exact certification: the action of `spec` on Sp(3) is effectively free iff
// for every conjugacy pattern, every torus solution of L - eps*sigma(R) lands
// in the central set (all six evaluations equal to a common c in {0, 1/2});
// it is free iff c = 0 always suffices.
FreenessVerdict certify(const BiquotientSpec& spec);

// All canonical candidate actions at the given homomorphism dimension:
// ordered pairs of Sp(1)^2 representations where both factors use both
// coordinates (otherwise a positive-dimensional subgroup acts with fixed
// points), canonicalized and deduplicated.
std::vector<BiquotientSpec> candidate_classes(int hdim = 3);

struct ClassifiedAction {
  BiquotientSpec spec;
  FreenessVerdict verdict;
};

struct Classification {
  std::vector<ClassifiedAction> free_actions;     // Free/EffectivelyFree, catalog order
  std::vector<ClassifiedAction> nonfree_actions;  // status NotFree
};

Classification classify_all(int hdim = 3);

// Sp(1)-pair analogue: left/right homomorphisms Sp(1) -> Sp(3) with torus
// images given by single-column exponent data; certified with the same
// machinery by adjoining a zero second column.
struct Sp1Pair {
  RepDecomposition left;
  RepDecomposition right;
  FreenessVerdict verdict;
};

std::vector<Sp1Pair> certify_sp1_pairs(int hdim = 3);

// Sampling cross-check of `certify`: walk an n x n grid of torus points,
// flag points where some pattern visually matches but centrality looks
// violated, then re-check every suspect exactly. `conflicts` counts suspects
// whose exact re-check contradicts the exact verdict (always 0 if both the
// sampler and the certifier are right).
struct OracleReport {
  std::uint64_t checked = 0;
  std::uint64_t suspects = 0;
  std::uint64_t conflicts = 0;
};

OracleReport sample_oracle(const BiquotientSpec& spec, int n, FreenessStatus expected);

}  // namespace biq
