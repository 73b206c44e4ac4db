#include "biq/freeness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "biq/catalog.hpp"

namespace biq {

std::string to_string(FreenessStatus s) {
  switch (s) {
    case FreenessStatus::Free: return "Free";
    case FreenessStatus::EffectivelyFree: return "EffectivelyFree";
    default: return "NotFree";
  }
}

const std::vector<ConjugacyPattern>& conjugacy_patterns() {
  static const std::vector<ConjugacyPattern> pats = [] {
    std::vector<ConjugacyPattern> v;
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask)
        v.push_back({p, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1}});
    } while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return pats;
}

namespace {

struct Evals {
  std::array<Rat, 3> left, right;
};

Evals evaluate(const BiquotientSpec& s, const Vec2R& x) {
  Evals e;
  for (int r = 0; r < 3; ++r) {
    e.left[r] = mod1(Rat(s.left(r, 0)) * x(0) + Rat(s.left(r, 1)) * x(1));
    e.right[r] = mod1(Rat(s.right(r, 0)) * x(0) + Rat(s.right(r, 1)) * x(1));
  }
  return e;
}

// The pair of images at x acts trivially iff both are the same central element,
// i.e. all six evaluations equal a common c in {0, 1/2}.  Returns 0 for c = 0,
// 1 for c = 1/2, and -1 when the point is not central.
int central_class(const Evals& e) {
  const Rat& c = e.left[0];
  if (c != 0 && c != Rat(1, 2)) return -1;
  for (const Rat& v : e.left)
    if (v != c) return -1;
  for (const Rat& v : e.right)
    if (v != c) return -1;
  return c == 0 ? 0 : 1;
}

bool central(const Evals& e) { return central_class(e) >= 0; }

IMat pattern_matrix(const BiquotientSpec& s, const ConjugacyPattern& pat) {
  IMat M(3, 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c)
      M(r, c) = Int(s.left(r, c)) - Int(pat.sign[r]) * Int(s.right(pat.perm[r], c));
  return M;
}

// A whole line {t*v} of solutions stays central only if every exponent row
// kills the direction exactly.
bool line_central(const BiquotientSpec& s, const Vec2R& v) {
  for (int r = 0; r < 3; ++r) {
    if (Rat(s.left(r, 0)) * v(0) + Rat(s.left(r, 1)) * v(1) != 0) return false;
    if (Rat(s.right(r, 0)) * v(0) + Rat(s.right(r, 1)) * v(1) != 0) return false;
  }
  return true;
}

Witness make_witness(const BiquotientSpec& s, const Vec2R& x, int pattern) {
  Witness w;
  w.point = x;
  Evals e = evaluate(s, x);
  w.left_eval = e.left;
  w.right_eval = e.right;
  w.pattern = pattern;
  return w;
}

}  // namespace

FreenessVerdict certify(const BiquotientSpec& spec) {
  FreenessVerdict out;
  bool needs_half = false;
  const auto& pats = conjugacy_patterns();
  for (std::size_t pi = 0; pi < pats.size(); ++pi) {
    TorusSubgroup H = solve_torus(pattern_matrix(spec, pats[pi]));
    for (const Vec2R& v : H.free_directions) {
      if (line_central(spec, v)) continue;
      out.status = FreenessStatus::NotFree;
      // Smallest denominator q >= 2 putting v/q outside the central set.
      bool placed = false;
      for (int q = 2; q <= 1000 && !placed; ++q) {
        Vec2R x;
        x << mod1(v(0) / q), mod1(v(1) / q);
        if (!central(evaluate(spec, x))) {
          out.witnesses.push_back(make_witness(spec, x, static_cast<int>(pi)));
          placed = true;
        }
      }
      if (!placed) throw std::logic_error("no witness found on noncentral line");
    }
    for (const Vec2R& t : H.torsion_reps) {
      int cls = central_class(evaluate(spec, t));
      if (cls == 0) continue;
      if (cls == 1) {
        needs_half = true;
        continue;
      }
      out.status = FreenessStatus::NotFree;
      out.witnesses.push_back(make_witness(spec, t, static_cast<int>(pi)));
    }
  }
  if (out.status != FreenessStatus::NotFree && needs_half)
    out.status = FreenessStatus::EffectivelyFree;
  auto cmp = [](const Witness& a, const Witness& b) {
    if (a.point(0) != b.point(0)) return a.point(0) < b.point(0);
    if (a.point(1) != b.point(1)) return a.point(1) < b.point(1);
    return a.pattern < b.pattern;
  };
  std::sort(out.witnesses.begin(), out.witnesses.end(), cmp);
  auto eq = [](const Witness& a, const Witness& b) {
    return a.point(0) == b.point(0) && a.point(1) == b.point(1);
  };
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end(), eq),
                      out.witnesses.end());
  return out;
}

std::vector<BiquotientSpec> candidate_classes(int hdim) {
  auto reps = enumerate_sp1xsp1(hdim);
  std::map<std::array<int, 14>, BiquotientSpec> seen;
  for (const auto& l : reps) {
    for (const auto& r : reps) {
      BiquotientSpec s = make_spec("", l, r);
      // A coordinate missing from both factors would act trivially through a
      // positive-dimensional kernel; such pairs define lower-rank quotients.
      if (!uses_both_coords(s)) continue;
      BiquotientSpec c = canonicalize(s);
      seen.emplace(spec_key(c), c);
    }
  }
  std::vector<BiquotientSpec> out;
  out.reserve(seen.size());
  for (auto& [key, s] : seen) out.push_back(s);
  return out;
}

Classification classify_all(int hdim) {
  std::map<std::array<int, 14>, std::pair<std::string, int>> names;
  {
    int rank = 0;
    for (const CatalogEntry& e : catalog())
      names[spec_key(canonicalize(e.spec))] = {e.name, rank++};
  }
  Classification out;
  std::vector<std::pair<int, ClassifiedAction>> free_ranked;
  for (const BiquotientSpec& s : candidate_classes(hdim)) {
    ClassifiedAction a{s, certify(s)};
    auto it = names.find(spec_key(s));
    int rank = 1 << 20;
    if (it != names.end()) {
      a.spec.name = it->second.first;
      rank = it->second.second;
    }
    if (a.verdict.status != FreenessStatus::NotFree)
      free_ranked.emplace_back(rank, std::move(a));
    else
      out.nonfree_actions.push_back(std::move(a));
  }
  std::stable_sort(free_ranked.begin(), free_ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rank, a] : free_ranked) out.free_actions.push_back(std::move(a));
  return out;
}

std::vector<Sp1Pair> certify_sp1_pairs(int hdim) {
  std::vector<RepDecomposition> homs;
  for (const auto& h : enumerate_sp1(hdim))
    if (!h.trivial()) homs.push_back(h);
  std::vector<Sp1Pair> out;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = i + 1; j < homs.size(); ++j) {
      BiquotientSpec s = make_spec(homs[i].name() + " | " + homs[j].name(),
                                   torus_image(homs[i]), torus_image(homs[j]));
      out.push_back({homs[i], homs[j], certify(s)});
    }
  }
  return out;
}

namespace {

inline double fold_unit(double t) {
  double u = t - std::floor(t);
  return std::min(u, 1.0 - u);
}

inline void sort3(double* a) {
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  if (a[1] > a[2]) std::swap(a[1], a[2]);
  if (a[0] > a[1]) std::swap(a[0], a[1]);
}

Rat fold_unit(const Rat& t) {
  Rat u = mod1(t);
  return std::min(u, Rat(1) - u);
}

}  // namespace

OracleReport sample_oracle(const BiquotientSpec& spec, int n, FreenessStatus expected) {
  OracleReport rep;
  const double tol = 1.0 / (4.0 * n);
  long long L[3][2], R[3][2];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) {
      L[r][c] = spec.left(r, c);
      R[r][c] = spec.right(r, c);
    }
  bool violation = false;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ++rep.checked;
      double fl[3], fr[3];
      for (int r = 0; r < 3; ++r) {
        fl[r] = fold_unit(double(L[r][0] * a + L[r][1] * b) / n);
        fr[r] = fold_unit(double(R[r][0] * a + R[r][1] * b) / n);
      }
      sort3(fl);
      sort3(fr);
      // Conjugate torus elements = equal angle multisets after folding.
      bool conj = true;
      for (int r = 0; r < 3 && conj; ++r)
        if (std::abs(fl[r] - fr[r]) > tol) conj = false;
      if (!conj) continue;
      bool near0 = true, nearh = true;
      for (int r = 0; r < 3; ++r) {
        near0 = near0 && fl[r] <= tol && fr[r] <= tol;
        nearh = nearh && std::abs(fl[r] - 0.5) <= tol && std::abs(fr[r] - 0.5) <= tol;
      }
      if (near0 || nearh) continue;
      ++rep.suspects;
      // Exact re-check of the suspect point.
      Vec2R x;
      x << Rat(a, n), Rat(b, n);
      std::array<Rat, 3> el, er;
      Evals ev = evaluate(spec, x);
      for (int r = 0; r < 3; ++r) {
        el[r] = fold_unit(ev.left[r]);
        er[r] = fold_unit(ev.right[r]);
      }
      std::sort(el.begin(), el.end());
      std::sort(er.begin(), er.end());
      if (el != er) continue;      // screen false positive: not conjugate
      if (central(ev)) continue;   // screen false positive: central after all
      violation = true;
      if (expected != FreenessStatus::NotFree) ++rep.conflicts;
    }
  }
  if (expected == FreenessStatus::NotFree && !violation) ++rep.conflicts;
  return rep;
}

}  // namespace biq
