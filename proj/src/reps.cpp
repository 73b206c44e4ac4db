#include "biq/reps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace biq {

int RepDecomposition::complex_dim() const {
  int d = 0;
  for (const auto& [ir, m] : terms) d += m * ir.complex_dim();
  return d;
}

bool RepDecomposition::symplectic() const {
  for (const auto& [ir, m] : terms)
    if (ir.orthogonal() && m % 2 != 0) return false;
  return true;
}

bool RepDecomposition::trivial() const {
  for (const auto& [ir, m] : terms)
    if (m > 0 && (ir.i != 0 || ir.j != 0)) return false;
  return true;
}

bool RepDecomposition::uses_coord(int coord) const {
  for (const auto& [ir, m] : terms)
    if (m > 0 && (coord == 0 ? ir.i : ir.j) != 0) return true;
  return false;
}

std::string RepDecomposition::name(bool two_vars) const {
  std::string out;
  for (const auto& [ir, m] : terms) {
    if (m == 0) continue;
    if (!out.empty()) out += "+";
    if (m > 1) out += std::to_string(m);
    out += "φ";
    out += std::to_string(ir.i);
    if (two_vars) out += std::to_string(ir.j);
  }
  return out.empty() ? "0" : out;
}

namespace {

void enumerate_rec(const std::vector<Irrep>& irreps, size_t idx, int remaining,
                   std::vector<std::pair<Irrep, int>>& acc, std::vector<RepDecomposition>& out) {
  if (remaining == 0) {
    RepDecomposition d;
    for (const auto& t : acc)
      if (t.second > 0) d.terms.push_back(t);
    std::sort(d.terms.begin(), d.terms.end());
    out.push_back(std::move(d));
    return;
  }
  if (idx == irreps.size()) return;
  const Irrep& ir = irreps[idx];
  int dim = ir.complex_dim();
  int step = ir.orthogonal() ? 2 : 1;
  for (int m = 0; m * dim <= remaining; m += step) {
    acc.push_back({ir, m});
    enumerate_rec(irreps, idx + 1, remaining - m * dim, acc, out);
    acc.pop_back();
  }
}

std::vector<RepDecomposition> enumerate_generic(int hdim, bool two_vars) {
  std::vector<Irrep> irreps;
  int target = 2 * hdim;
  for (int i = 0; i <= target - 1; ++i)
    for (int j = 0; j <= (two_vars ? target - 1 : 0); ++j)
      if ((i + 1) * (j + 1) <= target) irreps.push_back({i, j});
  std::sort(irreps.begin(), irreps.end());
  std::vector<RepDecomposition> out;
  std::vector<std::pair<Irrep, int>> acc;
  enumerate_rec(irreps, 0, target, acc, out);
  std::sort(out.begin(), out.end(), [](const RepDecomposition& a, const RepDecomposition& b) {
    return a.terms < b.terms;
  });
  return out;
}

}  // namespace

std::vector<RepDecomposition> enumerate_sp1(int hdim) { return enumerate_generic(hdim, false); }
std::vector<RepDecomposition> enumerate_sp1xsp1(int hdim) { return enumerate_generic(hdim, true); }

TorusImage torus_image(const RepDecomposition& rep) {
  if (rep.complex_dim() != 6 || !rep.symplectic())
    throw std::invalid_argument("torus_image: need a 6-dimensional symplectic decomposition");
  // Weight multiset of the complex representation; symmetric under negation.
  std::map<std::pair<int, int>, int> weights;
  for (const auto& [ir, m] : rep.terms)
    for (int a = ir.i; a >= -ir.i; a -= 2)
      for (int b = ir.j; b >= -ir.j; b -= 2) weights[{a, b}] += m;

  std::vector<std::pair<int, int>> rows;
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    auto [w, count] = *it;
    if (count == 0) continue;
    auto [a, b] = w;
    if (a == 0 && b == 0) {
      if (count % 2 != 0) throw std::logic_error("torus_image: odd zero-weight count");
      for (int r = 0; r < count / 2; ++r) rows.push_back({0, 0});
      count = 0;
    } else if (a > 0 || (a == 0 && b > 0)) {
      auto neg = weights.find({-a, -b});
      if (neg == weights.end() || neg->second != count)
        throw std::logic_error("torus_image: weights not self-dual");
      for (int r = 0; r < count; ++r) rows.push_back({a, b});
      neg->second = 0;
      count = 0;
    }
    it->second = count;
  }
  if (rows.size() != 3) throw std::logic_error("torus_image: expected 3 rows");
  std::sort(rows.begin(), rows.end(), std::greater<>());
  TorusImage img;
  for (int r = 0; r < 3; ++r) {
    img(r, 0) = rows[r].first;
    img(r, 1) = rows[r].second;
  }
  return img;
}

namespace {

FactorType column_type(const TorusImage& L, const TorusImage& R, int col) {
  bool any = false, all_even = true;
  for (int r = 0; r < 3; ++r) {
    for (int v : {L(r, col), R(r, col)}) {
      if (v != 0) any = true;
      if (v % 2 != 0) all_even = false;
    }
  }
  return (any && all_even) ? FactorType::SO3 : FactorType::Sp1;
}

}  // namespace

BiquotientSpec make_spec(std::string name, const TorusImage& left, const TorusImage& right) {
  BiquotientSpec s;
  s.name = std::move(name);
  s.left = left;
  s.right = right;
  s.left_type = column_type(left, right, 0);
  s.right_type = column_type(left, right, 1);
  return s;
}

BiquotientSpec make_spec(std::string name, const RepDecomposition& f1, const RepDecomposition& f2) {
  return make_spec(std::move(name), torus_image(f1), torus_image(f2));
}

bool uses_both_coords(const BiquotientSpec& s) {
  for (int col = 0; col < 2; ++col) {
    bool any = false;
    for (int r = 0; r < 3; ++r)
      if (s.left(r, col) != 0 || s.right(r, col) != 0) any = true;
    if (!any) return false;
  }
  return true;
}

std::array<int, 14> spec_key(const BiquotientSpec& s) {
  std::array<int, 14> k;
  int idx = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) k[idx++] = s.left(r, c);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) k[idx++] = s.right(r, c);
  k[12] = static_cast<int>(s.left_type);
  k[13] = static_cast<int>(s.right_type);
  return k;
}

namespace {

TorusImage weyl_canonical(TorusImage m) {
  std::array<std::array<int, 2>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    int a = m(r, 0), b = m(r, 1);
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
    rows[r] = {a, b};
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::array<int, 4>{std::abs(x[0]), std::abs(x[1]), x[0], x[1]} <
           std::array<int, 4>{std::abs(y[0]), std::abs(y[1]), y[0], y[1]};
  });
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = rows[r][0];
    m(r, 1) = rows[r][1];
  }
  return m;
}

}  // namespace

BiquotientSpec canonicalize(const BiquotientSpec& s) {
  BiquotientSpec best;
  std::array<int, 14> best_key;
  bool first = true;
  for (int swap_factor = 0; swap_factor < 2; ++swap_factor)
    for (int swap_zw = 0; swap_zw < 2; ++swap_zw)
      for (int conj_z = 0; conj_z < 2; ++conj_z)
        for (int conj_w = 0; conj_w < 2; ++conj_w) {
          TorusImage L = swap_factor ? s.right : s.left;
          TorusImage R = swap_factor ? s.left : s.right;
          FactorType tz = s.left_type, tw = s.right_type;
          if (swap_zw) {
            L.col(0).swap(L.col(1));
            R.col(0).swap(R.col(1));
            std::swap(tz, tw);
          }
          if (conj_z) { L.col(0) = -L.col(0); R.col(0) = -R.col(0); }
          if (conj_w) { L.col(1) = -L.col(1); R.col(1) = -R.col(1); }
          BiquotientSpec cand;
          cand.name = s.name;
          cand.left = weyl_canonical(L);
          cand.right = weyl_canonical(R);
          cand.left_type = tz;
          cand.right_type = tw;
          auto key = spec_key(cand);
          if (first || key < best_key) {
            best = cand;
            best_key = key;
            first = false;
          }
        }
  return best;
}

HMat2 phi3_algebra(const Quaternion& t) {
  const double s3 = std::sqrt(3.0);
  Quaternion ti{0, t.x, 0, 0}, tj{0, 0, t.y, 0}, tk{0, 0, 0, t.z};
  HMat2 m;
  m(0, 0) = 3.0 * ti;
  m(0, 1) = s3 * (tj + tk);
  m(1, 0) = s3 * (tj + tk);
  m(1, 1) = 2.0 * (tk - tj) - ti;
  return m;
}

}  // namespace biq
