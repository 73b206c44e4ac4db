#include "biq/catalog.hpp"

#include <stdexcept>

namespace biq {

namespace {

TorusImage rows(std::array<std::array<int, 2>, 3> r) {
  TorusImage m;
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = r[i][0];
    m(i, 1) = r[i][1];
  }
  return m;
}

CatalogEntry entry(std::string name, std::array<std::array<int, 2>, 3> left,
                   std::array<std::array<int, 2>, 3> right, std::string ldesc, std::string rdesc,
                   std::string ltor, std::string rtor) {
  CatalogEntry e;
  e.name = std::move(name);
  e.spec = make_spec(e.name, rows(left), rows(right));
  e.left_desc = std::move(ldesc);
  e.right_desc = std::move(rdesc);
  e.left_torus = std::move(ltor);
  e.right_torus = std::move(rtor);
  e.homogeneous = e.spec.left.isZero() || e.spec.right.isZero();
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(entry("M1", {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 0}, {0, 1}, {0, 1}}},
                    "6φ00", "2φ01+φ10", "1", "diag(z,w,w)"));
  c.push_back(entry("M2", {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 1}}},
                    "6φ00", "2φ00+φ01+φ10", "1", "diag(z,1,w)"));
  c.push_back(entry("M3", {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 0}, {3, 0}, {0, 1}}},
                    "6φ00", "φ01+φ30", "1", "diag(z,z³,w)"));
  c.push_back(entry("M4", {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 2}, {1, -2}, {1, 0}}},
                    "6φ00", "φ12", "1", "diag(zw²,zw̄²,z)"));
  c.push_back(entry("N1", {{{1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 1}}},
                    "2φ00+2φ10", "4φ00+φ01", "diag(z,z,1)", "diag(1,1,w)"));
  c.push_back(entry("N2", {{{1, 0}, {1, 0}, {1, 0}}}, {{{0, 0}, {0, 0}, {0, 1}}},
                    "3φ10", "4φ00+φ01", "diag(z,z,z)", "diag(1,1,w)"));
  c.push_back(entry("N3", {{{1, 0}, {1, 0}, {1, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}},
                    "3φ10", "2φ00+2φ01", "diag(z,z,z)", "diag(w,w,1)"));
  c.push_back(entry("N4", {{{1, 0}, {1, 0}, {1, 0}}}, {{{0, 0}, {1, 0}, {0, 1}}},
                    "3φ10", "2φ00+φ01+φ10", "diag(z,z,z)", "diag(1,z,w)"));
  c.push_back(entry("N5", {{{0, 1}, {0, 1}, {1, 0}}}, {{{0, 0}, {0, 1}, {0, 0}}},
                    "2φ01+φ10", "4φ00+φ01", "diag(w,w,z)", "diag(1,w,1)"));
  c.push_back(entry("N6", {{{1, 0}, {1, 0}, {0, 1}}}, {{{0, 1}, {0, 1}, {0, 0}}},
                    "φ01+2φ10", "2φ00+2φ01", "diag(z,z,w)", "diag(w,w,1)"));
  c.push_back(entry("N7", {{{1, 0}, {1, 0}, {1, 0}}}, {{{0, 0}, {0, 1}, {0, 3}}},
                    "3φ10", "2φ00+φ03", "diag(z,z,z)", "diag(1,w,w³)"));
  c.push_back(entry("N8", {{{0, 0}, {0, 0}, {0, 1}}}, {{{1, 0}, {1, 0}, {3, 0}}},
                    "4φ00+φ01", "φ10+φ30", "diag(1,1,w)", "diag(z,z,z³)"));
  c.push_back(entry("N9", {{{1, 0}, {3, 0}, {0, 0}}}, {{{0, 1}, {0, 3}, {0, 1}}},
                    "2φ00+φ30", "φ01+φ03", "diag(z,z³,1)", "diag(w,w³,w)"));
  c.push_back(entry("N10", {{{1, 0}, {3, 0}, {5, 0}}}, {{{0, 1}, {0, 0}, {0, 0}}},
                    "φ50", "4φ00+φ01", "diag(z,z³,z⁵)", "diag(w,1,1)"));
  c.push_back(entry("N11", {{{1, 0}, {3, 0}, {0, 0}}}, {{{2, 1}, {-2, 1}, {0, 1}}},
                    "2φ00+φ30", "φ21", "diag(z,z³,1)", "diag(wz²,wz̄²,w)"));
  c.push_back(entry("N12", {{{1, 0}, {0, 0}, {0, 0}}}, {{{2, 1}, {-2, 1}, {0, 1}}},
                    "4φ00+φ10", "φ21", "diag(z,1,1)", "diag(wz²,wz̄²,w)"));
  c.push_back(entry("N13", {{{2, 0}, {-2, 0}, {0, 0}}}, {{{1, 0}, {0, 1}, {0, 1}}},
                    "2φ20", "2φ01+φ10", "diag(z²,z̄²,1)", "diag(z,w,w)"));
  c.push_back(entry("O1", {{{2, 0}, {-2, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 1}}},
                    "2φ20", "3φ01", "diag(z²,z̄²,1)", "diag(w,w,w)"));
  c.push_back(entry("O2", {{{2, 0}, {-2, 0}, {0, 0}}}, {{{0, 1}, {0, 0}, {0, 0}}},
                    "2φ20", "4φ00+φ01", "diag(z²,z̄²,1)", "diag(w,1,1)"));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

HMat diag3(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
  HMat m = HMat::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// Lower-right 2x2 block carries phi3(s); upper-left entry is d.
HMat block_phi3(const Quaternion& d, const Quaternion& s) {
  HMat m = HMat::Zero();
  m(0, 0) = d;
  HMat2 f = phi3_algebra(s);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m(a + 1, b + 1) = f(a, b);
  return m;
}

}  // namespace

LieAlgebraPair u_pair(const std::string& name) {
  LieAlgebraPair u;
  u.name = name;
  const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  const Quaternion zero{};
  for (int g = 0; g < 6; ++g) {
    Quaternion r = g < 3 ? units[g] : zero;
    Quaternion s = g < 3 ? zero : units[g - 3];
    HMat u1, u2;
    if (name == "N1") { u1 = diag3(r, r, zero); u2 = diag3(zero, zero, s); }
    else if (name == "N2") { u1 = diag3(r, r, r); u2 = diag3(zero, zero, s); }
    else if (name == "N3") { u1 = diag3(r, r, r); u2 = diag3(s, s, zero); }
    else if (name == "N4") { u1 = diag3(r, r, r); u2 = diag3(zero, r, s); }
    else if (name == "N5") { u1 = diag3(s, s, r); u2 = diag3(zero, s, zero); }
    else if (name == "N6") { u1 = diag3(r, r, s); u2 = diag3(s, s, zero); }
    else if (name == "N7") { u1 = diag3(r, r, r); u2 = block_phi3(zero, s); }
    else if (name == "N8") { u1 = diag3(zero, zero, r); u2 = block_phi3(s, s); }
    else
      throw std::invalid_argument(
          "u_pair: no Lie algebra embedding data for " + name +
          "; the verified constructions cover N1..N8, whose subgroups lie in "
          "the block subgroup fixed by the marked geodesic");
    u.gens[g] = {u1, u2};
  }
  return u;
}

const std::vector<RejectedExample>& rejected_examples() {
  static const std::vector<RejectedExample> v = [] {
    std::vector<RejectedExample> r(3);
    r[0].left = rows({{{1, 0}, {0, 0}, {0, 0}}});       // diag(z,1,1)
    r[0].right = rows({{{1, 2}, {1, -2}, {1, 0}}});     // diag(zw²,zw̄²,z)
    r[0].witness << Rat(1, 2), Rat(1, 4);
    r[1].left = rows({{{1, 0}, {3, 0}, {0, 0}}});       // diag(z,z³,1)
    r[1].right = rows({{{0, 2}, {0, -2}, {0, 0}}});     // diag(w²,w̄²,1)
    r[1].witness << Rat(1, 4), Rat(1, 8);
    r[2].left = rows({{{1, 0}, {3, 0}, {0, 0}}});       // diag(z,z³,1)
    r[2].right = rows({{{1, 2}, {1, -2}, {1, 0}}});     // diag(zw²,zw̄²,z)
    r[2].witness << Rat(1, 5), Rat(1, 10);
    return r;
  }();
  return v;
}

std::pair<HMat, HMat> n4_zero_pair() {
  HMat X = HMat::Zero(), Y = HMat::Zero();
  X(1, 1) = Quaternion::i();
  Y(0, 2) = Quaternion::j();
  Y(2, 0) = Quaternion::j();
  return {X, Y};
}

}  // namespace biq
