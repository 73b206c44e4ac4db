#include "biq/cohomology.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "biq/catalog.hpp"

namespace biq {

namespace {

// Dense polynomial in (z, w) of total degree <= 4.
struct P4 {
  std::array<std::array<Int, 5>, 5> c{};  // c[i][j] * z^i w^j

  P4& operator+=(const P4& o) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) c[i][j] += o.c[i][j];
    return *this;
  }
  P4 operator-(const P4& o) const {
    P4 r = *this;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) r.c[i][j] -= o.c[i][j];
    return r;
  }
  P4 operator*(const P4& o) const {
    P4 r;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (c[i][j] == 0) continue;
        for (int k = 0; k < 5; ++k)
          for (int l = 0; l < 5; ++l) {
            if (o.c[k][l] == 0) continue;
            if (i + k + j + l > 4) throw std::logic_error("degree overflow");
            r.c[i + k][j + l] += c[i][j] * o.c[k][l];
          }
      }
    return r;
  }
};

P4 row_square(int a, int b) {
  P4 r;
  r.c[2][0] = Int(a) * a;
  r.c[1][1] = Int(2) * a * b;
  r.c[0][2] = Int(b) * b;
  return r;
}

P4 sigma1(const TorusImage& m) {
  P4 r;
  for (int i = 0; i < 3; ++i) r += row_square(m(i, 0), m(i, 1));
  return r;
}

P4 sigma2(const TorusImage& m) {
  std::array<P4, 3> sq;
  for (int i = 0; i < 3; ++i) sq[i] = row_square(m(i, 0), m(i, 1));
  P4 r;
  r += sq[0] * sq[1];
  r += sq[0] * sq[2];
  r += sq[1] * sq[2];
  return r;
}

EvenPoly to_even(const P4& p) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if ((i % 2 != 0 || j % 2 != 0) && p.c[i][j] != 0)
        throw std::logic_error("odd monomial survived cancellation");
  return EvenPoly{p.c[2][0], p.c[0][2], p.c[4][0], p.c[0][4], p.c[2][2]};
}

Int gcd_abs(Int a, Int b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

EvenPoly rho_term(const BiquotientSpec& s) {
  // Tangent-bundle contribution of the acting group: 4 u^2 per genuine Sp(1)
  // coordinate, v^2 per SO(3) coordinate in its halved variable.
  EvenPoly r{};
  r.z2 = s.left_type == FactorType::Sp1 ? 4 : 1;
  r.w2 = s.right_type == FactorType::Sp1 ? 4 : 1;
  return r;
}

}  // namespace

std::pair<TorusImage, TorusImage> effective_images(const BiquotientSpec& s) {
  TorusImage L = s.left, R = s.right;
  for (int col = 0; col < 2; ++col) {
    FactorType t = col == 0 ? s.left_type : s.right_type;
    if (t != FactorType::SO3) continue;
    for (TorusImage* m : {&L, &R})
      for (int r = 0; r < 3; ++r) {
        if ((*m)(r, col) % 2 != 0) throw std::logic_error("odd exponent in SO(3) column");
        (*m)(r, col) /= 2;
      }
  }
  return {L, R};
}

EvenPoly dx3_poly(const TorusImage& left, const TorusImage& right) {
  return to_even(sigma1(left) - sigma1(right));
}

EvenPoly dx7_poly(const TorusImage& left, const TorusImage& right) {
  return to_even(sigma2(left) - sigma2(right));
}

IMat relation_matrix(const EvenPoly& dx3, const EvenPoly& dx7) {
  IMat A(3, 3);
  A(0, 0) = dx3.z2;
  A(0, 1) = 0;
  A(0, 2) = dx3.w2;
  A(1, 0) = 0;
  A(1, 1) = dx3.w2;
  A(1, 2) = dx3.z2;
  A(2, 0) = dx7.z4;
  A(2, 1) = dx7.w4;
  A(2, 2) = dx7.z2w2;
  return A;
}

Int h4_psi(const EvenPoly& dx3, const EvenPoly& cls) {
  if (gcd_abs(dx3.z2, dx3.w2) != 1)
    throw std::domain_error("free part of H^4 needs coprime dx3 coefficients");
  if (cls.z4 != 0 || cls.w4 != 0 || cls.z2w2 != 0)
    throw std::domain_error("h4_psi expects a degree-2 class");
  return -dx3.w2 * cls.z2 + dx3.z2 * cls.w2;
}

Int p1_value(const BiquotientSpec& s, bool use_left) {
  auto [L, R] = effective_images(s);
  EvenPoly dx3 = dx3_poly(L, R);
  EvenPoly cls = to_even(sigma1(use_left ? L : R));
  cls.z2 *= 8;
  cls.w2 *= 8;
  EvenPoly rho = rho_term(s);
  cls.z2 -= rho.z2;
  cls.w2 -= rho.w2;
  return h4_psi(dx3, cls);
}

std::string pi2_string(const BiquotientSpec& s) {
  int order = 0;
  for (int ez = 0; ez < 2; ++ez)
    for (int ew = 0; ew < 2; ++ew) {
      // Both images are the same central element iff all six exponent-row
      // parities agree.
      int c = (s.left(0, 0) * ez + s.left(0, 1) * ew) & 1;
      bool ok = true;
      for (int r = 0; r < 3 && ok; ++r) {
        ok = ((s.left(r, 0) * ez + s.left(r, 1) * ew) & 1) == c &&
             ((s.right(r, 0) * ez + s.right(r, 1) * ew) & 1) == c;
      }
      if (ok) ++order;
    }
  switch (order) {
    case 1: return "0";
    case 2: return "Z/2";
    case 4: return "Z/2 + Z/2";
    default: throw std::logic_error("pi2 order must divide 4");
  }
}

CohomologyReport cohomology(const BiquotientSpec& s) {
  CohomologyReport rep;
  rep.name = s.name;
  auto [L, R] = effective_images(s);
  rep.eff_left = L;
  rep.eff_right = R;
  rep.dx3 = dx3_poly(L, R);
  rep.dx7 = dx7_poly(L, R);
  rep.alpha = rep.dx3.z2;
  rep.beta = rep.dx3.w2;
  rep.relations = relation_matrix(rep.dx3, rep.dx7);
  rep.h8_order = abs(det_exact(rep.relations));
  SnfResult snf_rel = snf(rep.relations);
  for (int i = 0; i < 3; ++i) rep.snf_diag[i] = snf_rel.D(i, i);
  rep.p1 = p1_value(s);
  rep.pi2 = pi2_string(s);
  return rep;
}

std::vector<CohomologyReport> cohomology_catalog() {
  std::vector<CohomologyReport> out;
  for (const CatalogEntry& e : catalog()) out.push_back(cohomology(e.spec));
  return out;
}

}  // namespace biq
