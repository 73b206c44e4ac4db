#pragma once

// Cohomological invariants of the quotients: the differentials on the degree-3
// and degree-7 generators in the standard spectral-sequence model, the order of
// the degree-8 torsion group, the first Pontryagin class evaluated against the
// degree-4 generator, and pi_2.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "biq/intlin.hpp"
#include "biq/reps.hpp"

namespace biq {

// An even polynomial in two generators (zbar, wbar); only the monomials that
// can appear in the differentials are carried.
struct EvenPoly {
  Int z2, w2, z4, w4, z2w2;

  friend bool operator==(const EvenPoly&, const EvenPoly&) = default;
};

// Exponent matrices rewritten in effective circle coordinates: a coordinate of
// SO(3) type acts through its double cover, so its exponent column is halved.
// Throws std::logic_error if an SO(3) column contains an odd entry.
std::pair<TorusImage, TorusImage> effective_images(const BiquotientSpec& s);

// Pullback difference of the first/second symmetric polynomial in the squared
// canonical generators: d(x3) and d(x7). Odd monomials must cancel; a nonzero
// odd coefficient throws std::logic_error.
EvenPoly dx3_poly(const TorusImage& left, const TorusImage& right);
EvenPoly dx7_poly(const TorusImage& left, const TorusImage& right);

// Relation matrix in degree 8: rows are z2*dx3, w2*dx3, dx7 expressed in the
// basis (z^4, w^4, z^2 w^2).
IMat relation_matrix(const EvenPoly& dx3, const EvenPoly& dx7);

// Evaluation against the generator of the free part of H^4: with
// dx3 = alpha z^2 + beta w^2, maps s z^2 + t w^2 to -beta*s + alpha*t.
// Requires gcd(alpha, beta) = 1 and a purely degree-2 argument; throws
// std::domain_error otherwise.
Int h4_psi(const EvenPoly& dx3, const EvenPoly& cls);

// First Pontryagin class evaluated on the H^4 generator. The degree-2 class
// 8*sum(rows^2) - rho is built from one factor's effective rows (both factors
// give the same value since the difference is a multiple of dx3).
Int p1_value(const BiquotientSpec& s, bool use_left = false);

// pi_2 of the quotient: the group of (+-1, +-1) pairs whose two images agree
// and are central, rendered as "0", "Z/2" or "Z/2 + Z/2".
std::string pi2_string(const BiquotientSpec& s);

struct CohomologyReport {
  std::string name;
  TorusImage eff_left, eff_right;
  EvenPoly dx3{}, dx7{};
  Int alpha, beta;              // dx3 = alpha z^2 + beta w^2
  IMat relations;               // 3x3
  Int h8_order;                 // |det(relations)|
  std::array<Int, 3> snf_diag;  // elementary divisors of the relation matrix
  Int p1;
  std::string pi2;
};

CohomologyReport cohomology(const BiquotientSpec& s);

// Reports for every named quotient in the catalog, in catalog order.
std::vector<CohomologyReport> cohomology_catalog();

}  // namespace biq
