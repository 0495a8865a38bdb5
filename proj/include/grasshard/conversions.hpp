#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasshard/manifolds.hpp"
#include "grasshard/poly.hpp"

// Explicit diffeomorphisms between the matrix models, with inverses.
//
//   O(n)/(O(k)xO(n-k)) --phi1--> V(k,n)/O(k) --phi2--> Gr_pi --phi3--> Gr_{a,b}
//          |                          |
//        phi5                       phi4
//          v                          v
//     GL(n)/P(k,n)              St(k,n)/GL(k)
//
//   O(n)/O(n-k) --psi1--> V(k,n)     GL(n)/P1(k,n) --psi2--> St(k,n)
//   GL(n)/O(n) --rho--> S^n_{++}
//
// Inputs are validated against their model; outputs carry the target model
// tag. Decompositions follow the conventions in linalg.hpp.
namespace grasshard::conversions {

Point phi1(const Point& q);
Point phi1_inv(const Point& y);
Point phi2(const Point& y);
Point phi2_inv(const Point& p);
// Projection -> quadratic model W = (a - b) P + b I.
Point phi3(const Point& p, const Rational& a, const Rational& b);
// Quadratic (or involution, read as (a, b) = (1, -1)) -> projection.
Point phi3_inv(const Point& w);
RationalMatrix phi3_exact(const RationalMatrix& p, const Rational& a, const Rational& b);
RationalMatrix phi3_inv_exact(const RationalMatrix& w, const Rational& a, const Rational& b);
Point phi4(const Point& y);
Point phi4_inv(const Point& s);
Point phi5(const Point& q);
Point phi5_inv(const Point& x);
Point psi1(const Point& q);
// The representative keeps Y as its first k columns so psi1(psi1_inv(Y)) = Y;
// the remaining columns come from the eigendecomposition of Y Y^T.
Point psi1_inv(const Point& y);
Point psi2(const Point& x);
// L_S from S S^T = L D L^T (no pivoting), then right-multiplied by
// diag(L11^{-1} S1, I) so that its first k columns reproduce S exactly.
Point psi2_inv(const Point& s);
Point rho(const Point& x);
Point rho_inv(const Point& s);

// Coset equality for quotient models, plain matrix equality otherwise.
//   Grassmann quotients: projector onto the span of the first k columns.
//   O(n)/O(n-k), GL(n)/P1(k,n): the first k columns.
//   GL(n)/O(n): X^T X.
// GL-based comparisons are relative to max(1, scale).
bool same_coset(const Point& a, const Point& b, double tol = 1e-8);
double coset_distance(const Point& a, const Point& b);

struct Route {
  std::vector<std::string> steps;
  Point result;
};

// Composes maps (and inverses) along the unique path between models.
// Targets Quadratic needs (a, b); Involution means (a, b) = (1, -1).
// Throws NoPath if the models are not connected.
Route convert(const Point& from, Model to,
              std::optional<std::pair<Rational, Rational>> ab = std::nullopt);

}  // namespace grasshard::conversions
