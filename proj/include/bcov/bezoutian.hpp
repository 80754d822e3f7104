#pragma once

#include <optional>

#include "bcov/algebraic.hpp"
#include "bcov/mpoly.hpp"

namespace bcov {

/* A point of coefficient space R^n (candidate image of the sigma map). */
struct SigmaPoint {
  int n;
  std::vector<Rat> coords;

  SigmaPoint(int n_, std::vector<Rat> c) : n(n_), coords(std::move(c)) {
    if (n <= 0 || static_cast<int>(coords.size()) != n)
      throw std::invalid_argument("coords length must equal n");
  }
};

struct HyperbolicCertificate {
  SigmaPoint point;
  RootMultiset roots;
  std::vector<int> profile;  // multiplicities sorted descending, sum n
};

/* Fiber of sigma over a hyperbolic point: the distinct arrangements of the
 * root multiset. Shared root intervals refine all fiber points at once. */
class BezFiber {
 public:
  BezFiber(int n, std::vector<AlgebraicReal> roots, std::vector<int> mult);

  int n() const { return n_; }
  int d() const { return static_cast<int>(arrangements_.size()); }
  long index() const { return index_; }            // r = prod k_i!
  long sheet_total() const;                        // n!
  const std::vector<AlgebraicReal>& distinct_roots() const { return roots_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<std::vector<int>>& arrangements() const { return arrangements_; }

  std::vector<std::vector<AlgebraicReal>> points() const;
  std::vector<QInterval> point_intervals(int i) const;

  void refine(int steps = 1);
  bool all_rational(int probe_steps = 96);
  /* coordinate values of arrangement i as exact rationals (requires all_rational) */
  std::vector<Rat> point_rational(int i) const;

 private:
  int n_;
  std::vector<AlgebraicReal> roots_;
  std::vector<int> mult_;
  std::vector<std::vector<int>> arrangements_;
  long index_;
};

UniPoly vieta_poly(const SigmaPoint& a);
SigmaPoint sigma_map(const std::vector<Rat>& x);

std::optional<HyperbolicCertificate> is_hyperbolic(const SigmaPoint& a);
/* Throws std::domain_error("point outside N") when a is not hyperbolic;
 * std::invalid_argument when n exceeds the enumeration cap (default 6). */
BezFiber fiber(const SigmaPoint& a, int cap = 6);
long ramification_index(const SigmaPoint& a);

bool is_branch_point(const std::vector<Rat>& x);
bool is_collapse_point(const std::vector<Rat>& x);

/* Roots ascending with multiplicity (the continuous section). */
std::vector<AlgebraicReal> section(const SigmaPoint& a);
/* gamma: 0-based permutation; result[i] = section(a)[gamma[i]]. */
std::vector<AlgebraicReal> section_gamma(const SigmaPoint& a, const std::vector<int>& gamma);

/* (1/n!) sum over the fiber of index * f. Exact mode requires rational
 * roots (throws std::domain_error("use interval mode") otherwise). */
Rat mu_exact(const SigmaPoint& a, const MPoly& f);
QInterval mu_interval(const SigmaPoint& a, const MPoly& f, const Rat& width);

/* k-th elementary symmetric value of the n! fiber values of f (each fiber
 * point's value repeated index times), 1 <= k <= n!. */
Rat symfun_exact(const SigmaPoint& a, const MPoly& f, long k);
QInterval symfun_interval(const SigmaPoint& a, const MPoly& f, long k, const Rat& width);

/* Monic annihilator of f on the fiber, degree n!. */
UniPoly integral_poly_exact(const SigmaPoint& a, const MPoly& f);
struct IntegralPolyEnclosure {
  std::vector<QInterval> coeffs;          // ascending, degree n!
  std::vector<QInterval> value_at_fiber;  // enclosure of p(f(x_i)), each contains 0
};
/* Refines until every p(f(x_i)) enclosure has width <= width. */
IntegralPolyEnclosure integral_poly_interval(const SigmaPoint& a, const MPoly& f,
                                             const Rat& width);

/* Resultant in y of real and imaginary parts of P(u, x+iy); polynomial in
 * variables u1..un, x (x is variable index n). Cap default 4. */
MPoly real_part_resultant(int n, int cap = 4);
/* Specialize R at u = coefficients of the Vieta polynomial of a
 * (u_k = (-1)^k a_k), leaving a univariate polynomial in x. */
UniPoly real_part_resultant_at(const MPoly& R, const SigmaPoint& a);

/* g in u1..un composed with the sigma map: polynomial in x1..xn. */
MPoly compose_with_sigma(const MPoly& g);

}  // namespace bcov
