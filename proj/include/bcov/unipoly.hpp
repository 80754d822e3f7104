#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bcov/rat.hpp"

namespace bcov {

/* Univariate polynomial over Q, coefficients ascending by degree.
 * Normalized: no trailing zero coefficients; zero polynomial = empty. */
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rat(0), Rat(1)}); }
  /* (t - r1)...(t - rk) */
  static UniPoly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  /* coefficient of t^k, zero outside range */
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& t) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /* Euclidean division: a = q*b + r, deg r < deg b. b nonzero. */
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/* Monic gcd; gcd(0,0) = 0. */
UniPoly poly_gcd(UniPoly a, UniPoly b);

/* Number of distinct real roots of p in (lo, hi]; unset bound = infinite.
 * Throws std::invalid_argument("undefined root count") on the zero poly. */
int sturm_count(const UniPoly& p, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi);
inline int sturm_count(const UniPoly& p) { return sturm_count(p, {}, {}); }

/* Yun decomposition: pairwise coprime squarefree monic factors with
 * multiplicities; product of factors^mult = p up to a constant. */
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

/* Product of the distinct-root factors, monic. */
UniPoly squarefree_part(const UniPoly& p);

/* Res(p, q), fraction-free subresultant PRS. */
Rat resultant(const UniPoly& p, const UniPoly& q);

/* sigma_k(x_1..x_n), 1 <= k <= n. */
Rat elementary_symmetric_eval(const std::vector<Rat>& x, int k);

/* 1 + max |a_i / a_n|: all real roots lie strictly inside (-B, B). */
Rat cauchy_bound(const UniPoly& p);

}  // namespace bcov
