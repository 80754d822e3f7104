#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcov/algebraic.hpp"

namespace bcov {

/* Sparse multivariate polynomial over Q in a fixed number of variables.
 * Terms keyed by exponent vectors (lex order via std::map). */
class MPoly {
 public:
  explicit MPoly(int nvars = 0) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  int total_degree() const;

  void add_term(const std::vector<int>& exps, const Rat& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /* Quotient when the division is exact; throws std::domain_error otherwise. */
  MPoly exact_div(const MPoly& d) const;

  Rat eval(const std::vector<Rat>& x) const;
  QInterval eval(const std::vector<QInterval>& x) const;

  /* Substitute subs[i] for variable i; all subs share one variable count. */
  MPoly substitute(const std::vector<MPoly>& subs) const;

  std::string str(const std::string& stem = "x") const;  // x1, x2, ...

 private:
  int nvars_;
  std::map<std::vector<int>, Rat> terms_;
};

/* sigma_k as a polynomial in x1..xn */
MPoly elementary_symmetric_poly(int n, int k);

/* Minimal infix grammar over x1..xn: + - * ^, parentheses, rational
 * literals "p" / "p/q". Throws InputError with position info. */
MPoly parse_poly(const std::string& text, int nvars, const std::string& stem = "x");

}  // namespace bcov
