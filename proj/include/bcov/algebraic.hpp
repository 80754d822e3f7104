#pragma once

#include <vector>

#include "bcov/unipoly.hpp"

namespace bcov {

/* Closed rational interval; arithmetic is exact (no rounding needed). */
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("inverted interval");
  }
  static QInterval point(const Rat& v) { return QInterval(v, v); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }

  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  QInterval operator-() const { return {-hi, -lo}; }
  QInterval operator*(const QInterval& o) const;
  QInterval pow(int e) const;
};

/* A real algebraic number: one root of a squarefree rational polynomial,
 * pinned down by an isolating interval. Rational values are stored exactly
 * (lo == hi); otherwise defining(lo), defining(hi) != 0 and the open
 * interval contains exactly one root. */
class AlgebraicReal {
 public:
  explicit AlgebraicReal(const Rat& value);
  AlgebraicReal(UniPoly defining, Rat lo, Rat hi, bool validate = true);

  const UniPoly& defining() const { return def_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  QInterval interval() const { return QInterval(lo_, hi_); }

  bool is_rational() const { return lo_ == hi_; }
  const Rat& value() const;  // requires is_rational()

  /* One bisection step: width at least halves (collapses to a point if the
   * midpoint turns out to be the root). */
  void refine();
  void refine_below(const Rat& width);

  /* Probe for an exact rational value: refines up to max_steps times,
   * testing the simplest rational in the interval each round. Returns true
   * iff the root is now known rational. */
  bool try_rationalize(int max_steps = 96);

  int compare(const Rat& r) const;       // sign of (root - r)
  int compare(AlgebraicReal& o);         // refines both as needed

 private:
  UniPoly def_;
  Rat lo_, hi_;
};

struct RootMultiset {
  /* ascending by root value */
  std::vector<std::pair<AlgebraicReal, int>> roots;

  int distinct_count() const { return static_cast<int>(roots.size()); }
  int total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.second;
    return s;
  }
};

/* All real roots with multiplicities, ascending, isolating intervals
 * pairwise disjoint. Throws on the zero polynomial. */
RootMultiset isolate_real_roots(const UniPoly& p);

/* sigma_k of interval values (certified enclosure). */
QInterval elementary_symmetric_interval(const std::vector<QInterval>& x, int k);

/* Horner evaluation of p over an interval argument. */
QInterval eval_interval(const UniPoly& p, const QInterval& t);

}  // namespace bcov
