#include "bcov/algebraic.hpp"

#include <algorithm>
#include <cassert>

namespace bcov {

QInterval QInterval::operator*(const QInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

static Rat rat_pow(const Rat& x, int e) {
  Rat acc(1);
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

QInterval QInterval::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative interval power");
  if (e == 0) return point(Rat(1));
  Rat a = rat_pow(lo, e), b = rat_pow(hi, e);
  if (e % 2 == 1) return {a, b};
  Rat l = std::min(a, b), h = std::max(a, b);
  if (contains(Rat(0))) l = 0;
  return {l, h};
}

AlgebraicReal::AlgebraicReal(const Rat& value)
    : def_(UniPoly({-value, Rat(1)})), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(UniPoly defining, Rat lo, Rat hi, bool validate)
    : def_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!validate) return;
  if (lo_ > hi_) throw std::invalid_argument("inverted isolating interval");
  if (lo_ == hi_) {
    if (def_.eval(lo_) != 0) throw std::invalid_argument("point interval is not a root");
    return;
  }
  if (poly_gcd(def_, def_.derivative()).degree() > 0)
    throw std::invalid_argument("defining polynomial not squarefree");
  if (def_.eval(lo_) == 0 || def_.eval(hi_) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  if (sturm_count(def_, lo_, hi_) != 1)
    throw std::invalid_argument("interval does not isolate one root");
}

const Rat& AlgebraicReal::value() const {
  if (!is_rational()) throw std::logic_error("value() on irrational AlgebraicReal");
  return lo_;
}

void AlgebraicReal::refine() {
  if (is_rational()) return;
  Rat m = (lo_ + hi_) / 2;
  Rat fm = def_.eval(m);
  if (fm == 0) {
    lo_ = m;
    hi_ = m;
    return;
  }
  /* simple root in an isolating interval: located by the sign change */
  if (sign(def_.eval(lo_)) != sign(fm))
    hi_ = m;
  else
    lo_ = m;
}

void AlgebraicReal::refine_below(const Rat& width) {
  while (hi_ - lo_ > width) refine();
}

bool AlgebraicReal::try_rationalize(int max_steps) {
  if (is_rational()) return true;
  for (int i = 0; i < max_steps; ++i) {
    Rat cand = simplest_rational_between(lo_, hi_);
    if (def_.eval(cand) == 0) {
      lo_ = cand;
      hi_ = cand;
      return true;
    }
    refine();
  }
  return false;
}

int AlgebraicReal::compare(const Rat& r) const {
  if (is_rational()) return lo_ < r ? -1 : (lo_ > r ? 1 : 0);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  Rat fr = def_.eval(r);
  if (fr == 0) return 0;
  return sign(def_.eval(lo_)) != sign(fr) ? -1 : 1;
}

int AlgebraicReal::compare(AlgebraicReal& o) {
  if (is_rational()) return -o.compare(lo_);
  if (o.is_rational()) return compare(o.lo_);
  while (true) {
    if (hi_ <= o.lo_) return -1;
    if (lo_ >= o.hi_) return 1;
    UniPoly g = poly_gcd(def_, o.def_);
    if (g.degree() > 0) {
      Rat a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
      if (sturm_count(g, a, b) >= 1) return 0;
    }
    refine();
    o.refine();
  }
}

static void isolate_squarefree(const UniPoly& f, std::vector<AlgebraicReal>& out) {
  if (f.degree() <= 0) return;
  Rat bound = cauchy_bound(f);
  struct Range { Rat a, b; };
  std::vector<Range> stack{{-bound, bound}};
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    int c = sturm_count(f, r.a, r.b);
    if (c == 0) continue;
    if (c == 1) {
      if (f.eval(r.b) == 0) {
        out.emplace_back(r.b);
        continue;
      }
      /* the root is interior; shrink until the left endpoint (possibly a
       * different root of f) is excluded from the closed interval */
      bool rational = false;
      while (f.eval(r.a) == 0) {
        Rat m = (r.a + r.b) / 2;
        if (f.eval(m) == 0) {
          out.emplace_back(m);
          rational = true;
          break;
        }
        if (sturm_count(f, m, r.b) == 1)
          r.a = m;
        else
          r.b = m;
      }
      if (!rational) {
        AlgebraicReal root(f, r.a, r.b, /*validate=*/false);
        root.try_rationalize(48);
        out.push_back(std::move(root));
      }
      continue;
    }
    Rat m = (r.a + r.b) / 2;
    stack.push_back({r.a, m});
    stack.push_back({m, r.b});
  }
}

/* refine until the two closed intervals no longer touch (roots known distinct) */
static void force_disjoint(AlgebraicReal& a, AlgebraicReal& b) {
  while (std::max(a.lo(), b.lo()) <= std::min(a.hi(), b.hi())) {
    a.refine();
    b.refine();
  }
}

RootMultiset isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<AlgebraicReal, int>> roots;
  for (const auto& [f, m] : squarefree_decompose(p)) {
    std::vector<AlgebraicReal> rs;
    isolate_squarefree(f, rs);
    for (auto& r : rs) roots.emplace_back(std::move(r), m);
  }
  /* selection sort via exact comparison (desk-scale sizes) */
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[j].first.compare(roots[best].first) < 0) best = j;
    if (best != i) std::swap(roots[i], roots[best]);
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    int c = roots[i].first.compare(roots[i + 1].first);
    assert(c < 0 && "coprime factors cannot share roots");
    (void)c;
    force_disjoint(roots[i].first, roots[i + 1].first);
  }
  return RootMultiset{std::move(roots)};
}

QInterval elementary_symmetric_interval(const std::vector<QInterval>& x, int k) {
  int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw std::invalid_argument("elementary symmetric index out of range");
  std::vector<QInterval> e(static_cast<std::size_t>(k + 1), QInterval::point(Rat(0)));
  e[0] = QInterval::point(Rat(1));
  for (int i = 0; i < n; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

QInterval eval_interval(const UniPoly& p, const QInterval& t) {
  QInterval acc = QInterval::point(Rat(0));
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * t + QInterval::point(p.coeff(k));
  return acc;
}

}  // namespace bcov
