#include "bcov/bezoutian.hpp"

#include <algorithm>
#include <cassert>

namespace bcov {

static long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BezFiber::BezFiber(int n, std::vector<AlgebraicReal> roots, std::vector<int> mult)
    : n_(n), roots_(std::move(roots)), mult_(std::move(mult)) {
  assert(roots_.size() == mult_.size());
  index_ = 1;
  std::vector<int> ids;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    index_ *= factorial(mult_[i]);
    for (int j = 0; j < mult_[i]; ++j) ids.push_back(static_cast<int>(i));
  }
  assert(static_cast<int>(ids.size()) == n_);
  do {
    arrangements_.push_back(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));
}

long BezFiber::sheet_total() const { return factorial(n_); }

std::vector<std::vector<AlgebraicReal>> BezFiber::points() const {
  std::vector<std::vector<AlgebraicReal>> out;
  out.reserve(arrangements_.size());
  for (const auto& arr : arrangements_) {
    std::vector<AlgebraicReal> pt;
    pt.reserve(arr.size());
    for (int id : arr) pt.push_back(roots_[static_cast<std::size_t>(id)]);
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<QInterval> BezFiber::point_intervals(int i) const {
  std::vector<QInterval> out;
  for (int id : arrangements_[static_cast<std::size_t>(i)])
    out.push_back(roots_[static_cast<std::size_t>(id)].interval());
  return out;
}

void BezFiber::refine(int steps) {
  for (auto& r : roots_)
    for (int i = 0; i < steps; ++i) r.refine();
}

bool BezFiber::all_rational(int probe_steps) {
  bool ok = true;
  for (auto& r : roots_) ok = r.try_rationalize(probe_steps) && ok;
  return ok;
}

std::vector<Rat> BezFiber::point_rational(int i) const {
  std::vector<Rat> out;
  for (int id : arrangements_[static_cast<std::size_t>(i)])
    out.push_back(roots_[static_cast<std::size_t>(id)].value());
  return out;
}

UniPoly vieta_poly(const SigmaPoint& a) {
  std::vector<Rat> c(static_cast<std::size_t>(a.n + 1), Rat(0));
  c[static_cast<std::size_t>(a.n)] = 1;
  int s = -1;
  for (int k = 1; k <= a.n; ++k) {
    c[static_cast<std::size_t>(a.n - k)] = Rat(s) * a.coords[static_cast<std::size_t>(k - 1)];
    s = -s;
  }
  return UniPoly(std::move(c));
}

SigmaPoint sigma_map(const std::vector<Rat>& x) {
  int n = static_cast<int>(x.size());
  if (n == 0) throw std::invalid_argument("empty tuple");
  std::vector<Rat> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) coords.push_back(elementary_symmetric_eval(x, k));
  return SigmaPoint(n, std::move(coords));
}

std::optional<HyperbolicCertificate> is_hyperbolic(const SigmaPoint& a) {
  RootMultiset roots = isolate_real_roots(vieta_poly(a));
  if (roots.total_multiplicity() != a.n) return std::nullopt;
  std::vector<int> profile;
  for (const auto& [r, m] : roots.roots) profile.push_back(m);
  std::sort(profile.rbegin(), profile.rend());
  return HyperbolicCertificate{a, std::move(roots), std::move(profile)};
}

BezFiber fiber(const SigmaPoint& a, int cap) {
  if (a.n > cap) throw std::invalid_argument("degree cap exceeded");
  auto cert = is_hyperbolic(a);
  if (!cert) throw std::domain_error("point outside N");
  std::vector<AlgebraicReal> roots;
  std::vector<int> mult;
  for (auto& [r, m] : cert->roots.roots) {
    roots.push_back(r);
    mult.push_back(m);
  }
  return BezFiber(a.n, std::move(roots), std::move(mult));
}

long ramification_index(const SigmaPoint& a) {
  auto cert = is_hyperbolic(a);
  if (!cert) throw std::domain_error("point outside N");
  long r = 1;
  for (int k : cert->profile) r *= factorial(k);
  return r;
}

bool is_branch_point(const std::vector<Rat>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return true;
  return false;
}

bool is_collapse_point(const std::vector<Rat>& x) {
  if (x.empty()) throw std::invalid_argument("empty tuple");
  for (const Rat& v : x)
    if (v != x[0]) return false;
  return true;
}

std::vector<AlgebraicReal> section(const SigmaPoint& a) {
  auto cert = is_hyperbolic(a);
  if (!cert) throw std::domain_error("point outside N");
  std::vector<AlgebraicReal> out;
  for (const auto& [r, m] : cert->roots.roots)
    for (int j = 0; j < m; ++j) out.push_back(r);
  return out;
}

std::vector<AlgebraicReal> section_gamma(const SigmaPoint& a, const std::vector<int>& gamma) {
  if (static_cast<int>(gamma.size()) != a.n) throw std::invalid_argument("invalid permutation");
  std::vector<bool> seen(gamma.size(), false);
  for (int g : gamma) {
    if (g < 0 || g >= a.n || seen[static_cast<std::size_t>(g)])
      throw std::invalid_argument("invalid permutation");
    seen[static_cast<std::size_t>(g)] = true;
  }
  std::vector<AlgebraicReal> s = section(a);
  std::vector<AlgebraicReal> out;
  out.reserve(s.size());
  for (int g : gamma) out.push_back(s[static_cast<std::size_t>(g)]);
  return out;
}

/* ---- evaluation of f over the fiber ---- */

static std::vector<Rat> fiber_values_exact(BezFiber& fib, const MPoly& f) {
  if (!fib.all_rational()) throw std::domain_error("use interval mode");
  std::vector<Rat> vals;
  for (int i = 0; i < fib.d(); ++i) vals.push_back(f.eval(fib.point_rational(i)));
  return vals;
}

static std::vector<QInterval> fiber_values_interval(const BezFiber& fib, const MPoly& f) {
  std::vector<QInterval> vals;
  for (int i = 0; i < fib.d(); ++i) vals.push_back(f.eval(fib.point_intervals(i)));
  return vals;
}

Rat mu_exact(const SigmaPoint& a, const MPoly& f) {
  BezFiber fib = fiber(a);
  std::vector<Rat> vals = fiber_values_exact(fib, f);
  Rat s(0);
  for (const Rat& v : vals) s += v;
  return s * Rat(fib.index()) / Rat(fib.sheet_total());
}

QInterval mu_interval(const SigmaPoint& a, const MPoly& f, const Rat& width) {
  BezFiber fib = fiber(a);
  Rat scale = Rat(fib.index()) / Rat(fib.sheet_total());
  for (int round = 0;; ++round) {
    QInterval s = QInterval::point(Rat(0));
    for (const QInterval& v : fiber_values_interval(fib, f)) s = s + v;
    s = s * QInterval::point(scale);
    if (s.width() <= width) return s;
    if (round > 4096) throw std::runtime_error("interval refinement did not converge");
    fib.refine(4);
  }
}

/* the n! multiset of f-values: each arrangement's value repeated index times */
template <class T>
static std::vector<T> repeated_values(const std::vector<T>& vals, long index) {
  std::vector<T> out;
  for (const T& v : vals)
    for (long j = 0; j < index; ++j) out.push_back(v);
  return out;
}

Rat symfun_exact(const SigmaPoint& a, const MPoly& f, long k) {
  BezFiber fib = fiber(a);
  if (k < 1 || k > fib.sheet_total()) throw std::invalid_argument("symfun index out of range");
  std::vector<Rat> vals = repeated_values(fiber_values_exact(fib, f), fib.index());
  return elementary_symmetric_eval(vals, static_cast<int>(k));
}

QInterval symfun_interval(const SigmaPoint& a, const MPoly& f, long k, const Rat& width) {
  BezFiber fib = fiber(a);
  if (k < 1 || k > fib.sheet_total()) throw std::invalid_argument("symfun index out of range");
  for (int round = 0;; ++round) {
    std::vector<QInterval> vals = repeated_values(fiber_values_interval(fib, f), fib.index());
    QInterval s = elementary_symmetric_interval(vals, static_cast<int>(k));
    if (s.width() <= width) return s;
    if (round > 4096) throw std::runtime_error("interval refinement did not converge");
    fib.refine(4);
  }
}

static UniPoly integral_from_symvals(const std::vector<Rat>& sym) {
  int d = static_cast<int>(sym.size());
  std::vector<Rat> c(static_cast<std::size_t>(d + 1), Rat(0));
  c[static_cast<std::size_t>(d)] = 1;
  int s = -1;
  for (int k = 1; k <= d; ++k) {
    c[static_cast<std::size_t>(d - k)] = Rat(s) * sym[static_cast<std::size_t>(k - 1)];
    s = -s;
  }
  return UniPoly(std::move(c));
}

UniPoly integral_poly_exact(const SigmaPoint& a, const MPoly& f) {
  BezFiber fib = fiber(a);
  std::vector<Rat> vals = repeated_values(fiber_values_exact(fib, f), fib.index());
  int d = static_cast<int>(vals.size());
  std::vector<Rat> sym;
  for (int k = 1; k <= d; ++k) sym.push_back(elementary_symmetric_eval(vals, k));
  return integral_from_symvals(sym);
}

static QInterval eval_interval_coeffs(const std::vector<QInterval>& coeffs, const QInterval& t) {
  QInterval acc = QInterval::point(Rat(0));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntegralPolyEnclosure integral_poly_interval(const SigmaPoint& a, const MPoly& f,
                                             const Rat& width) {
  BezFiber fib = fiber(a);
  int d = static_cast<int>(fib.sheet_total());
  for (int round = 0;; ++round) {
    std::vector<QInterval> fvals = fiber_values_interval(fib, f);
    std::vector<QInterval> vals = repeated_values(fvals, fib.index());
    std::vector<QInterval> coeffs(static_cast<std::size_t>(d + 1));
    coeffs[static_cast<std::size_t>(d)] = QInterval::point(Rat(1));
    int s = -1;
    for (int k = 1; k <= d; ++k) {
      coeffs[static_cast<std::size_t>(d - k)] =
          elementary_symmetric_interval(vals, k) * QInterval::point(Rat(s));
      s = -s;
    }
    IntegralPolyEnclosure out{coeffs, {}};
    bool ok = true;
    for (const QInterval& v : fvals) {
      QInterval pv = eval_interval_coeffs(coeffs, v);
      if (pv.width() > width || !pv.contains(Rat(0))) ok = false;
      out.value_at_fiber.push_back(pv);
    }
    if (ok) return out;
    if (round > 4096) throw std::runtime_error("interval refinement did not converge");
    fib.refine(4);
  }
}

/* ---- resultant elimination of the imaginary direction ---- */

static MPoly det_bareiss(std::vector<std::vector<MPoly>> m, int nvars) {
  int k = static_cast<int>(m.size());
  if (k == 0) return MPoly::constant(nvars, Rat(1));
  int sign_flip = 1;
  MPoly prev = MPoly::constant(nvars, Rat(1));
  for (int p = 0; p < k; ++p) {
    if (m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)].is_zero()) {
      int swap_row = -1;
      for (int i = p + 1; i < k; ++i)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return MPoly(nvars);  // zero determinant
      std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(swap_row)]);
      sign_flip = -sign_flip;
    }
    const MPoly pivot = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j) {
        MPoly num = pivot * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] *
                        m[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num.exact_div(prev);
      }
    prev = pivot;
  }
  MPoly det = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
  return sign_flip == 1 ? det : -det;
}

MPoly real_part_resultant(int n, int cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::invalid_argument("degree cap exceeded");
  int nv = n + 1;  // u1..un, then x
  /* binomials up to n */
  std::vector<std::vector<long>> ch(static_cast<std::size_t>(n + 1),
                                    std::vector<long>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    ch[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      ch[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ch[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          ch[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  /* P1[j], P2[j]: coefficient of y^j in Re / Im of P(u, x+iy) */
  std::vector<MPoly> p1(static_cast<std::size_t>(n + 1), MPoly(nv));
  std::vector<MPoly> p2(static_cast<std::size_t>(n + 1), MPoly(nv));
  auto add_zk = [&](int k, const MPoly& coef) {
    /* coef * (x+iy)^k distributed into p1/p2 */
    for (int j = 0; j <= k; ++j) {
      MPoly term = coef * Rat(ch[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      for (int t = 0; t < k - j; ++t) term = term * MPoly::variable(nv, n);
      int mod = j % 4;
      if (mod == 0) p1[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j)] + term;
      else if (mod == 1) p2[static_cast<std::size_t>(j)] = p2[static_cast<std::size_t>(j)] + term;
      else if (mod == 2) p1[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j)] - term;
      else p2[static_cast<std::size_t>(j)] = p2[static_cast<std::size_t>(j)] - term;
    }
  };
  add_zk(n, MPoly::constant(nv, Rat(1)));
  for (int j = 1; j <= n; ++j) add_zk(n - j, MPoly::variable(nv, j - 1));
  auto degree_of = [](const std::vector<MPoly>& c) {
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
      if (!c[static_cast<std::size_t>(j)].is_zero()) return j;
    return -1;
  };
  int m1 = degree_of(p1), m2 = degree_of(p2);
  if (m1 < 0 || m2 < 0) throw std::logic_error("degenerate elimination input");
  if (m1 == 0) {
    MPoly acc = MPoly::constant(nv, Rat(1));
    for (int i = 0; i < m2; ++i) acc = acc * p1[0];
    return acc;
  }
  int size = m1 + m2;
  std::vector<std::vector<MPoly>> syl(static_cast<std::size_t>(size),
                                      std::vector<MPoly>(static_cast<std::size_t>(size), MPoly(nv)));
  for (int r = 0; r < m2; ++r)
    for (int j = 0; j <= m1; ++j)
      syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
          p1[static_cast<std::size_t>(m1 - j)];
  for (int r = 0; r < m1; ++r)
    for (int j = 0; j <= m2; ++j)
      syl[static_cast<std::size_t>(m2 + r)][static_cast<std::size_t>(r + j)] =
          p2[static_cast<std::size_t>(m2 - j)];
  return det_bareiss(std::move(syl), nv);
}

UniPoly real_part_resultant_at(const MPoly& R, const SigmaPoint& a) {
  int n = R.nvars() - 1;
  if (a.n != n) throw std::invalid_argument("arity mismatch");
  std::vector<MPoly> subs;
  int s = -1;
  for (int k = 1; k <= n; ++k) {
    subs.push_back(MPoly::constant(1, Rat(s) * a.coords[static_cast<std::size_t>(k - 1)]));
    s = -s;
  }
  subs.push_back(MPoly::variable(1, 0));
  MPoly rx = R.substitute(subs);
  std::vector<Rat> c;
  for (const auto& [e, coef] : rx.terms()) {
    int deg = e[0];
    if (deg >= static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(deg + 1), Rat(0));
    c[static_cast<std::size_t>(deg)] = coef;
  }
  return UniPoly(std::move(c));
}

MPoly compose_with_sigma(const MPoly& g) {
  int n = g.nvars();
  std::vector<MPoly> subs;
  for (int k = 1; k <= n; ++k) subs.push_back(elementary_symmetric_poly(n, k));
  return g.substitute(subs);
}

}  // namespace bcov
