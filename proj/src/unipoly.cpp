#include "bcov/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bcov {

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
  UniPoly p = constant(Rat(1));
  for (const Rat& r : roots) p = p * UniPoly({-r, Rat(1)});
  return p;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> d(c_);
  for (auto& x : d) x = -x;
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t k = 0; k < c_.size(); ++k) d[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) d[k] += o.c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> d(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator*(const Rat& c) const {
  std::vector<Rat> d(c_);
  for (auto& x : d) x *= c;
  return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> r = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat coef = r[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= coef * b.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = rat_abs(c);
    if (ac != 1 || k == 0) os << rat_str(ac);
    if (k > 0) {
      if (ac != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/* Scale to a primitive integer polynomial with positive scaling factor. */
static UniPoly primitive_scale(const UniPoly& p) {
  if (p.is_zero()) return p;
  Int l(1), g(0);
  for (const Rat& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Rat> d;
  d.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) d.push_back(c * Rat(l));
  for (const Rat& c : d) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (g > 1)
    for (auto& c : d) c /= Rat(g);
  return UniPoly(std::move(d));
}

static int sign_at(const UniPoly& p, const std::optional<Rat>& x, int infsign) {
  /* infsign: +1 for +inf bound, -1 for -inf bound */
  if (x) return sign(p.eval(*x));
  int s = sign(p.leading());
  if (infsign < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

static int variations(const std::vector<UniPoly>& chain, const std::optional<Rat>& x,
                      int infsign) {
  int v = 0, prev = 0;
  for (const auto& f : chain) {
    int s = sign_at(f, x, infsign);
    if (s == 0) continue;  // drop-zeros convention: yields the right limit
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

static std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain;
  chain.push_back(primitive_scale(f));
  UniPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive_scale(d));
  while (true) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = UniPoly::divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_scale(-r));
  }
  return chain;
}

int sturm_count(const UniPoly& p, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi) {
  if (p.is_zero()) throw std::invalid_argument("undefined root count");
  if (lo && hi && *lo >= *hi) return 0;
  UniPoly f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  std::vector<UniPoly> chain = sturm_chain(f);
  return variations(chain, lo, -1) - variations(chain, hi, +1);
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  /* Yun */
  UniPoly d = p.derivative();
  UniPoly a = poly_gcd(p, d);
  UniPoly b = UniPoly::divmod(p, a).first;
  UniPoly c = UniPoly::divmod(d, a).first;
  UniPoly z = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = poly_gcd(b, z);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = UniPoly::divmod(b, g).first;
    UniPoly y = UniPoly::divmod(z, g).first;
    z = y - b.derivative();
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = poly_gcd(p, p.derivative());
  return UniPoly::divmod(p, g).first.monic();
}

/* Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b. */
static UniPoly prem(const UniPoly& a, const UniPoly& b) {
  Rat f = b.leading();
  int e = a.degree() - b.degree() + 1;
  Rat scale(1);
  for (int i = 0; i < e; ++i) scale *= f;
  return UniPoly::divmod(a * scale, b).second;
}

static Rat rat_pow(const Rat& x, int e) {
  Rat acc(1);
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

/* Fraction-free PRS: remainders stay integral and primitive; the exact
 * scalar corrections from pseudo-division and content stripping are
 * accumulated on the side. */
static Rat resultant_prs(UniPoly a, UniPoly b) {
  Rat acc(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() * b.degree()) % 2 == 1) acc = -acc;
    std::swap(a, b);
  }
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) return acc * rat_pow(b.leading(), da);
    UniPoly r = prem(a, b);
    if (r.is_zero()) return Rat(0);
    UniPoly rp = primitive_scale(r);
    /* r = gamma * rp with gamma > 0 */
    Rat gamma = r.leading() / rp.leading();
    int dr = rp.degree();
    /* Res(a,b) = (-1)^(da db) lc(b)^(da-dr) Res(b, a mod b),
       prem scale lc(b)^(da-db+1) and content gamma each raised to db. */
    if ((da * db) % 2 == 1) acc = -acc;
    acc *= rat_pow(b.leading(), da - dr) * rat_pow(gamma, db);
    acc /= rat_pow(b.leading(), (da - db + 1) * db);
    a = std::move(b);
    b = std::move(rp);
  }
}

Rat resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  if (p.degree() == 0) return rat_pow(p.leading(), q.degree());
  if (q.degree() == 0) return rat_pow(q.leading(), p.degree());
  UniPoly P = primitive_scale(p), Q = primitive_scale(q);
  Rat sp = p.leading() / P.leading();
  Rat sq = q.leading() / Q.leading();
  return rat_pow(sp, q.degree()) * rat_pow(sq, p.degree()) * resultant_prs(P, Q);
}

Rat elementary_symmetric_eval(const std::vector<Rat>& x, int k) {
  int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw std::invalid_argument("elementary symmetric index out of range");
  /* e[j] after processing i values = sigma_j of those values */
  std::vector<Rat> e(static_cast<std::size_t>(k + 1), Rat(0));
  e[0] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

Rat cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  Rat m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, rat_abs(p.coeff(k) / p.leading()));
  return m + 1;
}

}  // namespace bcov
