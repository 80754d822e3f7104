#include "bcov/fintop.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bcov {

static int popcount(Mask m) { return std::popcount(m); }

bool FinSpace::valid() const {
  if (static_cast<int>(up.size()) != n || n < 0 || n > 31) return false;
  for (int i = 0; i < n; ++i) {
    if (!leq(i, i)) return false;
    if (up[static_cast<std::size_t>(i)] & ~all()) return false;
    for (int j = 0; j < n; ++j)
      if (leq(i, j) && (up[static_cast<std::size_t>(j)] & ~up[static_cast<std::size_t>(i)]))
        return false;  // i<=j but up[j] not within up[i]: transitivity fails
  }
  return true;
}

Mask FinSpace::up_closure(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < n; ++i)
    if ((s >> i) & 1u) r |= up[static_cast<std::size_t>(i)];
  return r;
}

Mask FinSpace::down_closure(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < n; ++i)
    if (up[static_cast<std::size_t>(i)] & s) r |= Mask(1) << i;
  return r;
}

Mask FinSpace::interior(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < n; ++i)
    if (((s >> i) & 1u) && (up[static_cast<std::size_t>(i)] & ~s) == 0) r |= Mask(1) << i;
  return r;
}

std::vector<Mask> FinSpace::open_sets() const {
  std::vector<Mask> out;
  for (Mask s = 0; s <= all(); ++s) {
    if (is_open(s)) out.push_back(s);
    if (s == all()) break;
  }
  return out;
}

std::vector<Mask> FinSpace::open_sets_containing(int x) const {
  std::vector<Mask> out;
  for (Mask s : open_sets())
    if ((s >> x) & 1u) out.push_back(s);
  return out;
}

std::vector<Mask> FinSpace::connected_components(Mask s) const {
  std::vector<Mask> out;
  Mask left = s;
  while (left) {
    Mask comp = left & (-left);  // lowest point
    while (true) {
      Mask grown = comp;
      for (int i = 0; i < n; ++i) {
        if (!((s >> i) & 1u)) continue;
        Mask rel = (up[static_cast<std::size_t>(i)] | down_closure(Mask(1) << i)) & s;
        if (comp & ((Mask(1) << i) | rel))
          if ((comp >> i) & 1u || (rel & comp)) grown |= (Mask(1) << i) | rel;
      }
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool FinSpace::connected(Mask s) const {
  if (s == 0) return true;
  return connected_components(s).size() == 1;
}

FinSpace FinSpace::subspace(Mask s, std::vector<int>& idx) const {
  idx.clear();
  for (int i = 0; i < n; ++i)
    if ((s >> i) & 1u) idx.push_back(i);
  FinSpace sub;
  sub.n = static_cast<int>(idx.size());
  sub.up.resize(static_cast<std::size_t>(sub.n));
  for (int a = 0; a < sub.n; ++a) {
    Mask m = 0;
    for (int b = 0; b < sub.n; ++b)
      if (leq(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]))
        m |= Mask(1) << b;
    sub.up[static_cast<std::size_t>(a)] = m;
  }
  return sub;
}

std::string FinSpace::str() const {
  std::ostringstream os;
  os << "{n=" << n << ", leq=";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (leq(i, j) ? '1' : '0');
    if (i + 1 < n) os << '|';
  }
  os << "}";
  return os.str();
}

bool FinMap::continuous() const {
  for (int i = 0; i < X.n; ++i)
    for (int j = 0; j < X.n; ++j)
      if (X.leq(i, j) && !Y.leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

Mask FinMap::image(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < X.n; ++i)
    if ((s >> i) & 1u) r |= Mask(1) << f[static_cast<std::size_t>(i)];
  return r;
}

Mask FinMap::preimage(Mask t) const {
  Mask r = 0;
  for (int i = 0; i < X.n; ++i)
    if ((t >> f[static_cast<std::size_t>(i)]) & 1u) r |= Mask(1) << i;
  return r;
}

FinMap FinMap::restrict_to(Mask tx, Mask ty, std::vector<int>* xi, std::vector<int>* yi) const {
  if (image(tx) & ~ty) throw std::invalid_argument("restriction image escapes target");
  std::vector<int> ix, iy;
  FinMap out;
  out.X = X.subspace(tx, ix);
  out.Y = Y.subspace(ty, iy);
  std::vector<int> pos(static_cast<std::size_t>(Y.n), -1);
  for (int b = 0; b < out.Y.n; ++b) pos[static_cast<std::size_t>(iy[static_cast<std::size_t>(b)])] = b;
  out.f.resize(static_cast<std::size_t>(out.X.n));
  for (int a = 0; a < out.X.n; ++a)
    out.f[static_cast<std::size_t>(a)] =
        pos[static_cast<std::size_t>(f[static_cast<std::size_t>(ix[static_cast<std::size_t>(a)])])];
  if (xi) *xi = ix;
  if (yi) *yi = iy;
  return out;
}

std::string FinMap::str() const {
  std::ostringstream os;
  os << "X=" << X.str() << " Y=" << Y.str() << " f=[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

bool is_surjective(const FinMap& m) { return m.image(m.X.all()) == m.Y.all(); }

bool is_open_map(const FinMap& m) {
  for (int x = 0; x < m.X.n; ++x)
    if (!m.Y.is_open(m.image(m.X.up[static_cast<std::size_t>(x)]))) return false;
  return true;
}

bool is_closed_map(const FinMap& m) {
  for (int x = 0; x < m.X.n; ++x)
    if (!m.Y.is_closed(m.image(m.X.down_closure(Mask(1) << x)))) return false;
  return true;
}

bool is_separated(const FinMap& m) {
  for (int y = 0; y < m.Y.n; ++y) {
    Mask fib = m.fiber(y);
    for (int i = 0; i < m.X.n; ++i) {
      if (!((fib >> i) & 1u)) continue;
      for (int j = i + 1; j < m.X.n; ++j) {
        if (!((fib >> j) & 1u)) continue;
        if (m.X.up[static_cast<std::size_t>(i)] & m.X.up[static_cast<std::size_t>(j)]) return false;
      }
    }
  }
  return true;
}

CheckResult is_quasi_covering(const FinMap& m) {
  if (!m.continuous()) return {false, "not continuous"};
  if (!is_surjective(m)) return {false, "not surjective"};
  if (!is_open_map(m)) return {false, "not open"};
  if (!is_closed_map(m)) return {false, "not closed"};
  if (!is_separated(m)) return {false, "not separated"};
  return {true, ""};
}

Mask branching_locus(const FinMap& m, int cap) {
  if (m.X.n > cap || m.Y.n > cap) throw std::invalid_argument("space size above cap");
  std::vector<Mask> opens = m.X.open_sets();
  Mask B = 0;
  for (int x = 0; x < m.X.n; ++x) {
    bool regular = false;
    for (Mask U : opens) {
      if (!((U >> x) & 1u)) continue;
      if (!m.Y.is_open(m.image(U))) continue;
      /* injective and order-reflecting on U (continuity gives preservation) */
      bool ok = true;
      for (int i = 0; i < m.X.n && ok; ++i) {
        if (!((U >> i) & 1u)) continue;
        for (int j = 0; j < m.X.n && ok; ++j) {
          if (!((U >> j) & 1u) || i == j) continue;
          int fi = m.f[static_cast<std::size_t>(i)], fj = m.f[static_cast<std::size_t>(j)];
          if (fi == fj) ok = false;
          else if (m.Y.leq(fi, fj) && !m.X.leq(i, j)) ok = false;
        }
      }
      if (ok) {
        regular = true;
        break;
      }
    }
    if (!regular) B |= Mask(1) << x;
  }
  return B;
}

std::vector<NeighborhoodFamily> characteristic_families(const FinMap& m, int y, Mask V, int cap) {
  std::vector<NeighborhoodFamily> out;
  if (!m.Y.is_open(V) || !((V >> y) & 1u)) return out;
  Mask fib = m.fiber(y);
  int r = popcount(fib);
  if (r == 0) return out;
  Mask P = m.preimage(V);
  std::vector<Mask> comps = m.X.connected_components(P);
  std::vector<int> fiber_pts;
  std::vector<Mask> fibered;     // component containing the k-th fiber point
  std::vector<Mask> free_comps;  // no fiber point
  for (Mask c : comps) {
    Mask in = c & fib;
    if (popcount(in) > 1) return out;  // cannot split a component into sheets
    if (in == 0) free_comps.push_back(c);
  }
  for (int x = 0; x < m.X.n; ++x)
    if ((fib >> x) & 1u) {
      fiber_pts.push_back(x);
      for (Mask c : comps)
        if ((c >> x) & 1u) fibered.push_back(c);
    }
  long total = 1;
  for (std::size_t i = 0; i < free_comps.size() && total <= 4096; ++i) total *= r;
  long limit = std::min<long>(total, 4096);
  for (long a = 0; a < limit && static_cast<int>(out.size()) < cap; ++a) {
    std::vector<Mask> groups = fibered;
    long code = a;
    for (Mask c : free_comps) {
      groups[static_cast<std::size_t>(code % r)] |= c;
      code /= r;
    }
    bool ok = true;
    for (Mask g : groups)
      if (m.image(g) != V) ok = false;
    if (!ok) continue;
    out.push_back({V, groups, fiber_pts});
  }
  return out;
}

NeighborhoodFamily distinguished_neighborhood(const FinMap& m, int y, const std::vector<Mask>& W) {
  Mask fib = m.fiber(y);
  if (static_cast<int>(W.size()) != popcount(fib))
    throw std::invalid_argument("need one open per fiber point");
  Mask uni = 0;
  for (std::size_t j = 0; j < W.size(); ++j) {
    if (!m.X.is_open(W[j])) throw std::invalid_argument("W member not open");
    if (uni & W[j]) throw std::invalid_argument("W members not disjoint");
    uni |= W[j];
  }
  if (fib & ~uni) throw std::invalid_argument("W does not cover the fiber");
  Mask V0 = m.Y.all() & ~m.image(m.X.all() & ~uni);
  for (const Mask& w : W) V0 &= m.image(w);
  NeighborhoodFamily fam;
  fam.V = V0;
  Mask P = m.preimage(V0);
  for (int x = 0; x < m.X.n; ++x)
    if ((fib >> x) & 1u) {
      fam.fiber_points.push_back(x);
      for (const Mask& w : W)
        if ((w >> x) & 1u) fam.U.push_back(w & P);
    }
  return fam;
}

ExceptionalCheck check_exceptional(const FinMap& m, Mask U, Mask V) {
  FinMap g = m.restrict_to(U, V);
  Mask Bg = branching_locus(g);
  Mask Rg = g.image(Bg);
  Mask Vreg = g.Y.all() & ~Rg;
  if (Vreg == 0) return {false, 0};
  Mask Ureg = g.X.all() & ~g.preimage(Rg);
  FinMap h = g.restrict_to(Ureg, Vreg);
  if (!is_quasi_covering(h).ok) return {false, 0};
  if (branching_locus(h) != 0) return {false, 0};
  int d = -1;
  for (int z = 0; z < h.Y.n; ++z) {
    int c = popcount(h.fiber(z));
    if (d < 0) d = c;
    if (c != d) return {false, 0};
  }
  if (d <= 0) return {false, 0};
  return {true, d};
}

SpecialSearch find_special_neighborhood(const FinMap& m, int y) {
  std::vector<Mask> opens = m.Y.open_sets_containing(y);
  std::sort(opens.begin(), opens.end(),
            [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  for (Mask V : opens)
    for (const NeighborhoodFamily& fam : characteristic_families(m, y, V)) {
      std::vector<int> sheets;
      bool ok = true;
      for (Mask U : fam.U) {
        ExceptionalCheck ec = check_exceptional(m, U, V);
        if (!ec.exceptional) {
          ok = false;
          break;
        }
        sheets.push_back(ec.sheets);
      }
      if (ok) return {true, V, fam, sheets};
    }
  return {};
}

BranchedData is_branched_covering(const FinMap& m, int cap) {
  if (m.X.n > cap || m.Y.n > cap) throw std::invalid_argument("space size above cap");
  CheckResult q = is_quasi_covering(m);
  if (!q.ok) throw std::invalid_argument("not a quasi-covering: " + q.witness);
  BranchedData out;
  out.B = branching_locus(m, cap);
  out.R = m.image(out.B);
  Mask Xreg = m.X.all() & ~m.preimage(out.R);
  out.x_reg_dense = (m.X.down_closure(Xreg) == m.X.all());
  out.is_branched = out.x_reg_dense;
  if (!out.x_reg_dense) out.witness = "regular locus not dense";
  out.b.assign(static_cast<std::size_t>(m.X.n), 1);
  for (int y = 0; y < m.Y.n && out.is_branched; ++y) {
    SpecialSearch sp = find_special_neighborhood(m, y);
    if (!sp.found) {
      out.is_branched = false;
      out.witness = "no special neighborhood of point " + std::to_string(y);
      break;
    }
    for (std::size_t j = 0; j < sp.family.fiber_points.size(); ++j)
      out.b[static_cast<std::size_t>(sp.family.fiber_points[j])] = sp.sheets[j];
  }
  for (int x = 0; x < m.X.n; ++x)
    if (m.fiber(m.f[static_cast<std::size_t>(x)]) == (Mask(1) << x)) out.C |= Mask(1) << x;
  if (out.is_branched) {
    for (Mask comp : m.Y.connected_components(m.Y.all())) {
      int d = -1;
      for (int y = 0; y < m.Y.n; ++y) {
        if (!((comp >> y) & 1u) || ((out.R >> y) & 1u)) continue;
        int c = popcount(m.fiber(y));
        if (d < 0) d = c;
      }
      if (d < 0) {
        /* every point ramified: fall back to the index sum */
        for (int y = 0; y < m.Y.n; ++y)
          if ((comp >> y) & 1u) {
            d = 0;
            Mask fib = m.fiber(y);
            for (int x = 0; x < m.X.n; ++x)
              if ((fib >> x) & 1u) d += out.b[static_cast<std::size_t>(x)];
            break;
          }
      }
      out.component_d.emplace_back(comp, d);
    }
  }
  return out;
}

/* ---- lemma registry ---- */

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2b79f679955ULL;
  return z ^ (z >> 31);
}

/* all subsets when 2^n <= budget, else a deterministic sample */
template <class Fn>
void for_subsets(int n, int budget, std::uint64_t seed, Fn fn) {
  long total = 1L << n;
  if (total <= budget) {
    for (long s = 0; s < total; ++s) fn(static_cast<Mask>(s));
  } else {
    std::uint64_t st = seed * 0x2545F4914F6CDD1DULL + 1;
    for (int i = 0; i < budget; ++i)
      fn(static_cast<Mask>(splitmix64(st) & (static_cast<std::uint64_t>(total) - 1)));
  }
}

constexpr int kSubsetBudget = 96;

struct LemmaCtx {
  const FinMap& m;
  LemmaVerdict v;
  void fail(const std::string& why) {
    if (v.holds) {
      v.holds = false;
      v.counterexample = why + " on " + m.str();
    }
  }
};

void lemma_trivial(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_surjective(m)) return;
  c.v.qualifying = true;
  for_subsets(m.Y.n, kSubsetBudget, 1, [&](Mask Z) {
    Mask T = m.preimage(Z);
    for_subsets(m.X.n, kSubsetBudget, Z + 2, [&](Mask A) {
      if (m.image(A & T) != (m.image(A) & m.image(T)))
        c.fail("image of intersection with a saturated set");
    });
  });
}

void lemma_opcl(LemmaCtx& c) {
  const FinMap& m = c.m;
  bool open = is_open_map(m), closed = is_closed_map(m);
  if (!open && !closed) return;
  c.v.qualifying = true;
  if (open)
    for_subsets(m.Y.n, kSubsetBudget, 3, [&](Mask B) {
      if (m.X.down_closure(m.preimage(B)) != m.preimage(m.Y.down_closure(B)))
        c.fail("closure of preimage (open case)");
    });
  if (closed)
    for_subsets(m.X.n, kSubsetBudget, 4, [&](Mask A) {
      if (m.image(m.X.down_closure(A)) != m.Y.down_closure(m.image(A)))
        c.fail("image of closure (closed case)");
    });
}

void lemma_disting(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  c.v.qualifying = true;
  for (int y = 0; y < m.Y.n; ++y) {
    Mask fib = m.fiber(y);
    int r = popcount(fib);
    std::vector<Mask> W;
    for (int x = 0; x < m.X.n; ++x)
      if ((fib >> x) & 1u) W.push_back(m.X.up[static_cast<std::size_t>(x)]);
    NeighborhoodFamily fam = distinguished_neighborhood(m, y, W);
    if (!((fam.V >> y) & 1u)) {
      c.fail("V0 misses its center");
      return;
    }
    if (!m.Y.is_open(fam.V)) c.fail("V0 not open");
    Mask P = m.preimage(fam.V), uni = 0;
    for (Mask U : fam.U) {
      if (uni & U) c.fail("family members overlap");
      uni |= U;
      if (!m.X.is_open(U)) c.fail("family member not open");
      if (m.image(U) != fam.V) c.fail("family member does not map onto V0");
    }
    if (uni != P) c.fail("family does not partition the preimage");
    for (int z = 0; z < m.Y.n; ++z)
      if (((fam.V >> z) & 1u) && popcount(m.fiber(z)) < r)
        c.fail("fiber cardinality dropped inside V0");
  }
}

void lemma_ccs0(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  for (int y = 0; y < m.Y.n; ++y)
    for (Mask V : m.Y.open_sets_containing(y)) {
      if (!m.Y.connected(V)) continue;
      auto fams = characteristic_families(m, y, V);
      if (fams.empty()) continue;
      c.v.qualifying = true;
      std::vector<Mask> comps = m.X.connected_components(m.preimage(V));
      Mask fib = m.fiber(y);
      if (static_cast<int>(comps.size()) != popcount(fib))
        c.fail("component count differs from fiber cardinality");
      for (Mask comp : comps) {
        if (popcount(comp & fib) != 1) c.fail("component without exactly one fiber point");
        if (m.image(comp) != V) c.fail("component does not map onto V");
      }
      for (const auto& fam : fams)
        for (Mask U : fam.U)
          if (std::find(comps.begin(), comps.end(), U) == comps.end())
            c.fail("characteristic member is not a single component");
    }
}

void lemma_genbranch(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  c.v.qualifying = true;
  Mask R = m.image(branching_locus(m));
  for (int y = 0; y < m.Y.n; ++y) {
    Mask Uy = m.Y.up[static_cast<std::size_t>(y)];
    bool constant = true;
    int base = popcount(m.fiber(y));
    for (int z = 0; z < m.Y.n; ++z)
      if (((Uy >> z) & 1u) && popcount(m.fiber(z)) != base) constant = false;
    bool off_r = !((R >> y) & 1u);
    if (off_r != constant) c.fail("regular-value/constant-fiber biconditional");
  }
}

void lemma_max(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  c.v.qualifying = true;
  Mask R = m.image(branching_locus(m));
  int d = 0;
  for (int y = 0; y < m.Y.n; ++y) d = std::max(d, popcount(m.fiber(y)));
  for (int y = 0; y < m.Y.n; ++y)
    if (popcount(m.fiber(y)) == d && ((R >> y) & 1u))
      c.fail("maximal fiber over a ramification value");
}

void lemma_cuenta0(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  for (int y = 0; y < m.Y.n; ++y)
    for (Mask V : m.Y.open_sets_containing(y))
      for (const auto& fam : characteristic_families(m, y, V))
        for (Mask U : fam.U) {
          /* open G dense in U with constant fiber cardinality over image(G) */
          for (Mask G = U;; G = (G - 1) & U) {
            if (G != 0 && m.X.is_open(G) && (m.X.down_closure(G) & U) == U) {
              int d = -1;
              bool constant = true;
              Mask img = m.image(G);
              for (int z = 0; z < m.Y.n; ++z) {
                if (!((img >> z) & 1u)) continue;
                int k = popcount(m.fiber(z) & G);
                if (d < 0) d = k;
                if (k != d) constant = false;
              }
              if (constant && d >= 1) {
                c.v.qualifying = true;
                ExceptionalCheck ec = check_exceptional(m, U, V);
                if (!ec.exceptional || ec.sheets != d)
                  c.fail("constant-on-dense-open does not force exceptional sheet count");
              }
            }
            if (G == 0) break;
          }
        }
}

bool branched_or_skip(const FinMap& m, BranchedData& bd) {
  if (!is_quasi_covering(m).ok) return false;
  bd = is_branched_covering(m);
  return bd.is_branched;
}

void lemma_indexwell(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  std::vector<int> seen(static_cast<std::size_t>(m.X.n), -1);
  for (int y = 0; y < m.Y.n; ++y)
    for (Mask V : m.Y.open_sets_containing(y))
      for (const auto& fam : characteristic_families(m, y, V)) {
        std::vector<int> sheets;
        bool special = true;
        for (Mask U : fam.U) {
          ExceptionalCheck ec = check_exceptional(m, U, V);
          if (!ec.exceptional) {
            special = false;
            break;
          }
          sheets.push_back(ec.sheets);
        }
        if (!special) continue;
        for (std::size_t j = 0; j < fam.fiber_points.size(); ++j) {
          int x = fam.fiber_points[j];
          if (seen[static_cast<std::size_t>(x)] < 0)
            seen[static_cast<std::size_t>(x)] = sheets[j];
          else if (seen[static_cast<std::size_t>(x)] != sheets[j])
            c.fail("sheet count depends on the exceptional neighborhood");
        }
      }
}

void lemma_cuenta_i(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  for (int y = 0; y < m.Y.n; ++y) {
    SpecialSearch sp = find_special_neighborhood(m, y);
    if (!sp.found) {
      c.fail("branched covering without special neighborhood");
      return;
    }
    int dy = 0;
    Mask fib = m.fiber(y);
    for (int x = 0; x < m.X.n; ++x)
      if ((fib >> x) & 1u) dy += bd.b[static_cast<std::size_t>(x)];
    FinMap g = m.restrict_to(m.preimage(sp.V), sp.V);
    BranchedData gb = is_branched_covering(g);
    if (!gb.is_branched) c.fail("restriction over a special neighborhood not branched");
    for (const auto& [comp, d] : gb.component_d)
      if (d != dy) c.fail("restriction degree differs from the index sum");
  }
}

void lemma_cuenta_ii(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  if (!m.Y.connected(m.Y.all())) return;
  c.v.qualifying = true;
  Mask R = bd.R;
  int d = -1;
  for (int y = 0; y < m.Y.n; ++y) {
    if ((R >> y) & 1u) continue;
    int k = popcount(m.fiber(y));
    if (d < 0) d = k;
    if (k != d) c.fail("unramified fiber cardinality not constant on connected base");
  }
}

void lemma_cuenta_iii(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  for (int y = 0; y < m.Y.n; ++y) {
    Mask fib = m.fiber(y);
    bool found = false;
    for (Mask V : m.Y.open_sets_containing(y)) {
      for (const auto& fam : characteristic_families(m, y, V)) {
        bool inside = true, special = true;
        for (std::size_t j = 0; j < fam.U.size(); ++j) {
          int x = fam.fiber_points[j];
          if (fam.U[j] & ~m.X.up[static_cast<std::size_t>(x)]) inside = false;
        }
        if (!inside) continue;
        for (Mask U : fam.U)
          if (!check_exceptional(m, U, V).exceptional) special = false;
        if (special) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    (void)fib;
    if (!found) c.fail("no special neighborhood inside the minimal opens");
  }
}

void lemma_cuenta_iv(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  int maxb = 0;
  for (int v : bd.b) maxb = std::max(maxb, v);
  for (int e = 0; e <= maxb; ++e) {
    Mask s = 0;
    for (int x = 0; x < m.X.n; ++x)
      if (bd.b[static_cast<std::size_t>(x)] <= e) s |= Mask(1) << x;
    if (!m.X.is_open(s)) c.fail("index sublevel set not open");
  }
}

void lemma_cuenta_v(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  for (int x = 0; x < m.X.n; ++x)
    if ((bd.b[static_cast<std::size_t>(x)] == 1) != !((bd.B >> x) & 1u))
      c.fail("index-one/regular biconditional");
}

void check_restriction_laws(LemmaCtx& c, const BranchedData& bd, Mask T, Mask Z,
                            bool expect_r_equal) {
  const FinMap& m = c.m;
  std::vector<int> xi, yi;
  FinMap g = m.restrict_to(T, Z, &xi, &yi);
  if (!is_quasi_covering(g).ok) {
    c.fail("restriction not a quasi-covering");
    return;
  }
  BranchedData gb = is_branched_covering(g);
  if (!gb.is_branched) {
    c.fail("restriction not branched");
    return;
  }
  Mask Bg_old = 0;
  for (int a = 0; a < g.X.n; ++a)
    if ((gb.B >> a) & 1u) Bg_old |= Mask(1) << xi[static_cast<std::size_t>(a)];
  if (Bg_old != (bd.B & T)) c.fail("restricted branching locus differs from B ∩ T");
  Mask Rg_old = 0;
  for (int b = 0; b < g.Y.n; ++b)
    if ((gb.R >> b) & 1u) Rg_old |= Mask(1) << yi[static_cast<std::size_t>(b)];
  if (expect_r_equal) {
    if (Rg_old != (bd.R & Z)) c.fail("restricted ramification set differs from R ∩ Z");
  } else {
    if (Rg_old & ~(bd.R & Z)) c.fail("restricted ramification set escapes R ∩ Z");
  }
  for (int a = 0; a < g.X.n; ++a)
    if (gb.b[static_cast<std::size_t>(a)] !=
        bd.b[static_cast<std::size_t>(xi[static_cast<std::size_t>(a)])])
      c.fail("restricted index differs from b");
}

void lemma_restr(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  c.v.qualifying = true;
  for (Mask W : m.Y.open_sets()) {
    if (W == 0) continue;
    Mask cl = m.Y.down_closure(W);
    Mask extra = cl & ~W;
    for_subsets(popcount(extra), 8, W + 11, [&](Mask pick) {
      Mask Z = W;
      int bit = 0;
      for (int yy = 0; yy < m.Y.n; ++yy)
        if ((extra >> yy) & 1u) {
          if ((pick >> bit) & 1u) Z |= Mask(1) << yy;
          ++bit;
        }
      check_restriction_laws(c, bd, m.preimage(Z), Z, /*expect_r_equal=*/true);
    });
  }
}

void lemma_opcl2(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  std::vector<Mask> comps = m.X.connected_components(m.X.all());
  if (comps.size() < 2) return;  // only the trivial T
  c.v.qualifying = true;
  int k = static_cast<int>(comps.size());
  for (Mask pick = 1; pick < (Mask(1) << k) - 1; ++pick) {
    Mask T = 0;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1u) T |= comps[static_cast<std::size_t>(i)];
    Mask Z = m.image(T);
    std::vector<int> xi, yi;
    FinMap g = m.restrict_to(T, Z, &xi, &yi);
    if (!is_quasi_covering(g).ok) {
      c.fail("clopen restriction not a quasi-covering");
      continue;
    }
    BranchedData gb = is_branched_covering(g);
    if (!gb.is_branched) {
      c.fail("clopen restriction not branched");
      continue;
    }
    Mask Bg_old = 0;
    for (int a = 0; a < g.X.n; ++a)
      if ((gb.B >> a) & 1u) Bg_old |= Mask(1) << xi[static_cast<std::size_t>(a)];
    if (Bg_old != (bd.B & T)) c.fail("clopen restriction branching locus differs from B ∩ T");
    /* X_reg ∩ T ⊆ T_reg */
    Mask Xreg = m.X.all() & ~m.preimage(bd.R);
    Mask Treg_old = 0;
    Mask Treg = g.X.all() & ~g.preimage(gb.R);
    for (int a = 0; a < g.X.n; ++a)
      if ((Treg >> a) & 1u) Treg_old |= Mask(1) << xi[static_cast<std::size_t>(a)];
    if ((Xreg & T) & ~Treg_old) c.fail("regular points lost under clopen restriction");
  }
}

void lemma_rcc(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  std::vector<Mask> comps = m.Y.connected_components(m.Y.all());
  if (comps.size() < 2) return;
  c.v.qualifying = true;
  bool whole = is_branched_covering(m).is_branched;
  bool parts = true;
  for (Mask comp : comps) {
    FinMap g = m.restrict_to(m.preimage(comp), comp);
    if (!is_branched_covering(g).is_branched) parts = false;
  }
  if (whole != parts) c.fail("branched iff branched on every base component");
}

void lemma_sc(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  Mask R = m.image(branching_locus(m));
  for (int y = 0; y < m.Y.n; ++y) {
    bool has = false;
    for (Mask V : m.Y.open_sets_containing(y))
      if (!characteristic_families(m, y, V).empty() && m.Y.connected(V & ~R)) has = true;
    if (!has) return;  // hypothesis unmet
  }
  c.v.qualifying = true;
  if (!is_branched_covering(m).is_branched)
    c.fail("connected-off-R distinguished neighborhoods but not branched");
}

void lemma_nowhere(LemmaCtx& c) {
  const FinMap& m = c.m;
  if (!is_quasi_covering(m).ok) return;
  Mask R = m.image(branching_locus(m));
  Mask Xreg = m.X.all() & ~m.preimage(R);
  if (m.X.down_closure(Xreg) != m.X.all()) return;
  c.v.qualifying = true;
  for_subsets(m.X.n, kSubsetBudget, 17, [&](Mask Z) {
    if (!m.X.is_closed(Z) || m.X.interior(Z) != 0) return;
    Mask P = m.image(Z);
    if (!m.Y.is_closed(P) || m.Y.interior(P) != 0)
      c.fail("image of a closed nowhere dense set not closed nowhere dense");
  });
}

void lemma_colapseinB(LemmaCtx& c) {
  const FinMap& m = c.m;
  BranchedData bd;
  if (!branched_or_skip(m, bd)) return;
  int d = -1;
  bool constant = true;
  for (const auto& [comp, dc] : bd.component_d) {
    if (d < 0) d = dc;
    if (dc != d) constant = false;
  }
  if (!constant || d < 2) return;
  c.v.qualifying = true;
  if (bd.C & ~bd.B) c.fail("collapsing point outside the branching locus");
}

}  // namespace

std::vector<std::string> lemma_ids() {
  return {"trivial", "opcl",      "disting",   "ccs0",      "genbranch",
          "max",     "cuenta0",   "indexwell", "cuenta-i",  "cuenta-ii",
          "cuenta-iii", "cuenta-iv", "cuenta-v", "restr",    "opcl2",
          "rcc",     "sc",        "nowhere",   "colapseinB"};
}

LemmaVerdict check_lemma(const std::string& id, const FinMap& m) {
  LemmaCtx c{m, LemmaVerdict{id, false, true, ""}};
  if (!m.continuous()) return c.v;
  if (id == "trivial") lemma_trivial(c);
  else if (id == "opcl") lemma_opcl(c);
  else if (id == "disting") lemma_disting(c);
  else if (id == "ccs0") lemma_ccs0(c);
  else if (id == "genbranch") lemma_genbranch(c);
  else if (id == "max") lemma_max(c);
  else if (id == "cuenta0") lemma_cuenta0(c);
  else if (id == "indexwell") lemma_indexwell(c);
  else if (id == "cuenta-i") lemma_cuenta_i(c);
  else if (id == "cuenta-ii") lemma_cuenta_ii(c);
  else if (id == "cuenta-iii") lemma_cuenta_iii(c);
  else if (id == "cuenta-iv") lemma_cuenta_iv(c);
  else if (id == "cuenta-v") lemma_cuenta_v(c);
  else if (id == "restr") lemma_restr(c);
  else if (id == "opcl2") lemma_opcl2(c);
  else if (id == "rcc") lemma_rcc(c);
  else if (id == "sc") lemma_sc(c);
  else if (id == "nowhere") lemma_nowhere(c);
  else if (id == "colapseinB") lemma_colapseinB(c);
  else throw std::invalid_argument("unknown lemma id '" + id + "'");
  return c.v;
}

std::vector<FinSpace> enumerate_spaces(int n, bool up_to_iso) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumeration bound exceeded");
  std::vector<FinSpace> out;
  int bits = n * (n - 1);
  for (long code = 0; code < (1L << bits); ++code) {
    FinSpace s;
    s.n = n;
    s.up.assign(static_cast<std::size_t>(n), 0);
    int b = 0;
    for (int i = 0; i < n; ++i) {
      s.up[static_cast<std::size_t>(i)] |= Mask(1) << i;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((code >> b) & 1L) s.up[static_cast<std::size_t>(i)] |= Mask(1) << j;
        ++b;
      }
    }
    if (!s.valid()) continue;
    out.push_back(std::move(s));
  }
  if (up_to_iso) {
    std::vector<FinSpace> reps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const FinSpace& s : out) {
      /* canonical form: lexicographically smallest relabeling */
      std::vector<Mask> best;
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        std::vector<Mask> rel(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (s.leq(i, j))
              rel[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] |=
                  Mask(1) << perm[static_cast<std::size_t>(j)];
        if (best.empty() || rel < best) best = rel;
      } while (std::next_permutation(perm.begin(), perm.end()));
      bool dup = false;
      for (const FinSpace& r : reps)
        if (r.up == best) dup = true;
      if (!dup) {
        FinSpace rs;
        rs.n = n;
        rs.up = best;
        reps.push_back(std::move(rs));
      }
    }
    return reps;
  }
  return out;
}

static void run_registry(const FinMap& m, FuzzSummary& sum) {
  for (const std::string& id : lemma_ids()) {
    LemmaVerdict v = check_lemma(id, m);
    auto& [q, h] = sum.lemma_counts[id];
    if (v.qualifying) {
      ++q;
      if (v.holds) ++h;
      else if (sum.failures.size() < 16)
        sum.failures.push_back(id + ": " + v.counterexample);
    }
  }
}

static FinSpace random_space(std::mt19937_64& rng, int n) {
  FinSpace s;
  s.n = n;
  s.up.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) s.up[static_cast<std::size_t>(i)] |= Mask(1) << i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng() % 4 == 0) s.up[static_cast<std::size_t>(i)] |= Mask(1) << j;
  /* transitive closure */
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (s.leq(i, k)) s.up[static_cast<std::size_t>(i)] |= s.up[static_cast<std::size_t>(k)];
  return s;
}

FuzzSummary fuzz(std::uint64_t seed, long trials, int max_points) {
  if (max_points < 1 || max_points > 10) throw std::invalid_argument("max_points out of range");
  std::mt19937_64 rng(seed);
  FuzzSummary sum;
  for (long t = 0; t < trials; ++t) {
    ++sum.trials;
    FinMap m;
    if (rng() % 4 == 0) {
      /* k disjoint copies of a random base, projected: always quasi */
      int ny = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_points / 2)));
      int k = 1 + static_cast<int>(rng() % 2);
      if (ny * k > max_points) k = 1;
      m.Y = random_space(rng, ny);
      m.X.n = ny * k;
      m.X.up.assign(static_cast<std::size_t>(m.X.n), 0);
      for (int copy = 0; copy < k; ++copy)
        for (int i = 0; i < ny; ++i) {
          m.X.up[static_cast<std::size_t>(copy * ny + i)] =
              m.Y.up[static_cast<std::size_t>(i)] << (copy * ny);
          m.f.push_back(i);
        }
    } else {
      int nx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_points));
      int ny = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nx));
      m.X = random_space(rng, nx);
      m.Y = random_space(rng, ny);
      m.f.resize(static_cast<std::size_t>(nx));
      for (int i = 0; i < nx; ++i) m.f[static_cast<std::size_t>(i)] = static_cast<int>(rng() % static_cast<std::uint64_t>(ny));
    }
    if (!m.continuous()) continue;
    ++sum.continuous;
    if (!is_quasi_covering(m).ok) continue;
    ++sum.quasi;
    run_registry(m, sum);
  }
  return sum;
}

FuzzSummary sweep(int max_domain, int max_codomain) {
  if (max_domain < 1 || max_domain > 4 || max_codomain < 1 || max_codomain > 4)
    throw std::invalid_argument("sweep bounds out of range");
  FuzzSummary sum;
  std::vector<std::vector<FinSpace>> dom, cod;
  for (int n = 1; n <= max_domain; ++n) dom.push_back(enumerate_spaces(n));
  for (int n = 1; n <= max_codomain; ++n) cod.push_back(enumerate_spaces(n));
  for (const auto& ys : cod)
    for (const FinSpace& Y : ys)
      for (const auto& xs : dom)
        for (const FinSpace& X : xs) {
          long total = 1;
          for (int i = 0; i < X.n; ++i) total *= Y.n;
          for (long code = 0; code < total; ++code) {
            FinMap m;
            m.X = X;
            m.Y = Y;
            long cc = code;
            m.f.resize(static_cast<std::size_t>(X.n));
            for (int i = 0; i < X.n; ++i) {
              m.f[static_cast<std::size_t>(i)] = static_cast<int>(cc % Y.n);
              cc /= Y.n;
            }
            ++sum.trials;
            if (!m.continuous()) continue;
            ++sum.continuous;
            if (!is_quasi_covering(m).ok) continue;
            ++sum.quasi;
            run_registry(m, sum);
          }
        }
  return sum;
}

}  // namespace bcov
