#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bcov/bezoutian.hpp"
#include "bcov/fintop.hpp"
#include "bcov/fixtures.hpp"
#include "bcov/plcov.hpp"

using namespace bcov;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++g_failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::mt19937 rng(12345);

Rat rrat(int bound, int maxden) {
  Rat r(static_cast<long>(rng() % (2 * bound + 1)) - bound,
        1 + static_cast<long>(rng() % maxden));
  r.canonicalize();
  return r;
}

std::vector<Rat> random_tuple(int n) {
  std::vector<Rat> x;
  for (int i = 0; i < n; ++i) x.push_back(rrat(2, 2));
  return x;
}

/* base [0,4]; full-width sheets plus wedges that rejoin, so L = R holds */
PLCovering random_covering() {
  PLCovering cov;
  cov.base = {{Rat(0), Rat(4)}};
  int sheets = 1 + static_cast<int>(rng() % 3);
  for (int s = 0; s < sheets; ++s) {
    Rat slope = rrat(2, 2);
    Rat icpt = Rat(10 * (s + 1)) + rrat(3, 2);
    cov.segments.push_back({Rat(0), Rat(4), slope, icpt});
    if (rng() % 2) {
      Rat bump(1 + static_cast<long>(rng() % 3));
      Rat up = slope + bump;
      cov.segments.push_back({Rat(0), Rat(2), up, icpt});
      cov.segments.push_back({Rat(2), Rat(4), slope - bump, icpt + bump * 4});
    }
  }
  return cov;
}

/* shared property pool for criterion 8 */
struct PropertyPool {
  long pl_instances = 0;
  long fin_instances = 0;
  std::vector<std::string> violations;
} g_pool;

void pool_pl(const PLCovering& cov, const BranchReport& rep) {
  if (!rep.is_branched) return;
  ++g_pool.pl_instances;
  auto note = [&](const std::string& s) {
    if (g_pool.violations.size() < 5) g_pool.violations.push_back("pl: " + s);
  };
  std::map<Rat, std::pair<int, int>> per_x;  // x -> (sum b, fiber size)
  for (const auto& ip : rep.b) {
    per_x[ip.p.x].first += ip.index;
    per_x[ip.p.x].second += 1;
    bool in_B = std::find(rep.B.begin(), rep.B.end(), ip.p) != rep.B.end();
    if ((ip.index == 1) != !in_B) note("b(x)=1 iff x off B");
  }
  for (const auto& [x, sums] : per_x) {
    int d = 0;
    bool interior = false;
    for (const auto& [iv, cd] : rep.component_d)
      if (iv.lo <= x && x <= iv.hi) {
        d = cd;
        interior = iv.lo < x && x < iv.hi;
      }
    if (interior && sums.first != d) note("sum of b over fiber equals d");
    if (sums.second == d)
      for (const auto& ip : rep.b)
        if (ip.p.x == x && ip.index != 1) note("maximal fiber points are regular");
  }
  int d0 = -1;
  bool constant_d = true;
  for (const auto& [iv, cd] : rep.component_d) {
    if (d0 < 0) d0 = cd;
    if (cd != d0) constant_d = false;
  }
  if (constant_d && d0 > 1)
    for (const auto& p : rep.C)
      if (std::find(rep.B.begin(), rep.B.end(), p) == rep.B.end())
        note("C inside B when d > 1");
  (void)cov;
}

void pool_fin(const FinMap& m, const BranchedData& bd) {
  if (!bd.is_branched) return;
  ++g_pool.fin_instances;
  auto note = [&](const std::string& s) {
    if (g_pool.violations.size() < 5) g_pool.violations.push_back("fin: " + s);
  };
  for (int x = 0; x < m.X.n; ++x) {
    bool in_B = (bd.B >> x) & 1u;
    if ((bd.b[static_cast<std::size_t>(x)] == 1) != !in_B) note("b(x)=1 iff x off B");
  }
  for (const auto& [comp, d] : bd.component_d)
    for (int y = 0; y < m.Y.n; ++y) {
      if (!((comp >> y) & 1u)) continue;
      int sum = 0, card = 0;
      for (int x = 0; x < m.X.n; ++x)
        if (m.f[static_cast<std::size_t>(x)] == y) {
          sum += bd.b[static_cast<std::size_t>(x)];
          ++card;
        }
      if (sum != d) note("sum of b over fiber equals d");
      if (card == d)
        for (int x = 0; x < m.X.n; ++x)
          if (m.f[static_cast<std::size_t>(x)] == y && bd.b[static_cast<std::size_t>(x)] != 1)
            note("maximal fiber points are regular");
    }
  int bmax = 1;
  for (int v : bd.b) bmax = std::max(bmax, v);
  for (int e = 1; e <= bmax; ++e) {
    Mask le = 0;
    for (int x = 0; x < m.X.n; ++x)
      if (bd.b[static_cast<std::size_t>(x)] <= e) le |= Mask(1) << x;
    if (!m.X.is_open(le)) note("{b <= e} open");
  }
  int d0 = -1;
  bool constant_d = true;
  for (const auto& [comp, d] : bd.component_d) {
    if (d0 < 0) d0 = d;
    if (d != d0) constant_d = false;
  }
  if (constant_d && d0 > 1 && (bd.C & ~bd.B)) note("C inside B when d > 1");
}

void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string msg = "counterexample fixture reproduced exactly";
  try {
    PLCovering cov = plcov_fixture("notbranched-i");
    BranchReport rep = analyze(cov);
    ok = ok && rep.is_quasi && !rep.is_branched;
    std::vector<PLPoint> wantB{{Rat(0), Rat(3, 2)}, {Rat(0), Rat(3)}};
    ok = ok && rep.B == wantB && rep.R == std::vector<Rat>{Rat(0)};
    ok = ok && fiber_at(cov, Rat(0)).size() == 2;
    for (const Rat& x : {Rat(-2), Rat(-1), Rat(-1, 2), Rat(1, 3), Rat(1), Rat(2)})
      ok = ok && fiber_at(cov, x).size() == 3;
    ok = ok && rep.branch_witness && rep.branch_witness->p == PLPoint{Rat(0), Rat(3, 2)} &&
         rep.branch_witness->left == 1 && rep.branch_witness->right == 2;
    pool_pl(cov, rep);
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  double ms = ms_since(t0);
  if (ms >= 100.0) {
    ok = false;
    msg += " [over 0.1 s budget]";
  }
  verdict(1, ok, msg + " (" + std::to_string(ms) + " ms)");
}

void criterion2() {
  bool ok = true;
  std::string msg = "fiber cardinality, index, section and diagonal laws";
  double worst5 = 0;
  try {
    for (int n : {2, 3, 4, 5}) {
      int trials = n == 5 ? 10 : 100;
      for (int t = 0; t < trials && ok; ++t) {
        std::vector<Rat> x = random_tuple(n);
        SigmaPoint a = sigma_map(x);
        auto t0 = Clock::now();
        BezFiber fib = fiber(a);
        if (n == 5) worst5 = std::max(worst5, ms_since(t0));

        std::map<Rat, int> mult;
        for (const Rat& v : x) ++mult[v];
        long r = 1, nfact = 1;
        for (const auto& [v, k] : mult)
          for (int i = 2; i <= k; ++i) r *= i;
        for (int i = 2; i <= n; ++i) nfact *= i;
        ok = ok && fib.index() == r && fib.d() == nfact / r;
        ok = ok && static_cast<long>(fib.d()) * fib.index() == fib.sheet_total();
        bool off_diag = mult.size() == static_cast<std::size_t>(n);
        ok = ok && (fib.index() == 1) == off_diag;
        ok = ok && is_collapse_point(x) == (mult.size() == 1);

        std::vector<AlgebraicReal> sec = section(a);
        std::vector<Rat> secv;
        for (auto& s : sec) secv.push_back(s.value());
        ok = ok && std::is_sorted(secv.begin(), secv.end());
        SigmaPoint sa = sigma_map(secv);
        ok = ok && sa.coords == a.coords;
        bool in_fiber = false;
        if (fib.all_rational())
          for (int i = 0; i < fib.d() && !in_fiber; ++i)
            in_fiber = fib.point_rational(i) == secv;
        ok = ok && in_fiber;
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  if (worst5 >= 1000.0) {
    ok = false;
    msg += " [n=5 fiber over 1 s budget]";
  }
  verdict(2, ok, msg + " (slowest n=5 fiber " + std::to_string(worst5) + " ms)");
}

void criterion3() {
  bool ok = true;
  std::string msg = "averaged pullbacks recover coordinate values exactly";
  try {
    for (int n : {2, 3}) {
      MPoly u1 = MPoly::variable(n, 0), u2 = MPoly::variable(n, 1);
      std::vector<MPoly> gs{u1, u2, u1 * u2 + MPoly::constant(n, Rat(3))};
      for (int t = 0; t < 50 && ok; ++t) {
        SigmaPoint a = sigma_map(random_tuple(n));
        for (const MPoly& g : gs)
          ok = ok && mu_exact(a, compose_with_sigma(g)) == g.eval(a.coords);
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  verdict(3, ok, msg);
}

void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string msg = "integral annihilators, exact and certified interval";
  try {
    for (int n : {2, 3}) {
      MPoly f1 = MPoly::variable(n, 0);
      MPoly f2 = f1 * f1 - MPoly::variable(n, 1);
      for (int t = 0; t < 25 && ok; ++t) {
        SigmaPoint a = sigma_map(random_tuple(n));
        BezFiber fib = fiber(a);
        bool rat = fib.all_rational();
        ok = ok && rat;
        for (const MPoly& f : {f1, f2}) {
          UniPoly p = integral_poly_exact(a, f);
          ok = ok && p.degree() == static_cast<int>(fib.sheet_total());
          for (int i = 0; i < fib.d() && ok; ++i)
            ok = ok && p.eval(f.eval(fib.point_rational(i))) == 0;
        }
      }
    }
    Rat width(1, 1000000000);
    MPoly f = MPoly::variable(2, 0);
    for (long k : {2, 3, 5, 6, 7, 8, 10, 11, 12, 13}) {
      SigmaPoint a(2, {Rat(0), Rat(-k)});  // roots +-sqrt(k)
      IntegralPolyEnclosure enc = integral_poly_interval(a, f, width);
      for (const QInterval& v : enc.value_at_fiber)
        ok = ok && v.contains(Rat(0)) && v.hi - v.lo < width;
      if (!ok) break;
    }
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  double ms = ms_since(t0);
  if (ms >= 5000.0) {
    ok = false;
    msg += " [over 5 s budget]";
  }
  verdict(4, ok, msg + " (" + std::to_string(ms) + " ms)");
}

void criterion5() {
  bool ok = true;
  std::string msg = "real-part resultant vanishes at every real root";
  try {
    Rat width(1, 1000000000);
    for (int n : {1, 2, 3}) {
      MPoly R = real_part_resultant(n);
      for (int t = 0; t < 50 && ok; ++t) {
        SigmaPoint a = sigma_map(random_tuple(n));
        UniPoly Rp = real_part_resultant_at(R, a);
        ok = ok && !Rp.is_zero();
        for (auto& root : section(a)) ok = ok && Rp.eval(root.value()) == 0;
      }
    }
    MPoly R2 = real_part_resultant(2);
    for (long k : {2, 3, 5}) {
      SigmaPoint a(2, {Rat(0), Rat(-k)});
      UniPoly Rp = real_part_resultant_at(R2, a);
      for (auto root : section(a)) {
        QInterval v{Rat(0), Rat(1)};
        do {
          root.refine();
          v = eval_interval(Rp, {root.lo(), root.hi()});
        } while (v.hi - v.lo >= width);
        ok = ok && v.contains(Rat(0));
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  verdict(5, ok, msg);
}

void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string msg = "exhaustive lemma sweep plus deterministic fuzzing";
  try {
    FuzzSummary s = sweep(4, 3);
    ok = ok && s.failures.empty() && s.quasi > 0;
    FuzzSummary f1 = fuzz(42, 10000, 7);
    FuzzSummary f2 = fuzz(42, 10000, 7);
    ok = ok && f1.failures.empty() && f1.trials == 10000;
    ok = ok && f1.quasi == f2.quasi && f1.continuous == f2.continuous &&
         f1.lemma_counts == f2.lemma_counts;
    msg += " (" + std::to_string(s.quasi) + " swept, " + std::to_string(f1.quasi) +
           " fuzzed quasi-coverings)";
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  double ms = ms_since(t0);
  if (ms >= 60000.0) {
    ok = false;
    msg += " [over 60 s budget]";
  }
  verdict(6, ok, msg + " (" + std::to_string(ms) + " ms)");
}

void criterion7() {
  bool ok = true;
  std::string msg = "restriction and component selection laws";
  try {
    for (int t = 0; t < 100 && ok; ++t) {
      PLCovering cov = random_covering();
      validate(cov);
      BranchReport rep = analyze(cov);
      pool_pl(cov, rep);

      Rat zlo(1), zhi(3);
      PLCovering sub = restrict_base(cov, zlo, zhi);
      BranchReport srep = analyze(sub);
      pool_pl(sub, srep);
      std::vector<PLPoint> wantB;
      for (const auto& p : rep.B)
        if (zlo <= p.x && p.x <= zhi) wantB.push_back(p);
      ok = ok && srep.B == wantB;
      std::vector<Rat> wantR;
      for (const auto& r : rep.R)
        if (zlo <= r && r <= zhi) wantR.push_back(r);
      ok = ok && srep.R == wantR;
      for (const auto& ip : srep.b) {
        int want = 1;
        for (const auto& jp : rep.b)
          if (jp.p == ip.p) want = jp.index;
        ok = ok && ip.index == want;
      }

      auto comps = components(cov);
      for (std::size_t c = 0; c < comps.size() && ok; ++c) {
        PLCovering sel = select_components(cov, {static_cast<int>(c)});
        BranchReport crep = analyze(sel);
        pool_pl(sel, crep);
        for (const auto& p : crep.B) {
          bool in_parent = std::find(rep.B.begin(), rep.B.end(), p) != rep.B.end();
          ok = ok && in_parent;
        }
        for (const auto& ip : crep.b) {
          int want = 1;
          for (const auto& jp : rep.b)
            if (jp.p == ip.p) want = jp.index;
          ok = ok && ip.index == want;
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  verdict(7, ok, msg);
}

void criterion8() {
  bool ok = true;
  std::string msg = "index and collapse properties on every branched instance";
  try {
    pool_pl(plcov_fixture("x-cross"), analyze(plcov_fixture("x-cross")));
    FinMap fx = fintop_fixture("finite-x");
    pool_fin(fx, is_branched_covering(fx));
    auto doms = enumerate_spaces(4);
    std::vector<FinSpace> small;
    for (int n = 1; n <= 4; ++n)
      for (const auto& s : enumerate_spaces(n)) small.push_back(s);
    std::vector<FinSpace> codom;
    for (int n = 1; n <= 3; ++n)
      for (const auto& s : enumerate_spaces(n)) codom.push_back(s);
    for (const FinSpace& X : small)
      for (const FinSpace& Y : codom) {
        long total = 1;
        for (int i = 0; i < X.n; ++i) total *= Y.n;
        for (long code = 0; code < total; ++code) {
          FinMap m{X, Y, {}};
          long c = code;
          for (int i = 0; i < X.n; ++i) {
            m.f.push_back(static_cast<int>(c % Y.n));
            c /= Y.n;
          }
          if (!is_quasi_covering(m).ok) continue;
          pool_fin(m, is_branched_covering(m));
        }
      }
    ok = g_pool.violations.empty() && g_pool.pl_instances >= 50 &&
         g_pool.fin_instances >= 50;
    msg += " (" + std::to_string(g_pool.pl_instances) + " geometric, " +
           std::to_string(g_pool.fin_instances) + " finite instances)";
    for (const auto& v : g_pool.violations) msg += "; violated " + v;
  } catch (const std::exception& e) {
    ok = false;
    msg += std::string(" (exception: ") + e.what() + ")";
  }
  verdict(8, ok, msg);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
