#include "bcov/plcov.hpp"

#include <algorithm>
#include <numeric>

namespace bcov {

void validate(const PLCovering& cov) {
  if (cov.base.empty()) throw ValidationError("empty base", {});
  for (std::size_t i = 0; i < cov.base.size(); ++i) {
    if (!(cov.base[i].lo < cov.base[i].hi))
      throw ValidationError("degenerate base interval", {});
    if (i > 0 && !(cov.base[i - 1].hi < cov.base[i].lo))
      throw ValidationError("base intervals out of order or overlapping", {});
  }
  for (std::size_t i = 0; i < cov.segments.size(); ++i) {
    const Segment& s = cov.segments[i];
    if (!(s.x_lo < s.x_hi))
      throw ValidationError("degenerate or inverted segment", {static_cast<int>(i)});
    bool inside = false;
    for (const auto& b : cov.base)
      if (b.lo <= s.x_lo && s.x_hi <= b.hi) inside = true;
    if (!inside)
      throw ValidationError("segment projects outside the base", {static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < cov.segments.size(); ++i)
    for (std::size_t j = i + 1; j < cov.segments.size(); ++j) {
      const Segment &a = cov.segments[i], &b = cov.segments[j];
      if (a.same_line(b) && std::max(a.x_lo, b.x_lo) < std::min(a.x_hi, b.x_hi))
        throw ValidationError("collinear overlapping segments",
                              {static_cast<int>(i), static_cast<int>(j)});
    }
}

std::vector<Rat> critical_values(const PLCovering& cov) {
  std::vector<Rat> xs;
  for (const auto& b : cov.base) {
    xs.push_back(b.lo);
    xs.push_back(b.hi);
  }
  for (const auto& s : cov.segments) {
    xs.push_back(s.x_lo);
    xs.push_back(s.x_hi);
  }
  for (std::size_t i = 0; i < cov.segments.size(); ++i)
    for (std::size_t j = i + 1; j < cov.segments.size(); ++j) {
      const Segment &a = cov.segments[i], &b = cov.segments[j];
      if (a.slope == b.slope) continue;
      Rat x = (b.intercept - a.intercept) / (a.slope - b.slope);
      if (a.covers(x) && b.covers(x)) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

static bool in_base(const PLCovering& cov, const Rat& x) {
  for (const auto& b : cov.base)
    if (b.lo <= x && x <= b.hi) return true;
  return false;
}

std::vector<PLPoint> fiber_at(const PLCovering& cov, const Rat& x0) {
  if (!in_base(cov, x0)) throw std::invalid_argument("x0 outside base");
  std::vector<PLPoint> pts;
  for (const auto& s : cov.segments)
    if (s.covers(x0)) pts.push_back({x0, s.y_at(x0)});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::pair<int, int> branch_counts(const PLCovering& cov, const PLPoint& p) {
  std::vector<const Segment*> left, right;
  bool on_total = false;
  for (const auto& s : cov.segments) {
    if (!s.covers(p.x) || s.y_at(p.x) != p.y) continue;
    on_total = true;
    if (s.x_lo < p.x) left.push_back(&s);
    if (s.x_hi > p.x) right.push_back(&s);
  }
  if (!on_total) throw std::invalid_argument("point not on the total space");
  auto distinct_lines = [](std::vector<const Segment*>& v) {
    int c = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < i; ++j)
        if (v[i]->same_line(*v[j])) dup = true;
      if (!dup) ++c;
    }
    return c;
  };
  return {distinct_lines(left), distinct_lines(right)};
}

BranchReport analyze(const PLCovering& cov) {
  validate(cov);
  BranchReport rep;
  rep.is_quasi = true;
  rep.is_branched = true;
  std::vector<Rat> crit = critical_values(cov);

  auto fail_quasi = [&](const BranchWitness& w) {
    if (rep.is_quasi) {
      rep.is_quasi = false;
      rep.quasi_witness = w;
    }
    rep.is_branched = false;
  };

  for (const auto& comp : cov.base) {
    std::vector<Rat> cs;
    for (const Rat& x : crit)
      if (comp.lo <= x && x <= comp.hi) cs.push_back(x);
    /* open gaps between consecutive critical values: constant fiber count */
    std::vector<int> comp_counts;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      Rat mid = (cs[i] + cs[i + 1]) / 2;
      int cnt = static_cast<int>(fiber_at(cov, mid).size());
      rep.d_profile.push_back({cs[i], cs[i + 1], cnt});
      comp_counts.push_back(cnt);
      if (cnt == 0)
        fail_quasi({{mid, Rat(0)}, 0, 0, "empty fiber at x=" + rat_str(mid)});
      if (cnt == 1) rep.collapse_intervals.push_back({cs[i], cs[i + 1]});
    }
    for (const Rat& x : cs) {
      std::vector<PLPoint> fib = fiber_at(cov, x);
      if (fib.empty()) {
        fail_quasi({{x, Rat(0)}, 0, 0, "empty fiber at x=" + rat_str(x)});
        continue;
      }
      if (fib.size() == 1) rep.C.push_back(fib[0]);
      bool at_lo = (x == comp.lo), at_hi = (x == comp.hi);
      for (const auto& p : fib) {
        auto [L, R] = branch_counts(cov, p);
        int inward_l = at_lo ? 0 : L, inward_r = at_hi ? 0 : R;
        /* openness: a germ must continue to each side that exists in the base */
        if ((!at_lo && L == 0) || (!at_hi && R == 0))
          fail_quasi({p, L, R, "projection not open at (" + rat_str(p.x) + "," + rat_str(p.y) + ")"});
        bool branch = at_lo ? (R >= 2) : at_hi ? (L >= 2) : (L >= 2 || R >= 2);
        int index = at_lo ? R : at_hi ? L : L;
        if (branch) {
          rep.B.push_back(p);
          rep.R.push_back(p.x);
        }
        if (!at_lo && !at_hi && L != R) {
          if (rep.is_branched && !rep.branch_witness)
            rep.branch_witness = BranchWitness{p, L, R, "left/right germ counts differ"};
          rep.is_branched = false;
        }
        rep.b.push_back({p, index});
      }
    }
    if (rep.is_branched) {
      int d = comp_counts.empty() ? 0 : comp_counts[0];
      for (int c : comp_counts)
        if (c != d) {
          /* cannot happen when L = R holds at every interior point */
          rep.is_branched = false;
        }
      rep.component_d.emplace_back(comp, d);
    }
  }
  if (!rep.is_quasi && rep.quasi_witness && !rep.branch_witness)
    rep.branch_witness = rep.quasi_witness;
  if (!rep.is_branched) rep.component_d.clear();
  std::sort(rep.B.begin(), rep.B.end());
  rep.B.erase(std::unique(rep.B.begin(), rep.B.end()), rep.B.end());
  std::sort(rep.R.begin(), rep.R.end());
  rep.R.erase(std::unique(rep.R.begin(), rep.R.end()), rep.R.end());
  std::sort(rep.C.begin(), rep.C.end());
  rep.C.erase(std::unique(rep.C.begin(), rep.C.end()), rep.C.end());
  return rep;
}

PLCovering restrict_base(const PLCovering& cov, const Rat& z_lo, const Rat& z_hi) {
  if (!(z_lo < z_hi)) throw std::invalid_argument("empty or inverted subinterval");
  if (!(cov.base.front().lo <= z_lo && z_hi <= cov.base.back().hi))
    throw std::invalid_argument("subinterval outside base");
  PLCovering out;
  for (const auto& b : cov.base) {
    Rat lo = std::max(b.lo, z_lo), hi = std::min(b.hi, z_hi);
    if (lo < hi) out.base.push_back({lo, hi});
  }
  if (out.base.empty()) throw std::invalid_argument("subinterval misses the base");
  for (const auto& s : cov.segments) {
    Rat lo = std::max(s.x_lo, z_lo), hi = std::min(s.x_hi, z_hi);
    if (lo < hi) out.segments.push_back({lo, hi, s.slope, s.intercept});
  }
  return out;
}

static bool segments_touch(const Segment& a, const Segment& b) {
  Rat lo = std::max(a.x_lo, b.x_lo), hi = std::min(a.x_hi, b.x_hi);
  if (lo > hi) return false;
  if (a.slope == b.slope) return a.intercept == b.intercept;  // overlap is at most a point
  Rat x = (b.intercept - a.intercept) / (a.slope - b.slope);
  return lo <= x && x <= hi;
}

std::vector<std::vector<int>> components(const PLCovering& cov) {
  int n = static_cast<int>(cov.segments.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (segments_touch(cov.segments[static_cast<std::size_t>(i)],
                         cov.segments[static_cast<std::size_t>(j)]))
        parent[static_cast<std::size_t>(find(i))] = find(j);
  std::vector<std::vector<int>> comps;
  std::vector<int> root_comp(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_comp[static_cast<std::size_t>(r)] < 0) {
      root_comp[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(root_comp[static_cast<std::size_t>(r)])].push_back(i);
  }
  return comps;
}

PLCovering select_components(const PLCovering& cov, const std::vector<int>& which) {
  std::vector<std::vector<int>> comps = components(cov);
  PLCovering out;
  std::vector<BaseInterval> proj;
  for (int w : which) {
    if (w < 0 || w >= static_cast<int>(comps.size()))
      throw std::invalid_argument("invalid component index");
    const auto& comp = comps[static_cast<std::size_t>(w)];
    Rat lo = cov.segments[static_cast<std::size_t>(comp[0])].x_lo;
    Rat hi = cov.segments[static_cast<std::size_t>(comp[0])].x_hi;
    for (int i : comp) {
      const Segment& s = cov.segments[static_cast<std::size_t>(i)];
      lo = std::min(lo, s.x_lo);
      hi = std::max(hi, s.x_hi);
      out.segments.push_back(s);
    }
    proj.push_back({lo, hi});
  }
  std::sort(proj.begin(), proj.end(),
            [](const BaseInterval& a, const BaseInterval& b) { return a.lo < b.lo; });
  for (const auto& iv : proj) {
    if (!out.base.empty() && iv.lo <= out.base.back().hi)
      out.base.back().hi = std::max(out.base.back().hi, iv.hi);
    else
      out.base.push_back(iv);
  }
  return out;
}

}  // namespace bcov
