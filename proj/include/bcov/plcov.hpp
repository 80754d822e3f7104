#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcov/rat.hpp"

namespace bcov {

/* Graph of y = slope*x + intercept over [x_lo, x_hi]; never vertical. */
struct Segment {
  Rat x_lo, x_hi, slope, intercept;

  Rat y_at(const Rat& x) const { return slope * x + intercept; }
  bool covers(const Rat& x) const { return x_lo <= x && x <= x_hi; }
  bool same_line(const Segment& o) const { return slope == o.slope && intercept == o.intercept; }
};

struct BaseInterval {
  Rat lo, hi;
};

struct PLPoint {
  Rat x, y;
  bool operator==(const PLPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const PLPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/* Total space = union of segments; the covering map is projection to x.
 * base is a disjoint sorted list of closed intervals (usually one). */
struct PLCovering {
  std::vector<BaseInterval> base;
  std::vector<Segment> segments;
};

struct ValidationError : std::runtime_error {
  std::vector<int> offending;  // segment indices
  ValidationError(const std::string& msg, std::vector<int> segs)
      : std::runtime_error(msg), offending(std::move(segs)) {}
};

void validate(const PLCovering& cov);

/* Segment endpoints, pairwise intersections, base endpoints; sorted unique. */
std::vector<Rat> critical_values(const PLCovering& cov);

std::vector<PLPoint> fiber_at(const PLCovering& cov, const Rat& x0);

/* (L, R): distinct segment germs at p extending left / right. */
std::pair<int, int> branch_counts(const PLCovering& cov, const PLPoint& p);

struct BranchWitness {
  PLPoint p;
  int left = 0, right = 0;
  std::string reason;
};

struct StepCount {
  Rat lo, hi;  // open interval between consecutive critical values
  int count;
};

struct IndexedPoint {
  PLPoint p;
  int index;
};

struct BranchReport {
  bool is_quasi = false;
  std::optional<BranchWitness> quasi_witness;
  bool is_branched = false;
  std::optional<BranchWitness> branch_witness;
  std::vector<StepCount> d_profile;
  std::vector<PLPoint> B;
  std::vector<Rat> R;
  std::vector<PLPoint> C;                       // singleton fibers over critical values
  std::vector<BaseInterval> collapse_intervals; // whole steps with fiber count 1
  /* index b at every point over a critical value (b = 1 elsewhere) */
  std::vector<IndexedPoint> b;
  /* when branched: constant fiber count off R per base component */
  std::vector<std::pair<BaseInterval, int>> component_d;
};

BranchReport analyze(const PLCovering& cov);

PLCovering restrict_base(const PLCovering& cov, const Rat& z_lo, const Rat& z_hi);

/* Connected components of the total space, as segment index lists. */
std::vector<std::vector<int>> components(const PLCovering& cov);

PLCovering select_components(const PLCovering& cov, const std::vector<int>& which);

}  // namespace bcov
