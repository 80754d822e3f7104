#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bcov {

/* Finite topological space as a specialization preorder; opens = up-sets.
 * Subsets are bitmasks over point indices. */
using Mask = std::uint32_t;

struct FinSpace {
  int n = 0;
  std::vector<Mask> up;  // up[i] = { j : i <= j }, contains i

  Mask all() const { return n == 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }
  bool leq(int i, int j) const { return (up[static_cast<std::size_t>(i)] >> j) & 1u; }
  bool valid() const;  // reflexive and transitive

  Mask up_closure(Mask s) const;    // smallest open superset
  Mask down_closure(Mask s) const;  // closure
  bool is_open(Mask s) const { return up_closure(s) == s; }
  bool is_closed(Mask s) const { return down_closure(s) == s; }
  Mask interior(Mask s) const;

  std::vector<Mask> open_sets() const;
  std::vector<Mask> open_sets_containing(int x) const;

  /* order-connectivity (= topological connectivity here) within s */
  std::vector<Mask> connected_components(Mask s) const;
  bool connected(Mask s) const;

  /* induced subspace on the points of s; idx maps new index -> old */
  FinSpace subspace(Mask s, std::vector<int>& idx) const;

  std::string str() const;
};

struct FinMap {
  FinSpace X, Y;
  std::vector<int> f;  // f[x] in Y

  bool continuous() const;  // order preserving
  Mask image(Mask s) const;
  Mask preimage(Mask t) const;
  Mask fiber(int y) const { return preimage(Mask(1) << y); }

  /* restriction to tx -> ty; requires image(tx) subset of ty.
   * xi/yi receive the new->old index maps when non-null. */
  FinMap restrict_to(Mask tx, Mask ty, std::vector<int>* xi = nullptr,
                     std::vector<int>* yi = nullptr) const;

  std::string str() const;
};

bool is_surjective(const FinMap& m);
bool is_open_map(const FinMap& m);
bool is_closed_map(const FinMap& m);
bool is_separated(const FinMap& m);

struct CheckResult {
  bool ok = false;
  std::string witness;
};
CheckResult is_quasi_covering(const FinMap& m);

/* Points with no open neighborhood mapping order-isomorphically onto an
 * open subset of the codomain. Throws when n exceeds cap. */
Mask branching_locus(const FinMap& m, int cap = 10);

struct NeighborhoodFamily {
  Mask V = 0;
  std::vector<Mask> U;            // disjoint opens, one per fiber point
  std::vector<int> fiber_points;  // fiber point contained in U[j]
};

/* All sheet partitions of preimage(V) satisfying the characteristic-family
 * equation (capped); empty result means V is not distinguished for y. */
std::vector<NeighborhoodFamily> characteristic_families(const FinMap& m, int y, Mask V,
                                                        int cap = 64);

/* The set formula for V0 from the given disjoint opens around the fiber,
 * plus the induced family over V0. */
NeighborhoodFamily distinguished_neighborhood(const FinMap& m, int y,
                                              const std::vector<Mask>& W);

struct ExceptionalCheck {
  bool exceptional = false;
  int sheets = 0;
};
/* Is U (a characteristic member w.r.t. V) exceptional: the restriction to
 * its regular part an unbranched covering? */
ExceptionalCheck check_exceptional(const FinMap& m, Mask U, Mask V);

struct SpecialSearch {
  bool found = false;
  Mask V = 0;
  NeighborhoodFamily family;
  std::vector<int> sheets;  // per family member
};
SpecialSearch find_special_neighborhood(const FinMap& m, int y);

struct BranchedData {
  bool is_branched = false;
  std::string witness;
  bool x_reg_dense = false;
  Mask B = 0, R = 0, C = 0;
  std::vector<int> b;  // per domain point (valid when is_branched)
  std::vector<std::pair<Mask, int>> component_d;  // per Y-component
};
BranchedData is_branched_covering(const FinMap& m, int cap = 10);

struct LemmaVerdict {
  std::string lemma;
  bool qualifying = false;
  bool holds = true;
  std::string counterexample;
};

std::vector<std::string> lemma_ids();
LemmaVerdict check_lemma(const std::string& id, const FinMap& m);

/* All labeled preorders on exactly n points (n <= 5), optionally up to iso. */
std::vector<FinSpace> enumerate_spaces(int n, bool up_to_iso = false);

struct FuzzSummary {
  long trials = 0;
  long continuous = 0;
  long quasi = 0;
  /* lemma -> (qualifying, holding) */
  std::map<std::string, std::pair<long, long>> lemma_counts;
  std::vector<std::string> failures;
};

FuzzSummary fuzz(std::uint64_t seed, long trials, int max_points);
/* Exhaustive: all labeled quasi-coverings, |X| <= max_domain, |Y| <= max_codomain. */
FuzzSummary sweep(int max_domain, int max_codomain);

}  // namespace bcov
