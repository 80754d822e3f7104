#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcov/fintop.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace bcov;

namespace {

FinSpace discrete(int n) {
  FinSpace s;
  s.n = n;
  for (int i = 0; i < n; ++i) s.up.push_back(Mask(1) << i);
  return s;
}

FinSpace indiscrete(int n) {
  FinSpace s;
  s.n = n;
  for (int i = 0; i < n; ++i) s.up.push_back(s.all());
  return s;
}

FinSpace chain(int n) {  // 0 < 1 < ... < n-1
  FinSpace s;
  s.n = n;
  for (int i = 0; i < n; ++i) {
    Mask m = 0;
    for (int j = i; j < n; ++j) m |= Mask(1) << j;
    s.up.push_back(m);
  }
  return s;
}

FinMap point_map(const FinSpace& x) {
  FinMap m;
  m.X = x;
  m.Y = discrete(1);
  m.f.assign(static_cast<std::size_t>(x.n), 0);
  return m;
}

FinMap identity(const FinSpace& x) {
  FinMap m;
  m.X = x;
  m.Y = x;
  for (int i = 0; i < x.n; ++i) m.f.push_back(i);
  return m;
}

/* center c below four ray tips, over a three-point fan q < p, r */
FinMap finite_x() {
  FinMap m;
  m.X.n = 5;
  m.X.up = {0b00001, 0b00010, 0b11111, 0b01000, 0b10000};
  m.Y.n = 3;
  m.Y.up = {0b001, 0b111, 0b100};
  m.f = {0, 0, 1, 2, 2};
  return m;
}

/* two disjoint copies of y projected down */
FinMap double_cover(const FinSpace& y) {
  FinMap m;
  m.Y = y;
  m.X.n = 2 * y.n;
  m.X.up.resize(static_cast<std::size_t>(2 * y.n));
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < y.n; ++i) {
      m.X.up[static_cast<std::size_t>(c * y.n + i)] = y.up[static_cast<std::size_t>(i)]
                                                      << (c * y.n);
      m.f.push_back(i);
    }
  return m;
}

}  // namespace

TEST_CASE("space predicates against the all-open-sets oracle") {
  for (const FinSpace& s : enumerate_spaces(3)) {
    REQUIRE(s.valid());
    auto opens = s.open_sets();
    for (Mask m = 0; m <= s.all(); ++m) {
      bool in = std::find(opens.begin(), opens.end(), m) != opens.end();
      CHECK(in == s.is_open(m));
      /* complement duality */
      CHECK(s.is_closed(m) == s.is_open(s.all() & ~m));
      /* interior is the largest open inside */
      Mask best = 0;
      for (Mask o : opens)
        if ((o & ~m) == 0) best |= o;
      CHECK(s.interior(m) == best);
      if (m == s.all()) break;
    }
  }
}

TEST_CASE("open and closed map criteria against the direct oracle") {
  for (const FinSpace& x : enumerate_spaces(3))
    for (const FinSpace& y : enumerate_spaces(2))
      for (int f0 = 0; f0 < 2; ++f0)
        for (int f1 = 0; f1 < 2; ++f1)
          for (int f2 = 0; f2 < 2; ++f2) {
            FinMap m{x, y, {f0, f1, f2}};
            if (!m.continuous()) continue;
            bool open_oracle = true, closed_oracle = true;
            for (Mask s = 0; s <= x.all(); ++s) {
              if (x.is_open(s) && !y.is_open(m.image(s))) open_oracle = false;
              if (x.is_closed(s) && !y.is_closed(m.image(s))) closed_oracle = false;
              if (s == x.all()) break;
            }
            CHECK(is_open_map(m) == open_oracle);
            CHECK(is_closed_map(m) == closed_oracle);
          }
}

TEST_CASE("quasi covering verdicts") {
  CHECK(is_quasi_covering(point_map(discrete(2))).ok);
  auto bad = is_quasi_covering(point_map(indiscrete(2)));
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == "not separated");
  CHECK(is_quasi_covering(identity(chain(3))).ok);
  CHECK(is_quasi_covering(finite_x()).ok);

  FinMap notsurj;
  notsurj.X = discrete(1);
  notsurj.Y = discrete(2);
  notsurj.f = {0};
  CHECK(is_quasi_covering(notsurj).witness == "not surjective");
}

TEST_CASE("branching locus") {
  CHECK(branching_locus(point_map(discrete(2))) == 0);
  CHECK(branching_locus(identity(chain(4))) == 0);
  CHECK(branching_locus(finite_x()) == Mask(0b00100));  // just the center
  FinMap big = point_map(discrete(11));
  CHECK_THROWS_AS(branching_locus(big), std::invalid_argument);
}

TEST_CASE("distinguished neighborhoods") {
  FinMap two = point_map(discrete(2));
  NeighborhoodFamily fam = distinguished_neighborhood(two, 0, {0b01, 0b10});
  CHECK(fam.V == two.Y.all());
  REQUIRE(fam.U.size() == 2);
  CHECK((fam.U[0] | fam.U[1]) == two.X.all());

  FinMap id = identity(chain(3));
  for (int y = 0; y < 3; ++y) {
    NeighborhoodFamily f = distinguished_neighborhood(id, y, {id.X.up[static_cast<std::size_t>(y)]});
    CHECK((f.V & id.Y.up[static_cast<std::size_t>(y)]) == id.Y.up[static_cast<std::size_t>(y)]);
  }

  FinMap fx = finite_x();
  Mask fib = fx.fiber(1);
  REQUIRE(fib == Mask(0b00100));
  NeighborhoodFamily f = distinguished_neighborhood(fx, 1, {fx.X.up[2]});
  CHECK(fx.Y.is_open(f.V));
  CHECK(((f.V >> 1) & 1u) == 1u);
  int r = 1;
  for (int z = 0; z < fx.Y.n; ++z)
    if ((f.V >> z) & 1u) CHECK(std::popcount(fx.fiber(z)) >= r);

  CHECK_THROWS_AS(distinguished_neighborhood(two, 0, {Mask(0b11)}),
                  std::invalid_argument);
}

TEST_CASE("branched covering verdicts and data") {
  BranchedData fx = is_branched_covering(finite_x());
  CHECK(fx.is_branched);
  CHECK(fx.B == Mask(0b00100));
  CHECK(fx.R == Mask(0b010));
  CHECK(fx.C == Mask(0b00100));
  CHECK(fx.b == std::vector<int>{1, 1, 2, 1, 1});
  REQUIRE(fx.component_d.size() == 1);
  CHECK(fx.component_d[0].second == 2);

  BranchedData disc = is_branched_covering(point_map(discrete(2)));
  CHECK(disc.is_branched);
  CHECK(disc.B == 0);
  CHECK(disc.b == std::vector<int>{1, 1});
  CHECK(disc.component_d[0].second == 2);

  BranchedData dc = is_branched_covering(double_cover(chain(2)));
  CHECK(dc.is_branched);
  CHECK(dc.B == 0);
  CHECK(dc.component_d[0].second == 2);

  CHECK_THROWS_AS(is_branched_covering(point_map(indiscrete(2))), std::invalid_argument);
}

TEST_CASE("lemma registry on named instances") {
  CHECK(check_lemma("trivial", point_map(discrete(2))).holds);
  LemmaVerdict gb = check_lemma("genbranch", finite_x());
  CHECK(gb.qualifying);
  CHECK(gb.holds);
  LemmaVerdict col = check_lemma("colapseinB", finite_x());
  CHECK(col.qualifying);
  CHECK(col.holds);
  for (const std::string& id : lemma_ids()) {
    LemmaVerdict v = check_lemma(id, finite_x());
    CHECK(v.holds);
  }
  CHECK_THROWS_AS(check_lemma("nonsense", finite_x()), std::invalid_argument);
  /* non-qualifying: not even continuous */
  FinMap notcont{chain(2), discrete(2), {0, 1}};
  CHECK_FALSE(notcont.continuous());
  LemmaVerdict nv = check_lemma("trivial", notcont);
  CHECK_FALSE(nv.qualifying);
  CHECK(nv.holds);
}

TEST_CASE("space enumeration counts") {
  CHECK(enumerate_spaces(1).size() == 1);
  CHECK(enumerate_spaces(2).size() == 4);
  CHECK(enumerate_spaces(3).size() == 29);
  CHECK(enumerate_spaces(4).size() == 355);
  CHECK(enumerate_spaces(2, true).size() == 3);
  CHECK(enumerate_spaces(3, true).size() == 9);
  CHECK_THROWS_AS(enumerate_spaces(6), std::invalid_argument);
}

TEST_CASE("fuzzing is deterministic and violation free") {
  FuzzSummary a = fuzz(42, 2000, 6);
  FuzzSummary b = fuzz(42, 2000, 6);
  CHECK(a.trials == b.trials);
  CHECK(a.continuous == b.continuous);
  CHECK(a.quasi == b.quasi);
  CHECK(a.lemma_counts == b.lemma_counts);
  CHECK(a.failures.empty());
  CHECK(a.quasi > 100);

  FuzzSummary c = fuzz(43, 2000, 6);
  CHECK(c.failures.empty());

  FuzzSummary empty = fuzz(42, 0, 5);
  CHECK(empty.trials == 0);
  CHECK(empty.lemma_counts.empty());
}

TEST_CASE("exhaustive sweep has no violations") {
  FuzzSummary s = sweep(3, 3);
  CHECK(s.failures.empty());
  CHECK(s.quasi > 0);
  for (const auto& [id, qh] : s.lemma_counts) {
    CHECK(qh.first == qh.second);
    CHECK(qh.first > 0);
  }
  /* every lemma exercised */
  CHECK(s.lemma_counts.size() == lemma_ids().size());
}

TEST_CASE("restriction of maps keeps structure") {
  FinMap fx = finite_x();
  /* restrict over the open ray {p}: two sheet points upstairs */
  std::vector<int> xi, yi;
  FinMap g = fx.restrict_to(fx.preimage(0b001), 0b001, &xi, &yi);
  CHECK(g.X.n == 2);
  CHECK(g.Y.n == 1);
  CHECK(is_quasi_covering(g).ok);
  CHECK(branching_locus(g) == 0);
  CHECK_THROWS(fx.restrict_to(fx.X.all(), 0b001));
}
