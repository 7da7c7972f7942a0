#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "foxcalc/modmatrix.hpp"
#include "testutil.hpp"

using foxcalc::Int;
using foxcalc::ModMatrix;
using Row = std::vector<Int>;
using Rows = std::vector<std::vector<Int>>;

TEST_CASE("Hermite form over the integers") {
  ModMatrix m(0, 2, Rows{{2, 0}, {0, 3}});
  CHECK(m.rows() == Rows{{2, 0}, {0, 3}});
  CHECK(m.pivot_cols() == std::vector<int>{0, 1});
  CHECK(m.contains(Row{4, 3}));
  CHECK(m.contains(Row{2, 3}));
  CHECK(m.contains(Row{0, 0}));
  CHECK(m.contains(Row{-2, 6}));
  CHECK_FALSE(m.contains(Row{1, 0}));
  CHECK_FALSE(m.contains(Row{2, 1}));

  // gcd combination: span{6, 4} = 2Z
  ModMatrix g(0, 1, Rows{{6}, {4}});
  CHECK(g.rows() == Rows{{2}});
  CHECK(g.contains(Row{8}));
  CHECK_FALSE(g.contains(Row{3}));

  // pivots are made positive
  ModMatrix n(0, 1, Rows{{-3}});
  CHECK(n.rows() == Rows{{3}});

  // entries above a pivot are reduced into [0, pivot)
  ModMatrix r(0, 2, Rows{{1, 5}, {0, 3}});
  CHECK(r.rows() == Rows{{1, 2}, {0, 3}});
}

TEST_CASE("Howell form handles zero divisors") {
  // mod 4 the span of (2,1) also leads in column 1: 2*(2,1) = (0,2)
  ModMatrix m(4, 2, Rows{{2, 1}});
  CHECK(m.rows() == Rows{{2, 1}, {0, 2}});
  CHECK(m.contains(Row{0, 2}));
  CHECK(m.contains(Row{2, 3}));
  CHECK(m.contains(Row{0, 0}));
  CHECK_FALSE(m.contains(Row{1, 0}));
  CHECK_FALSE(m.contains(Row{2, 0}));
  CHECK_FALSE(m.contains(Row{0, 1}));

  // mod 8 variant: annihilator is 4*(2,1) = (0,4)
  ModMatrix m8(8, 2, Rows{{2, 1}});
  CHECK(m8.rows() == Rows{{2, 1}, {0, 4}});
  CHECK(m8.contains(Row{0, 4}));
  CHECK_FALSE(m8.contains(Row{0, 2}));

  // a unit multiple lifts the pivot to gcd(a, d)
  ModMatrix u(4, 1, Rows{{3}});
  CHECK(u.rows() == Rows{{1}});
  ModMatrix v(6, 1, Rows{{4}});
  CHECK(v.rows() == Rows{{2}});
  CHECK(v.contains(Row{2}));
  CHECK_FALSE(v.contains(Row{3}));
}

TEST_CASE("input vectors are reduced mod d") {
  ModMatrix m(3, 2, Rows{{5, -1}});   // = (2, 2) mod 3
  CHECK(m.contains(Row{2, 2}));
  CHECK(m.contains(Row{5, 5}));
  CHECK(m.contains(Row{-1, -1}));
  CHECK_FALSE(m.contains(Row{1, 0}));
}

TEST_CASE("canonical form is generation-order independent") {
  testutil::Sampler rng(601);
  for (int trial = 0; trial < 40; ++trial) {
    int d = static_cast<int>(rng.below(3)) == 0 ? 0
              : static_cast<int>(rng.below(11)) + 2;
    int cols = 3;
    Rows gens;
    int n = static_cast<int>(rng.below(4)) + 1;
    for (int i = 0; i < n; ++i) {
      Row row;
      for (int c = 0; c < cols; ++c) row.push_back(rng.range(-9, 9));
      gens.push_back(row);
    }
    ModMatrix a(d, cols, gens);
    Rows reversed(gens.rbegin(), gens.rend());
    ModMatrix b(d, cols, reversed);
    CHECK(a == b);

    // every generator and random combinations stay inside
    for (const Row& g : gens) CHECK(a.contains(g));
    Row combo(cols, 0);
    for (const Row& g : gens) {
      Int c = rng.range(-5, 5);
      for (int j = 0; j < cols; ++j) combo[j] += c * g[j];
    }
    CHECK(a.contains(combo));
  }
}

TEST_CASE("same space from different generators compares equal") {
  ModMatrix a(0, 2, Rows{{1, 0}, {0, 1}});
  ModMatrix b(0, 2, Rows{{1, 1}, {0, 1}});
  CHECK(a == b);
  ModMatrix c(0, 2, Rows{{1, 1}});
  CHECK_FALSE(a == c);

  ModMatrix p(6, 2, Rows{{2, 0}, {0, 3}});
  ModMatrix q(6, 2, Rows{{2, 3}, {4, 3}});
  CHECK(p == q);
}

TEST_CASE("empty and degenerate spaces") {
  ModMatrix empty(5, 3);
  CHECK(empty.rows().empty());
  CHECK(empty.contains(Row{0, 0, 0}));
  CHECK_FALSE(empty.contains(Row{0, 0, 1}));
  // mod d the zero vector has many disguises
  CHECK(empty.contains(Row{5, 10, -5}));

  ModMatrix zero(0, 2, Rows{{0, 0}});
  CHECK(zero.rows().empty());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ModMatrix(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(ModMatrix(-2, 2), std::invalid_argument);
  CHECK_THROWS_AS(ModMatrix(0, 2, Rows{{1}}), std::invalid_argument);
  ModMatrix m(0, 2, Rows{{1, 0}});
  CHECK_THROWS_AS(m.contains(Row{1}), std::invalid_argument);
}
