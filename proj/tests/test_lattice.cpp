#include <doctest.h>

#include <random>

#include "occ/error.hpp"
#include "occ/lattice.hpp"

using namespace occ;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

bool in_span(const std::vector<IntVec>& basis, const IntVec& v) {
  if (basis.empty()) return false;
  return solve_in_lattice(IntMatrix::from_columns(basis), v).has_value();
}

}  // namespace

TEST_CASE("kernel of the local P2 ray matrix") {
  auto m = IntMatrix::from_columns({iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, -1, 1}), iv({0, 0, 1})});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK((k[0] == iv({1, 1, 1, -3}) || k[0] == iv({-1, -1, -1, 3})));
}

TEST_CASE("kernel of the identity is empty") { CHECK(kernel_basis(IntMatrix::identity(3)).empty()); }

TEST_CASE("kernel for the C3 relative fan with f = 1") {
  auto m = IntMatrix::from_columns({iv({1, 0, 1}), iv({0, 1, 1}), iv({0, 0, 1}), iv({-1, -1, 0})});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK((k[0] == iv({1, 1, -2, 1}) || k[0] == iv({-1, -1, 2, -1})));
}

TEST_CASE("kernel basis is deterministic") {
  auto m = IntMatrix::from_rows({iv({1, 2, 3, 4, 5}), iv({0, 1, -1, 2, 7})});
  CHECK(kernel_basis(m) == kernel_basis(m));
}

TEST_CASE("kernel vectors are annihilated and span every small kernel vector") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ent(-3, 3), ncols(3, 6), nrows(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int r = nrows(rng), c = ncols(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = ent(rng);
    auto basis = kernel_basis(m);
    for (const auto& k : basis) {
      IntVec z = m * k;
      for (const auto& x : z) CHECK(x == 0);
    }
    // brute force over a box; limited to 4 columns to stay fast
    if (c > 4) continue;
    IntVec v(c, Int(0));
    std::vector<int> idx(c, -5);
    while (true) {
      for (int j = 0; j < c; ++j) v[j] = idx[j];
      IntVec z = m * v;
      bool zero = true, nonzero_v = false;
      for (const auto& x : z) zero = zero && x == 0;
      for (const auto& x : v) nonzero_v = nonzero_v || x != 0;
      if (zero && nonzero_v) CHECK(in_span(basis, v));
      int j = 0;
      while (j < c && ++idx[j] > 5) idx[j++] = -5;
      if (j == c) break;
    }
  }
}

TEST_CASE("unimodular_change") {
  CHECK(unimodular_change({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}) == IntMatrix::identity(3));
  std::vector<IntVec> b{iv({1, 0, 1}), iv({0, 1, 1}), iv({0, 0, 1})};
  IntMatrix m = unimodular_change(b);
  CHECK(m * iv({1, 0, 1}) == iv({1, 0, 0}));
  CHECK(m * IntMatrix::from_columns(b) == IntMatrix::identity(3));
  CHECK_THROWS_AS(unimodular_change({iv({2, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}), Error);
  try {
    unimodular_change({iv({2, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnimodular);
  }
}

TEST_CASE("unimodular_change inverts random GL3 bases") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> idx(0, 2), val(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = IntMatrix::identity(3);
    for (int s = 0; s < 8; ++s) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      IntMatrix e = IntMatrix::identity(3);
      e(i, j) = val(rng);
      a = e * a;
    }
    std::vector<IntVec> cols{a.col(0), a.col(1), a.col(2)};
    CHECK(unimodular_change(cols) * a == IntMatrix::identity(3));
  }
}

TEST_CASE("solve_in_lattice") {
  CHECK(solve_in_lattice(IntMatrix::identity(3), iv({4, -2, 7})) == iv({4, -2, 7}));
  CHECK(!solve_in_lattice(IntMatrix::from_rows({iv({2})}), iv({1})).has_value());
  // lifting the Y wall class through the fourfold rays appends -1
  for (long f = -2; f <= 2; ++f) {
    auto m = IntMatrix::from_columns(
        {iv({1, 0, 1, 0}), iv({0, 1, 1, 0}), iv({0, 0, 1, 0}), iv({-1, -f, 1, 1}), iv({0, 0, 1, 1})});
    IntVec target = m * iv({1, f, -f - 1, 1, -1});
    auto x = solve_in_lattice(m, target);
    REQUIRE(x.has_value());
    CHECK(m * *x == target);
  }
}

TEST_CASE("row_hnf and determinant") {
  auto m = IntMatrix::from_rows({iv({2, 4}), iv({1, 3})});
  CHECK(determinant(m) == 2);
  auto h = row_hnf(m);
  CHECK(h.rows() == 2);
  CHECK(h(1, 0) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(row_hnf(IntMatrix::from_rows({iv({1, 2}), iv({2, 4})})).rows() == 1);
}
