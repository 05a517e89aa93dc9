#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "torusadm/exact_linalg.hpp"

using namespace torusadm;
using testsupport::rnd;

namespace {

IntMatrix random_matrix(std::mt19937_64& g, int max_dim = 6, long c = 9) {
  IntMatrix m(static_cast<int>(rnd(g, 1, max_dim)),
              static_cast<int>(rnd(g, 1, max_dim)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rnd(g, -c, c);
  return m;
}

bool is_hnf_shape(const IntMatrix& h) {
  int prev_col = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < h.rows; ++i) {
    int p = -1;
    for (int j = 0; j < h.cols; ++j)
      if (h(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;  // nonzero row after a zero row
    if (p <= prev_col) return false;  // pivots must move right
    if (h(i, p) <= 0) return false;
    for (int r = 0; r < i; ++r)
      if (h(r, p) < 0 || h(r, p) >= h(i, p)) return false;
    prev_col = p;
  }
  return true;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(make_rat(1, 2)) == "1/2");
  CHECK(rat_str(make_rat(-4, 8)) == "-1/2");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK(parse_rat("3/9") == make_rat(1, 3));
  CHECK(parse_rat("-3/9") == make_rat(-1, 3));
  CHECK(parse_rat("42") == Rat(42));
  CHECK(parse_rat("0") == Rat(0));
  CHECK_FALSE(parse_rat("1/0").has_value());
  CHECK_FALSE(parse_rat("a/b").has_value());
  CHECK_FALSE(parse_rat("").has_value());
  CHECK_FALSE(parse_rat("1.5").has_value());
}

TEST_CASE("rational helpers") {
  CHECK(floor_rat(make_rat(-1, 2)) == -1);
  CHECK(floor_rat(make_rat(1, 2)) == 0);
  CHECK(ceil_rat(make_rat(1, 2)) == 1);
  CHECK(ceil_rat(make_rat(-1, 2)) == 0);
  CHECK(mod1(make_rat(-1, 2)) == make_rat(1, 2));
  CHECK(mod1(make_rat(7, 2)) == make_rat(1, 2));
  CHECK(mod1(Rat(3)) == 0);
  CHECK(is_integer(Rat(-5)));
  CHECK(!is_integer(make_rat(5, 2)));
  CHECK(is_positive_integer(Rat(1)));
  CHECK(!is_positive_integer(Rat(0)));
  CHECK(!is_positive_integer(Rat(-2)));
  CHECK(!is_positive_integer(make_rat(3, 2)));
}

TEST_CASE("hnf golden") {
  IntMatrix m{{2, 4}, {1, 1}};
  auto r = hnf(m);
  CHECK(r.H == IntMatrix{{1, 1}, {0, 2}});
  CHECK(matmul(r.U, m) == r.H);
  CHECK(abs(determinant(r.U)) == 1);
}

TEST_CASE("snf golden") {
  SUBCASE("diag(3,5)") {
    IntMatrix m{{3, 0}, {0, 5}};
    auto r = snf(m);
    CHECK(r.D == IntMatrix{{1, 0}, {0, 15}});
  }
  SUBCASE("2x2 dense") {
    IntMatrix m{{2, 4}, {6, 8}};
    auto r = snf(m);
    CHECK(r.D == IntMatrix{{2, 0}, {0, 4}});
    CHECK(matmul(matmul(r.U, m), r.V) == r.D);
  }
}

TEST_CASE("integer kernel golden") {
  CHECK(integer_kernel(IntMatrix{{1, 1}}) ==
        std::vector<std::vector<Int>>{{1, -1}});
  CHECK(integer_kernel(IntMatrix{{2, 4}}) ==
        std::vector<std::vector<Int>>{{2, -1}});
  CHECK(integer_kernel(IntMatrix{{1, 0}, {0, 1}}).empty());
  // The kernel lattice must be saturated: 2x + 4y = 0 has primitive
  // solution (2,-1), not (4,-2).
  auto k = integer_kernel(IntMatrix{{2, 4}});
  Int g = gcd(k[0][0], k[0][1]);
  CHECK(g == 1);
}

TEST_CASE("integer solve golden") {
  SUBCASE("solvable") {
    auto x = solve_integer_linear(IntMatrix{{2, 0}, {0, 3}}, {4, 9});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Int>{2, 3});
  }
  SUBCASE("unsolvable by divisibility") {
    CHECK(!solve_integer_linear(IntMatrix{{2}}, {3}).has_value());
  }
  SUBCASE("unsolvable by rank") {
    CHECK(!solve_integer_linear(IntMatrix{{1, 1}, {1, 1}}, {0, 1}).has_value());
  }
  SUBCASE("underdetermined") {
    auto x = solve_integer_linear(IntMatrix{{2, 3}}, {1});
    REQUIRE(x.has_value());
    CHECK(Int(2) * (*x)[0] + Int(3) * (*x)[1] == 1);
  }
}

TEST_CASE("rational solve golden") {
  SUBCASE("unique") {
    QMatrix a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto s = rational_solve(a, {Rat(1), Rat(1)});
    REQUIRE(s.has_value());
    CHECK(s->particular == std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(s->nullspace.empty());
    CHECK(s->rank == 2);
  }
  SUBCASE("inconsistent") {
    QMatrix a{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(!rational_solve(a, {Rat(0), Rat(1)}).has_value());
  }
  SUBCASE("one free variable") {
    QMatrix a{{Rat(1), Rat(1)}};
    auto s = rational_solve(a, {Rat(2)});
    REQUIRE(s.has_value());
    CHECK(s->nullspace.size() == 1);
    CHECK(s->particular[0] + s->particular[1] == 2);
    CHECK(s->nullspace[0][0] + s->nullspace[0][1] == 0);
  }
}

TEST_CASE("rank and determinant golden") {
  CHECK(rational_rank(QMatrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rational_rank(QMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("snf and hnf invariants on random matrices") {
  std::mt19937_64 g(20240811);
  for (int iter = 0; iter < 40; ++iter) {
    auto m = random_matrix(g);

    auto s = snf(m);
    CHECK(matmul(matmul(s.U, m), s.V) == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const int k = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < s.D.rows; ++i)
      for (int j = 0; j < s.D.cols; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (int i = 0; i < k; ++i) CHECK(s.D(i, i) >= 0);
    for (int i = 0; i + 1 < k; ++i) {
      if (s.D(i + 1, i + 1) != 0) {
        CHECK(s.D(i, i) != 0);
        CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
      }
    }

    auto h = hnf(m);
    CHECK(matmul(h.U, m) == h.H);
    CHECK(abs(determinant(h.U)) == 1);
    CHECK(is_hnf_shape(h.H));
  }
}

TEST_CASE("kernel members annihilate and solve results satisfy") {
  std::mt19937_64 g(77);
  for (int iter = 0; iter < 40; ++iter) {
    auto m = random_matrix(g, 5, 5);
    for (const auto& v : integer_kernel(m)) {
      for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
    std::vector<Int> b(m.rows);
    for (auto& x : b) x = rnd(g, -9, 9);
    if (auto x = solve_integer_linear(m, b)) {
      for (int i = 0; i < m.rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m(i, j) * (*x)[j];
        CHECK(acc == b[i]);
      }
    } else {
      // cross-check with a bounded exhaustive search
      if (m.cols <= 3) CHECK(!testsupport::brute_integer_solvable(m, b, 12));
    }
  }
}
