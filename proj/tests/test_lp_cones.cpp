#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "torusadm/cones.hpp"
#include "torusadm/lp.hpp"

using namespace torusadm;
using testsupport::rnd;

namespace {

bool satisfies(const std::vector<std::vector<Rat>>& a_eq,
               const std::vector<Rat>& b_eq,
               const std::vector<std::vector<Rat>>& a_le,
               const std::vector<Rat>& b_le, const std::vector<Rat>& x) {
  for (size_t i = 0; i < a_eq.size(); ++i) {
    Rat acc = 0;
    for (size_t j = 0; j < x.size(); ++j) acc += a_eq[i][j] * x[j];
    if (acc != b_eq[i]) return false;
  }
  for (size_t i = 0; i < a_le.size(); ++i) {
    Rat acc = 0;
    for (size_t j = 0; j < x.size(); ++j) acc += a_le[i][j] * x[j];
    if (acc > b_le[i]) return false;
  }
  return true;
}

FormSet forms2(std::initializer_list<std::vector<Int>> rows) {
  std::vector<FormVector> fs;
  int i = 0;
  int rank = 0;
  for (const auto& r : rows) {
    rank = static_cast<int>(r.size());
    fs.push_back({"f" + std::to_string(i++), r});
  }
  return make_form_set(rank, fs);
}

}  // namespace

TEST_CASE("lp golden cases") {
  SUBCASE("trivial feasible") {
    auto x = lp_feasible({}, {}, {{Rat(1)}}, {Rat(5)}, 1);
    REQUIRE(x.has_value());
    CHECK((*x)[0] <= 5);
  }
  SUBCASE("two-sided bound") {
    auto x = lp_feasible({}, {}, {{Rat(1)}, {Rat(-1)}},
                         {Rat(3), Rat(-2)}, 1);
    REQUIRE(x.has_value());
    CHECK((*x)[0] <= 3);
    CHECK((*x)[0] >= 2);
  }
  SUBCASE("infeasible interval") {
    CHECK(!lp_feasible({}, {}, {{Rat(1)}, {Rat(-1)}}, {Rat(1), Rat(-2)}, 1)
               .has_value());
  }
  SUBCASE("equalities pin all variables, inequality violated") {
    // After the equality phase no free variables remain; the reduced system
    // consists of constant rows that must still be checked.
    CHECK(!lp_feasible({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(0), Rat(0)},
                       {{Rat(1), Rat(0)}}, {Rat(-1)}, 2)
               .has_value());
  }
  SUBCASE("equalities pin all variables, inequality satisfied") {
    auto x = lp_feasible({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}},
                         {Rat(2), Rat(0)}, {{Rat(1), Rat(0)}}, {Rat(5)}, 2);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Rat>{Rat(1), Rat(1)});
  }
  SUBCASE("inconsistent equalities") {
    CHECK(!lp_feasible({{Rat(1)}, {Rat(1)}}, {Rat(0), Rat(1)}, {}, {}, 1)
               .has_value());
  }
}

TEST_CASE("both engines agree on random systems") {
  std::mt19937_64 g(424242);
  int feasible = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const int n = static_cast<int>(rnd(g, 1, 4));
    const int me = static_cast<int>(rnd(g, 0, 2));
    const int mi = static_cast<int>(rnd(g, 0, 5));
    std::vector<std::vector<Rat>> a_eq, a_le;
    std::vector<Rat> b_eq, b_le;
    for (int i = 0; i < me; ++i) {
      std::vector<Rat> row(n);
      for (auto& x : row) x = Rat(rnd(g, -3, 3));
      a_eq.push_back(row);
      b_eq.push_back(Rat(rnd(g, -3, 3)));
    }
    for (int i = 0; i < mi; ++i) {
      std::vector<Rat> row(n);
      for (auto& x : row) x = Rat(rnd(g, -3, 3));
      a_le.push_back(row);
      b_le.push_back(Rat(rnd(g, -3, 3)));
    }
    auto fm = lp_feasible(a_eq, b_eq, a_le, b_le, n, LpEngine::FourierMotzkin);
    auto sx = lp_feasible(a_eq, b_eq, a_le, b_le, n, LpEngine::Simplex);
    CHECK(fm.has_value() == sx.has_value());
    if (fm) {
      ++feasible;
      CHECK(satisfies(a_eq, b_eq, a_le, b_le, *fm));
    }
    if (sx) CHECK(satisfies(a_eq, b_eq, a_le, b_le, *sx));
  }
  CHECK(feasible > 20);  // the sample must exercise both outcomes
  CHECK(feasible < 120);
}

TEST_CASE("nonneg_feasible golden") {
  // x >= 0 with x1 + x2 = 1 (as two inequalities) is feasible;
  // x1 + x2 <= -1 is not.
  auto x = nonneg_feasible({{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}},
                           {Rat(1), Rat(-1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] >= 0);
  CHECK((*x)[1] >= 0);
  CHECK((*x)[0] + (*x)[1] == 1);
  CHECK(!nonneg_feasible({{Rat(1), Rat(1)}}, {Rat(-1)}).has_value());
}

TEST_CASE("cone membership golden") {
  auto s = forms2({{1, 0}, {0, 1}});
  SUBCASE("inside") {
    auto c = cone_contains({2, 3}, s);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(*c, s, {2, 3}));
  }
  SUBCASE("outside") { CHECK(!cone_contains({-1, 0}, s).has_value()); }
  SUBCASE("zero target always inside") {
    auto c = cone_contains({0, 0}, s);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(*c, s, {0, 0}));
  }
  SUBCASE("empty generating set") {
    FormSet empty = make_form_set(2, {});
    CHECK(cone_contains({0, 0}, empty).has_value());
    CHECK(!cone_contains({1, 0}, empty).has_value());
  }
}

TEST_CASE("implicit equalities golden") {
  SUBCASE("opposite pair") {
    auto s = forms2({{1, 0}, {-1, 0}, {0, 1}});
    auto eq = implicit_equalities(s);
    REQUIRE(eq.size() == 2);
    CHECK(eq[0].label == "f0");
    CHECK(eq[1].label == "f1");
  }
  SUBCASE("pointed cone has none") {
    auto s = forms2({{1, 0}, {0, 1}});
    CHECK(implicit_equalities(s).empty());
  }
  SUBCASE("full relation") {
    auto s = forms2({{1, 0}, {-1, 1}, {0, -1}});
    CHECK(implicit_equalities(s).size() == 3);
  }
}

TEST_CASE("positive relation golden") {
  SUBCASE("opposite pair") {
    auto s = forms2({{1, 2}, {-1, -2}});
    auto c = positive_relation(s);
    REQUIRE(c.has_value());
    REQUIRE(c->coefficients.size() == 2);
    for (const auto& [label, v] : c->coefficients) CHECK(v > 0);
    CHECK(verify_certificate(*c, s, {0, 0}));
  }
  SUBCASE("pointed cone has none") {
    CHECK(!positive_relation(forms2({{1, 0}, {0, 1}})).has_value());
  }
  SUBCASE("relation needing unequal weights") {
    // 2*(1,0) + 1*(-2,1) + 1*(0,-1) = 0, but no all-equal relation.
    auto s = forms2({{1, 0}, {-2, 1}, {0, -1}});
    auto c = positive_relation(s);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(*c, s, {0, 0}));
    for (const auto& [label, v] : c->coefficients) CHECK(v > 0);
  }
}

TEST_CASE("positive relation iff every form is an implicit equality") {
  std::mt19937_64 g(9157);
  int with_relation = 0;
  for (int iter = 0; iter < 80; ++iter) {
    FormSet s = iter % 2 == 0
                    ? testsupport::random_positive_relation_set(
                          g, static_cast<int>(rnd(g, 1, 3)),
                          static_cast<int>(rnd(g, 2, 5)))
                    : testsupport::random_setup(g, 3, 5).phi;
    bool rel = positive_relation(s).has_value();
    bool all_eq = implicit_equalities(s).size() == s.size();
    CHECK(rel == all_eq);
    with_relation += rel;
  }
  CHECK(with_relation >= 40);  // the constructed half always has one
}

TEST_CASE("certificate verification rejects wrong data") {
  auto s = forms2({{1, 0}, {0, 1}});
  ConeCertificate good{{{"f0", Rat(2)}, {"f1", Rat(3)}}};
  CHECK(verify_certificate(good, s, {2, 3}));
  ConeCertificate wrong_sum{{{"f0", Rat(1)}, {"f1", Rat(3)}}};
  CHECK(!verify_certificate(wrong_sum, s, {2, 3}));
  ConeCertificate negative{{{"f0", Rat(-2)}, {"f1", Rat(3)}}};
  CHECK(!verify_certificate(negative, s, {-2, 3}));
  ConeCertificate bad_label{{{"zzz", Rat(2)}}};
  CHECK(!verify_certificate(bad_label, s, {2, 0}));
}
