#include <doctest.h>

#include <random>
#include <tuple>

#include "support/oracles.hpp"
#include "torusadm/admissibility.hpp"
#include "torusadm/cones.hpp"

using namespace torusadm;
using testsupport::rnd;

namespace {

CharacterSetup setup2(std::initializer_list<std::vector<Int>> rows) {
  CharacterSetup s;
  std::vector<FormVector> fs;
  int i = 0;
  for (const auto& r : rows) {
    s.rank = static_cast<int>(r.size());
    fs.push_back({"f" + std::to_string(i++), r});
  }
  s.phi = make_form_set(s.rank, fs);
  return s;
}

}  // namespace

TEST_CASE("unit point is always admissible") {
  std::mt19937_64 g(555);
  for (int iter = 0; iter < 30; ++iter) {
    auto s = testsupport::random_setup(g);
    auto v = is_admissible(unit_point(s), s);
    CHECK(v.admissible);
    CHECK(verify_verdict(v, unit_point(s), s));
  }
}

TEST_CASE("admissibility golden cases") {
  SUBCASE("single form, point off its torus") {
    auto s = setup2({{1}});
    auto t = canonicalize({make_rat(1, 2)}, s);
    auto v = is_admissible(t, s);
    CHECK(v.admissible);
    CHECK(v.phi_t.empty());
    CHECK(verify_verdict(v, t, s));
  }
  SUBCASE("single form at the unit") {
    auto s = setup2({{1}});
    auto t = unit_point(s);
    auto v = is_admissible(t, s);
    CHECK(v.admissible);
    REQUIRE(v.phi_t.size() == 1);
    // the witness literally avoids positive integers
    CHECK(!is_positive_integer(form_value(s.phi[0], *v.witness_re)));
  }
  SUBCASE("doubled opposite pair: -1 is not admissible") {
    auto s = setup2({{2}, {-2}});
    auto t = canonicalize({make_rat(1, 2)}, s);
    auto v = is_admissible(t, s);
    CHECK(!v.admissible);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->implicit_forms.size() == 2);
    CHECK(verify_verdict(v, t, s));
    // independent evidence: the obstruction system has no solution nearby
    CHECK(!testsupport::brute_integer_solvable(v.obstruction->system,
                                               v.obstruction->rhs, 8));
  }
  SUBCASE("doubled opposite pair: the unit is admissible") {
    auto s = setup2({{2}, {-2}});
    auto v = is_admissible(unit_point(s), s);
    CHECK(v.admissible);
    CHECK(verify_verdict(v, unit_point(s), s));
  }
  SUBCASE("witness needs a push off the walls") {
    // Phi = {x}; at the unit the implicit equalities are empty, so the
    // witness must move x to a nonpositive value.
    auto s = setup2({{1}});
    auto v = is_admissible(unit_point(s), s);
    CHECK(v.admissible);
    CHECK(form_value(s.phi[0], *v.witness_re) <= 0);
  }
}

TEST_CASE("complex points") {
  auto s = setup2({{1, 0}, {0, 2}});
  // im = (1,0): the first form has a nonvanishing imaginary value, so only
  // the second form constrains admissibility.
  auto t = canonicalize({Rat(0), make_rat(1, 2)}, {Rat(1), Rat(0)}, s);
  auto v = is_admissible(t, s);
  CHECK(v.phi_t.size() == 1);
  CHECK(v.phi_t[0].label == "f1");
  CHECK(v.admissible);
  CHECK(verify_verdict(v, t, s));
  CHECK(*v.witness_im == t.im);
}

TEST_CASE("oracle agreement on random points") {
  std::mt19937_64 g(80608);
  int brute_hits = 0, non_admissible = 0;
  for (int iter = 0; iter < 80; ++iter) {
    CharacterSetup s;
    TorusPoint t;
    if (iter % 4 == 3) {
      // bias a quarter of the sample toward non-admissible points
      std::tie(s, t) = testsupport::random_nonadm_candidate(g);
    } else {
      s = testsupport::random_setup(g);
      t = testsupport::random_point(g, s);
    }
    auto v = is_admissible(t, s);
    CHECK(verify_verdict(v, t, s));
    auto w = testsupport::brute_witness(t, s, 3);
    if (w.has_value()) {
      ++brute_hits;
      CHECK(v.admissible);
    }
    if (!v.admissible) {
      ++non_admissible;
      CHECK(!w.has_value());
      CHECK(!testsupport::brute_integer_solvable(v.obstruction->system,
                                                 v.obstruction->rhs, 6));
    }
  }
  CHECK(brute_hits >= 30);
  CHECK(non_admissible >= 3);
}

TEST_CASE("admissible iff identity component under a positive relation") {
  std::mt19937_64 g(1723);
  int applied = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const int rank = static_cast<int>(rnd(g, 1, 3));
    auto S = testsupport::random_positive_relation_set(
        g, rank, static_cast<int>(rnd(g, 2, 4)));
    CharacterSetup s;
    s.rank = rank;
    s.phi = S;
    auto sub = subtorus(S, s);
    if (sub.component_count() > 8) continue;
    for (size_t c = 0; c < sub.component_reps.size(); ++c) {
      TorusPoint t = sub.component_reps[c];
      auto phi_t = phi_at(t, s);
      if (!positive_relation(phi_t).has_value()) continue;
      ++applied;
      bool adm = is_admissible(t, s).admissible;
      CHECK(adm == in_identity_component(t, phi_t));
    }
  }
  CHECK(applied >= 40);
}

TEST_CASE("generic representatives") {
  SUBCASE("identity component of a positive-dimensional torus") {
    auto s = setup2({{2, 0}});
    auto sub = subtorus(s.phi, s);
    auto g0 = generic_representative(s.phi, 0, sub, s);
    REQUIRE(g0.has_value());
    // generic: Phi_t is exactly S
    CHECK(phi_at_indices(*g0, s) == std::vector<int>{0});
    CHECK(is_admissible(*g0, s).admissible);
  }
  SUBCASE("zero-dimensional stratum uses the representative itself") {
    auto s = setup2({{2}, {1}});
    FormSet S = s.phi.subset({0});
    auto sub = subtorus(S, s);
    REQUIRE(sub.component_reps.size() == 2);
    auto g1 = generic_representative(S, 1, sub, s);
    REQUIRE(g1.has_value());
    CHECK(g1->re == std::vector<Rat>{make_rat(1, 2)});
  }
  SUBCASE("empty stratum is reported empty") {
    // S = {x} inside Phi = {x, 2x}: any point with x integral also has 2x
    // integral, so no point has Phi_t = {x} exactly.
    auto s = setup2({{1}, {2}});
    FormSet S = s.phi.subset({0});
    auto sub = subtorus(S, s);
    CHECK(!generic_representative(S, 0, sub, s).has_value());
  }
}

TEST_CASE("same-component generic points agree on admissibility") {
  std::mt19937_64 g(40204);
  int pairs = 0;
  for (int iter = 0; iter < 40; ++iter) {
    auto s = testsupport::random_setup(g, 3, 4);
    // random nonempty subset of Phi
    std::vector<int> idx;
    for (int i = 0; i < s.phi.size(); ++i)
      if (rnd(g, 0, 1)) idx.push_back(i);
    if (idx.empty()) continue;
    FormSet S = s.phi.subset(idx);
    auto sub = subtorus(S, s);
    if (sub.component_count() > 6 || sub.dimension == 0) continue;
    for (size_t c = 0; c < sub.component_reps.size(); ++c) {
      auto g1 = generic_representative(S, static_cast<int>(c), sub, s);
      if (!g1) continue;
      // a second generic point: shift by a random rational tangent combo
      std::vector<Rat> re2 = sub.component_reps[c].re;
      for (const auto& dir : sub.identity_tangent) {
        Rat coeff = make_rat(rnd(g, 1, 30), 31);
        for (int j = 0; j < s.rank; ++j) re2[j] += coeff * Rat(dir[j]);
      }
      auto t2 = canonicalize(re2, s);
      if (phi_at_indices(t2, s) != phi_at_indices(*g1, s)) continue;
      ++pairs;
      CHECK(is_admissible(*g1, s).admissible ==
            is_admissible(t2, s).admissible);
    }
  }
  CHECK(pairs >= 15);
}
