#pragma once

// Brute-force reference implementations and random generators shared by the
// unit tests and the acceptance runner. Everything is deterministic: engines
// are seeded by the callers and all draws go through rnd().

#include <optional>
#include <random>
#include <vector>

#include "torusadm/admissibility.hpp"

namespace testsupport {

using namespace torusadm;

inline long rnd(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

inline std::vector<Int> random_form(std::mt19937_64& g, int rank, long c) {
  while (true) {
    std::vector<Int> f(rank);
    bool zero = true;
    for (auto& x : f) {
      x = rnd(g, -c, c);
      zero &= x == 0;
    }
    if (!zero) return f;
  }
}

inline CharacterSetup random_setup(std::mt19937_64& g, int max_rank = 4,
                                   int max_forms = 6, long coeff = 3) {
  CharacterSetup s;
  s.rank = static_cast<int>(rnd(g, 1, max_rank));
  const int k = static_cast<int>(rnd(g, 1, max_forms));
  std::vector<FormVector> forms;
  for (int i = 0; i < k; ++i)
    forms.push_back({"f" + std::to_string(i), random_form(g, s.rank, coeff)});
  s.phi = make_form_set(s.rank, forms);
  return s;
}

// k forms whose sum is zero, so the all-ones positive relation holds.
inline FormSet random_positive_relation_set(std::mt19937_64& g, int rank,
                                            int k, long coeff = 3) {
  if (k < 2) k = 2;  // a single nonzero form has no positive relation
  while (true) {
    std::vector<FormVector> forms;
    std::vector<Int> sum(rank, 0);
    for (int i = 0; i + 1 < k; ++i) {
      auto f = random_form(g, rank, coeff);
      for (int j = 0; j < rank; ++j) sum[j] += f[j];
      forms.push_back({"f" + std::to_string(i), f});
    }
    std::vector<Int> last(rank);
    bool zero = true;
    for (int j = 0; j < rank; ++j) {
      last[j] = -sum[j];
      zero &= last[j] == 0;
    }
    if (zero) continue;
    forms.push_back({"f" + std::to_string(k - 1), last});
    return make_form_set(rank, forms);
  }
}

inline TorusPoint random_torsion_point(std::mt19937_64& g,
                                       const CharacterSetup& s,
                                       long max_den = 4) {
  std::vector<Rat> re(s.rank);
  for (auto& x : re) {
    long d = rnd(g, 1, max_den);
    x = make_rat(rnd(g, 0, d - 1), d);
  }
  return canonicalize(re, s);
}

inline TorusPoint random_point(std::mt19937_64& g, const CharacterSetup& s,
                               long max_den = 4, bool allow_im = true) {
  auto t = random_torsion_point(g, s, max_den);
  if (allow_im && rnd(g, 0, 3) == 0)
    for (auto& x : t.im) x = make_rat(rnd(g, -2, 2), rnd(g, 1, 2));
  return t;
}

// A setup/point pair biased toward non-admissible points: the point sits on
// a torsion component of the subtorus of a positive-relation subset, where
// non-identity components are frequently obstructed. Uniform sampling almost
// never lands on such points.
inline std::pair<CharacterSetup, TorusPoint> random_nonadm_candidate(
    std::mt19937_64& g) {
  while (true) {
    const int rank = static_cast<int>(rnd(g, 1, 3));
    auto S = random_positive_relation_set(g, rank,
                                          static_cast<int>(rnd(g, 2, 4)));
    CharacterSetup s;
    s.rank = rank;
    auto forms = S.forms;
    const int extras = static_cast<int>(rnd(g, 0, 2));
    for (int i = 0; i < extras; ++i)
      forms.push_back({"x" + std::to_string(i), random_form(g, rank, 3)});
    s.phi = make_form_set(rank, forms);
    auto sub = subtorus(S, s);
    if (sub.component_count() > 24) continue;
    const long k = rnd(g, 0, sub.component_count() - 1);
    return {s, sub.component_reps[static_cast<size_t>(k)]};
  }
}

// Searches integral shifts of the real part in a box for an exponent vector
// on which no form of Phi takes a positive integer. Finding one proves
// admissibility; exhausting the box proves nothing.
inline std::optional<std::vector<Rat>> brute_witness(const TorusPoint& t,
                                                     const CharacterSetup& s,
                                                     long box = 3) {
  const int n = s.rank;
  std::vector<long> z(n, -box);
  while (true) {
    std::vector<Rat> v(n);
    for (int i = 0; i < n; ++i) v[i] = t.re[i] + Rat(z[i]);
    bool good = true;
    for (int i = 0; i < s.phi.size() && good; ++i) {
      const auto& f = s.phi[i];
      Rat im_val = form_value(f, t.im);
      if (im_val != 0) continue;
      if (is_positive_integer(form_value(f, v))) good = false;
    }
    if (good) return v;
    int p = n - 1;
    while (p >= 0 && z[p] == box) z[p--] = -box;
    if (p < 0) return std::nullopt;
    ++z[p];
  }
}

// Exhaustive search for an integral solution of M x = b in a box.
inline bool brute_integer_solvable(const IntMatrix& m,
                                   const std::vector<Int>& b, long box = 6) {
  if (m.cols == 0) {
    for (const auto& x : b)
      if (x != 0) return false;
    return true;
  }
  std::vector<long> z(m.cols, -box);
  while (true) {
    bool ok = true;
    for (int r = 0; r < m.rows && ok; ++r) {
      Int acc = 0;
      for (int c = 0; c < m.cols; ++c) acc += m(r, c) * z[c];
      ok = acc == b[r];
    }
    if (ok) return true;
    int p = m.cols - 1;
    while (p >= 0 && z[p] == box) z[p--] = -box;
    if (p < 0) return false;
    ++z[p];
  }
}

}  // namespace testsupport
