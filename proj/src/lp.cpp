#include "torusadm/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "torusadm/exact_linalg.hpp"

namespace torusadm {

namespace {

constexpr int kFmMaxVars = 12;

struct Ineq {
  std::vector<Rat> co;
  Rat rhs;
};

// Scale to a primitive integer vector for deduplication.
std::vector<Int> normalized_key(const Ineq& iq) {
  Int den(1);
  for (const Rat& v : iq.co) den = lcm(den, v.get_den());
  den = lcm(den, iq.rhs.get_den());
  std::vector<Int> ints;
  ints.reserve(iq.co.size() + 1);
  for (const Rat& v : iq.co) ints.push_back(Int(v.get_num() * (den / v.get_den())));
  ints.push_back(Int(iq.rhs.get_num() * (den / iq.rhs.get_den())));
  Int g(0);
  for (const Int& v : ints) g = gcd(g, v);
  if (g > 1)
    for (Int& v : ints) v /= g;
  return ints;
}

bool constant_and_violated(const Ineq& iq) {
  return iq.rhs < 0 &&
         std::all_of(iq.co.begin(), iq.co.end(),
                     [](const Rat& x) { return x == 0; });
}

// Fourier-Motzkin elimination over Q. Eliminates variables from the highest
// index down, keeping every layer for back-substitution. Constant rows
// (all-zero coefficients) must be checked both on entry and after every
// elimination round: when m = 0 or when a round produces them, they are the
// only record of infeasibility.
std::optional<std::vector<Rat>> fm_solve(std::vector<Ineq> ineqs, int m) {
  for (const Ineq& iq : ineqs)
    if (constant_and_violated(iq)) return std::nullopt;
  std::vector<std::vector<Ineq>> layers;
  layers.push_back(ineqs);
  std::vector<Ineq> cur = std::move(ineqs);
  for (int k = m - 1; k >= 0; --k) {
    std::vector<const Ineq*> pos, neg;
    std::vector<Ineq> next;
    for (const Ineq& iq : cur) {
      if (iq.co[k] > 0)
        pos.push_back(&iq);
      else if (iq.co[k] < 0)
        neg.push_back(&iq);
      else
        next.push_back(iq);
    }
    for (const Ineq* p : pos)
      for (const Ineq* q : neg) {
        Ineq comb;
        comb.co.resize(m, Rat(0));
        for (int i = 0; i < m; ++i)
          comb.co[i] = p->co[i] / p->co[k] - q->co[i] / q->co[k];
        comb.rhs = p->rhs / p->co[k] - q->rhs / q->co[k];
        next.push_back(std::move(comb));
      }
    std::set<std::vector<Int>> seen;
    std::vector<Ineq> dedup;
    for (Ineq& iq : next) {
      if (seen.insert(normalized_key(iq)).second) dedup.push_back(std::move(iq));
    }
    cur = std::move(dedup);
    for (const Ineq& iq : cur)
      if (constant_and_violated(iq)) return std::nullopt;
    layers.push_back(cur);
  }
  // Back-substitute: in layers[m-1-k] every variable above k is eliminated.
  std::vector<Rat> t(m, Rat(0));
  for (int k = 0; k < m; ++k) {
    const std::vector<Ineq>& lay = layers[m - 1 - k];
    std::optional<Rat> lo, hi;
    for (const Ineq& iq : lay) {
      if (iq.co[k] == 0) continue;
      Rat bound = iq.rhs;
      for (int i = 0; i < k; ++i) bound -= iq.co[i] * t[i];
      bound /= iq.co[k];
      if (iq.co[k] > 0)
        hi = hi ? std::min(*hi, bound) : bound;
      else
        lo = lo ? std::max(*lo, bound) : bound;
    }
    if (lo && hi) {
      if (*lo > *hi) return std::nullopt;
      t[k] = (*lo + *hi) / 2;
    } else if (lo) {
      t[k] = *lo;
    } else if (hi) {
      t[k] = *hi;
    }
  }
  return t;
}

// Exact phase-1 simplex with Bland's rule: feasibility of { x >= 0 : A x = b }.
// Minimizes the sum of artificial variables; feasible iff the optimum is 0.
std::optional<std::vector<Rat>> simplex_nonneg(const QMatrix& a,
                                               const std::vector<Rat>& b) {
  const int m = a.rows;
  const int n = a.cols;
  QMatrix T(m, n + m);  // [A | I] with b normalized to >= 0
  std::vector<Rat> rhs(b);
  for (int i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    if (flip) rhs[i] = -rhs[i];
    for (int j = 0; j < n; ++j) T(i, j) = flip ? -a(i, j) : a(i, j);
    T(i, n + i) = 1;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs for minimizing the sum of artificials.
  std::vector<Rat> cost(n + m, Rat(0));
  for (int i = 0; i < m; ++i) cost[n + i] = 1;
  Rat obj(0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n + m; ++j) cost[j] -= T(i, j);
    obj -= rhs[i];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;  // Bland: lowest index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rat ratio = rhs[i] / T(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw std::logic_error("phase-1 simplex unbounded");
    const Rat pv = T(leave, enter);
    for (int j = 0; j < n + m; ++j) T(leave, j) /= pv;
    rhs[leave] /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      const Rat f = T(i, enter);
      for (int j = 0; j < n + m; ++j) T(i, j) -= f * T(leave, j);
      rhs[i] -= f * rhs[leave];
    }
    const Rat cf = cost[enter];
    if (cf != 0) {
      for (int j = 0; j < n + m; ++j) cost[j] -= cf * T(leave, j);
      obj -= cf * rhs[leave];
    }
    basis[leave] = enter;
  }
  if (obj != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = rhs[i];
  return x;
}

}  // namespace

std::optional<std::vector<Rat>> lp_feasible(const QMatrix& a_eq,
                                            const std::vector<Rat>& b_eq,
                                            const QMatrix& a_le,
                                            const std::vector<Rat>& b_le,
                                            int nvars, LpEngine engine) {
  // Equality phase: x = x0 + N t with t free.
  std::vector<Rat> x0(nvars, Rat(0));
  std::vector<std::vector<Rat>> N;
  if (a_eq.rows > 0) {
    auto sol = rational_solve(a_eq, b_eq);
    if (!sol) return std::nullopt;
    x0 = sol->particular;
    N = sol->nullspace;
  } else {
    for (int j = 0; j < nvars; ++j) {
      std::vector<Rat> v(nvars, Rat(0));
      v[j] = 1;
      N.push_back(std::move(v));
    }
  }
  const int m = static_cast<int>(N.size());
  std::vector<Ineq> ineqs;
  ineqs.reserve(a_le.rows);
  for (int r = 0; r < a_le.rows; ++r) {
    Ineq iq;
    iq.co.resize(m, Rat(0));
    Rat cst(0);
    for (int j = 0; j < nvars; ++j) {
      const Rat& c = a_le(r, j);
      if (c == 0) continue;
      cst += c * x0[j];
      for (int k = 0; k < m; ++k) iq.co[k] += c * N[k][j];
    }
    iq.rhs = b_le[r] - cst;
    ineqs.push_back(std::move(iq));
  }

  std::optional<std::vector<Rat>> t;
  const bool use_fm = engine == LpEngine::FourierMotzkin ||
                      (engine == LpEngine::Auto && m <= kFmMaxVars);
  if (use_fm) {
    t = fm_solve(std::move(ineqs), m);
  } else {
    // Split t = u - w, add slacks: A_t u - A_t w + s = rhs, all >= 0.
    const int rows = static_cast<int>(ineqs.size());
    QMatrix A(rows, 2 * m + rows);
    std::vector<Rat> b(rows);
    for (int r = 0; r < rows; ++r) {
      for (int k = 0; k < m; ++k) {
        A(r, k) = ineqs[r].co[k];
        A(r, m + k) = -ineqs[r].co[k];
      }
      A(r, 2 * m + r) = 1;
      b[r] = ineqs[r].rhs;
    }
    auto xs = simplex_nonneg(A, b);
    if (xs) {
      std::vector<Rat> tt(m);
      for (int k = 0; k < m; ++k) tt[k] = (*xs)[k] - (*xs)[m + k];
      t = std::move(tt);
    }
  }
  if (!t) return std::nullopt;
  std::vector<Rat> x = x0;
  for (int k = 0; k < m; ++k) {
    if ((*t)[k] == 0) continue;
    for (int j = 0; j < nvars; ++j) x[j] += (*t)[k] * N[k][j];
  }
  return x;
}

std::optional<std::vector<Rat>> nonneg_feasible(const QMatrix& a,
                                                const std::vector<Rat>& b,
                                                LpEngine engine) {
  if (engine == LpEngine::Simplex) return simplex_nonneg(a, b);
  const int n = a.cols;
  QMatrix neg_id(n, n);
  for (int i = 0; i < n; ++i) neg_id(i, i) = -1;
  return lp_feasible(a, b, neg_id, std::vector<Rat>(n, Rat(0)), n, engine);
}

}  // namespace torusadm
