#include "torusadm/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace torusadm {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

std::optional<Rat> parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string nums(text.substr(0, slash));
  std::string dens = "1";
  if (slash != std::string_view::npos) {
    dens = std::string(text.substr(slash + 1));
    if (dens.empty()) return std::nullopt;
  }
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  if (!valid(nums) || !valid(dens)) return std::nullopt;
  Int n(nums), d(dens);
  if (d == 0) return std::nullopt;
  return make_rat(n, d);
}

std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct SnfWork {
  IntMatrix A, U, V;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < A.cols; ++k) std::swap(A(i, k), A(j, k));
    for (int k = 0; k < U.cols; ++k) std::swap(U(i, k), U(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < A.rows; ++k) std::swap(A(k, i), A(k, j));
    for (int k = 0; k < V.rows; ++k) std::swap(V(k, i), V(k, j));
  }
  void addrow(int i, int j, const Int& k) {  // row i += k * row j
    for (int c = 0; c < A.cols; ++c) A(i, c) += k * A(j, c);
    for (int c = 0; c < U.cols; ++c) U(i, c) += k * U(j, c);
  }
  void addcol(int i, int j, const Int& k) {  // col i += k * col j
    for (int r = 0; r < A.rows; ++r) A(r, i) += k * A(r, j);
    for (int r = 0; r < V.rows; ++r) V(r, i) += k * V(r, j);
  }
  void negrow(int i) {
    for (int c = 0; c < A.cols; ++c) A(i, c) = -A(i, c);
    for (int c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
  }

  // Clear row and column t of the submatrix A[t..rmax][t..cmax] by the usual
  // gcd dance, leaving a nonnegative pivot at (t, t).
  void reduce_at(int t, int rmax, int cmax) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i <= rmax; ++i)
        for (int j = t; j <= cmax; ++j)
          if (A(i, j) != 0 &&
              (pi < 0 || cmp(abs(A(i, j)), abs(A(pi, pj))) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return;  // submatrix is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i <= rmax; ++i) {
        if (A(i, t) == 0) continue;
        addrow(i, t, -fdiv(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j <= cmax; ++j) {
        if (A(t, j) == 0) continue;
        addcol(j, t, -fdiv(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (clean) {
        if (A(t, t) < 0) negrow(t);
        return;
      }
    }
  }
};

}  // namespace

SNFResult snf(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; ++t) w.reduce_at(t, m.rows - 1, m.cols - 1);
  // Enforce the divisibility chain d1 | d2 | ... with adjacent fixups.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      const Int a = w.A(i, i);
      const Int b = w.A(i + 1, i + 1);
      if (a != 0 && b % a != 0) {
        w.addcol(i, i + 1, 1);
        w.reduce_at(i, i + 1, i + 1);
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (w.A(i, i) < 0) w.negrow(i);
  return SNFResult{std::move(w.U), std::move(w.A), std::move(w.V)};
}

HNFResult hnf(const IntMatrix& m) {
  IntMatrix H = m;
  IntMatrix U = IntMatrix::identity(m.rows);
  auto addrow = [&](int i, int j, const Int& k) {
    for (int c = 0; c < H.cols; ++c) H(i, c) += k * H(j, c);
    for (int c = 0; c < U.cols; ++c) U(i, c) += k * U(j, c);
  };
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < H.cols; ++c) std::swap(H(i, c), H(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
  };
  int pr = 0;
  for (int col = 0; col < H.cols && pr < H.rows; ++col) {
    // gcd-eliminate below position (pr, col)
    while (true) {
      int best = -1;
      for (int i = pr; i < H.rows; ++i)
        if (H(i, col) != 0 &&
            (best < 0 || cmp(abs(H(i, col)), abs(H(best, col))) < 0))
          best = i;
      if (best < 0) break;  // column is zero from pr down
      swap_rows(pr, best);
      bool clean = true;
      for (int i = pr + 1; i < H.rows; ++i) {
        if (H(i, col) == 0) continue;
        addrow(i, pr, -fdiv(H(i, col), H(pr, col)));
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(pr, col) == 0) continue;
    if (H(pr, col) < 0) {
      for (int c = 0; c < H.cols; ++c) H(pr, c) = -H(pr, c);
      for (int c = 0; c < U.cols; ++c) U(pr, c) = -U(pr, c);
    }
    for (int i = 0; i < pr; ++i)
      addrow(i, pr, -fdiv(H(i, col), H(pr, col)));
    ++pr;
  }
  return HNFResult{std::move(H), std::move(U)};
}

std::optional<std::vector<Int>> solve_integer_linear(const IntMatrix& m,
                                                     const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("solve_integer_linear: dimension mismatch");
  const SNFResult s = snf(m);
  std::vector<Int> ub(m.rows, Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int k = 0; k < m.rows; ++k) ub[i] += s.U(i, k) * b[k];
  const int n = std::min(m.rows, m.cols);
  std::vector<Int> y(m.cols, Int(0));
  for (int i = 0; i < n; ++i) {
    const Int& d = s.D(i, i);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  for (int i = n; i < m.rows; ++i)
    if (ub[i] != 0) return std::nullopt;
  std::vector<Int> x(m.cols, Int(0));
  for (int i = 0; i < m.cols; ++i)
    for (int j = 0; j < m.cols; ++j) x[i] += s.V(i, j) * y[j];
  return x;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  const SNFResult s = snf(m);
  const int n = std::min(m.rows, m.cols);
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.D(i, i) != 0) ++rank;
  const int dim = m.cols - rank;
  if (dim == 0) return {};
  IntMatrix rows(dim, m.cols);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < m.cols; ++i) rows(j, i) = s.V(i, rank + j);
  // Canonicalize the basis so equal kernels yield equal output.
  const HNFResult h = hnf(rows);
  std::vector<std::vector<Int>> out;
  for (int i = 0; i < dim; ++i) {
    auto r = h.H.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; }))
      out.push_back(std::move(r));
  }
  return out;
}

std::optional<RationalSolution> rational_solve(const QMatrix& m,
                                               const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != m.rows)
    throw std::invalid_argument("rational_solve: dimension mismatch");
  QMatrix A = m;
  std::vector<Rat> rhs = b;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < A.cols && rank < A.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < A.rows; ++i)
      if (A(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int c = 0; c < A.cols; ++c) std::swap(A(rank, c), A(piv, c));
      std::swap(rhs[rank], rhs[piv]);
    }
    const Rat pv = A(rank, col);
    for (int c = 0; c < A.cols; ++c) A(rank, c) /= pv;
    rhs[rank] /= pv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == rank || A(i, col) == 0) continue;
      const Rat f = A(i, col);
      for (int c = 0; c < A.cols; ++c) A(i, c) -= f * A(rank, c);
      rhs[i] -= f * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < A.rows; ++i)
    if (rhs[i] != 0) return std::nullopt;

  RationalSolution sol;
  sol.rank = rank;
  sol.particular.assign(A.cols, Rat(0));
  for (int r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = rhs[r];
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(A.cols, Rat(0));
    v[f] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -A(r, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

int rational_rank(const QMatrix& m) {
  QMatrix A = m;
  int rank = 0;
  for (int col = 0; col < A.cols && rank < A.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < A.rows; ++i)
      if (A(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < A.cols; ++c) std::swap(A(rank, c), A(piv, c));
    const Rat pv = A(rank, col);
    for (int i = rank + 1; i < A.rows; ++i) {
      if (A(i, col) == 0) continue;
      const Rat f = A(i, col) / pv;
      for (int c = col; c < A.cols; ++c) A(i, c) -= f * A(rank, c);
    }
    ++rank;
  }
  return rank;
}

Rat determinant(const QMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  QMatrix A = m;
  Rat det(1);
  for (int col = 0; col < A.cols; ++col) {
    int piv = -1;
    for (int i = col; i < A.rows; ++i)
      if (A(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int c = 0; c < A.cols; ++c) std::swap(A(col, c), A(piv, c));
      det = -det;
    }
    det *= A(col, col);
    const Rat pv = A(col, col);
    for (int i = col + 1; i < A.rows; ++i) {
      if (A(i, col) == 0) continue;
      const Rat f = A(i, col) / pv;
      for (int c = col; c < A.cols; ++c) A(i, c) -= f * A(col, c);
    }
  }
  return det;
}

Int determinant(const IntMatrix& m) {
  Rat d = determinant(to_rational(m));
  return d.get_num();  // denominator is 1 for integer input
}

}  // namespace torusadm
