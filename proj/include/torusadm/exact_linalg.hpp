#pragma once

#include <optional>
#include <vector>

#include "torusadm/matrix.hpp"

namespace torusadm {

struct HNFResult {
  IntMatrix H;  // row-style Hermite normal form
  IntMatrix U;  // unimodular, U * M = H
};

// Row-style HNF: pivot of each nonzero row strictly right of the previous,
// pivots positive, entries above a pivot reduced into [0, pivot), zero rows
// last. Deterministic, hence usable as a canonical form.
HNFResult hnf(const IntMatrix& m);

struct SNFResult {
  IntMatrix U;  // left unimodular
  IntMatrix D;  // diagonal, d1 | d2 | ... | dr, nonnegative, zeros after rank
  IntMatrix V;  // right unimodular; U * M * V = D
};

SNFResult snf(const IntMatrix& m);

// Exact solution of M x = b over the integers, decided via SNF.
std::optional<std::vector<Int>> solve_integer_linear(const IntMatrix& m,
                                                     const std::vector<Int>& b);

// Saturated basis of {x integer : M x = 0}, canonicalized through HNF so the
// result is deterministic and primitive.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

struct RationalSolution {
  // One exact solution of M x = b plus a basis of the null space of M;
  // the full solution set is particular + span(nullspace).
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> nullspace;
  int rank = 0;
};

// Gaussian elimination over Q; nullopt iff inconsistent.
std::optional<RationalSolution> rational_solve(const QMatrix& m,
                                               const std::vector<Rat>& b);

int rational_rank(const QMatrix& m);

// Determinant over Q by fraction-free-ish Gaussian elimination (row swaps
// tracked). Used to assert unimodularity of transform matrices in tests.
Rat determinant(const QMatrix& m);
Int determinant(const IntMatrix& m);

}  // namespace torusadm
