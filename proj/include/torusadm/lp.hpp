#pragma once

#include <optional>
#include <vector>

#include "torusadm/matrix.hpp"

namespace torusadm {

enum class LpEngine {
  Auto,            // Fourier-Motzkin when few free variables, else simplex
  FourierMotzkin,  // exact FM elimination (forced; testing)
  Simplex,         // exact phase-1 simplex with Bland's rule (forced; testing)
};

// Exact rational feasibility of { x in Q^nvars : A_eq x = b_eq, A_le x <= b_le }.
// Returns one feasible point, or nullopt when the system is infeasible.
// Equalities are eliminated first by Gaussian elimination; the inequality
// residual is decided by FM (<= 12 free variables under Auto) or by simplex.
std::optional<std::vector<Rat>> lp_feasible(const QMatrix& a_eq,
                                            const std::vector<Rat>& b_eq,
                                            const QMatrix& a_le,
                                            const std::vector<Rat>& b_le,
                                            int nvars,
                                            LpEngine engine = LpEngine::Auto);

// Feasibility of { x >= 0 : A x = b } (the Farkas/cone-membership shape).
std::optional<std::vector<Rat>> nonneg_feasible(const QMatrix& a,
                                                const std::vector<Rat>& b,
                                                LpEngine engine = LpEngine::Auto);

}  // namespace torusadm
