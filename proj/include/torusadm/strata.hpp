#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "torusadm/admissibility.hpp"

namespace torusadm {

// One translated subtorus rep * T(S)_1 of the non-admissible locus: the
// defining forms, its dimension, the torsion translation (component
// representative) and an integer tangent basis parametrizing the identity
// component.
struct TranslatedSubtorus {
  FormSet S;
  int dimension = 0;
  TorusPoint representative;
  std::vector<Int> component;  // torsion coordinates within C(S)
  std::vector<std::vector<Int>> tangent;
};

struct EnumerateOptions {
  bool essential_only = false;
  // When set, candidate subsets are drawn from these forms instead of Phi.
  std::optional<FormSet> restrict_forms;
  // Guard: enumeration aborts upfront when 2^|candidates| exceeds this.
  unsigned long long budget = 1ull << 20;
  int jobs = 1;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonAdmResult {
  std::vector<TranslatedSubtorus> subtori;
  unsigned long long subsets_examined = 0;
};

// Enumerates the non-admissible locus as a finite union of translated
// subtori: walks candidate subsets S of Phi (multiple-point forms only in
// essential mode), prunes subsets that provably carry no non-admissible
// strata, tests one generic representative per remaining component, and
// returns the maximal non-admissible subtori (no returned subtorus contained
// in another), sorted by dimension descending then label list.
//
// Pruning rules, each exact:
//   - some form outside S lies in the integer span of S: every stratum of S
//     is empty (that form evaluates integrally on all of T(S));
//   - S linearly independent: every stratum is admissible;
//   - D(S) full-dimensional (equivalently no implicit equality, decided by
//     one feasibility check): every stratum is admissible;
//   - identity components are always admissible and are skipped.
NonAdmResult enumerate_nonadm(const CharacterSetup& setup,
                              const EnumerateOptions& options = {});

}  // namespace torusadm
