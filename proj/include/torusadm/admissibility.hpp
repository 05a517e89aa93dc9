#pragma once

#include <optional>
#include <vector>

#include "torusadm/torus.hpp"

namespace torusadm {

// Outcome of the admissibility decision for one torus point, always carrying
// a machine-checkable certificate:
//   - admissible: an exponent lift v with Exp(v) = t, a(v) <= 0 for every
//     a in Phi_t and a(v) not an integer for every a outside Phi_t, so no
//     form value is a positive integer (checkable literally);
//   - non-admissible: the integer system "a(v0 + lambda) = 0 for all a in
//     the implicit equalities of Phi_t" recorded as (matrix, rhs) with no
//     integer solution (re-checkable by solve_integer_linear).
struct AdmissibilityVerdict {
  bool admissible = false;
  FormSet phi_t;
  std::optional<std::vector<Rat>> witness_re;
  std::optional<std::vector<Rat>> witness_im;
  struct Obstruction {
    FormSet implicit_forms;
    IntMatrix system;
    std::vector<Int> rhs;
  };
  std::optional<Obstruction> obstruction;
};

// Decision procedure: t is admissible iff the coset v0 + Lambda meets the
// null space W of the implicit equalities S= of S = Phi_t. Reducing
// "coset meets D(S)" to "coset meets W" is sound: D(S) is a rational
// polyhedral cone that is full-dimensional inside W (by definition of S=),
// hence contains arbitrarily large balls of W, and Lambda meet W has full
// rank in W because W is a rational subspace; so the coset meets D(S) iff it
// meets W, and the latter is one integer linear solve. The witness is then
// pushed into the cone interior along an integral direction, which keeps
// every form outside Phi_t non-integral. The unit tests cross-check the
// whole procedure against a bounded brute-force witness search.
//
// Complex points: only log-rational points are accepted; a form belongs to
// Phi_t iff its real exponent is integral and its imaginary exponent is 0,
// so the real algorithm applies unchanged.
AdmissibilityVerdict is_admissible(const TorusPoint& t,
                                   const CharacterSetup& setup);

// Re-check a verdict's certificate from scratch. For admissible verdicts the
// witness is checked literally against the defining condition; for
// non-admissible ones the recorded system is re-solved (must stay unsolvable)
// and its rows re-derived from the point.
bool verify_verdict(const AdmissibilityVerdict& v, const TorusPoint& t,
                    const CharacterSetup& setup);

// A torsion point with Phi_t = S exactly, lying in the component of
// sub.component_reps[component]; nullopt when that stratum is empty.
// Emptiness is decided exactly: the stratum is empty iff some form outside S
// lies in the rational row span of S and takes an integral value on the
// component representative. Otherwise representatives are drawn by
// perturbing along the tangent with denominators from increasing primes
// until Phi_t = S holds exactly (deterministic retry sequence).
std::optional<TorusPoint> generic_representative(const FormSet& s,
                                                 int component,
                                                 const SubtorusDescription& sub,
                                                 const CharacterSetup& setup);

}  // namespace torusadm
