#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusadm/cones.hpp"
#include "torusadm/forms.hpp"

namespace torusadm {

// The ambient data of the character torus T = Exp(V): the rank n of the
// exponent lattice and the integral forms Phi expressed in the chosen lattice
// basis. Built by hand in tests or from an arrangement (see arrangement.hpp).
struct CharacterSetup {
  int rank = 0;
  FormSet phi;
  std::string basis_note;
  // Indices of phi that are single-line coordinate forms (empty for hand-made
  // setups); the complement are multiple-point forms. Drives essential-only
  // enumeration.
  std::vector<int> coordinate_form_indices;

  bool is_coordinate_form(int idx) const {
    for (int i : coordinate_form_indices)
      if (i == idx) return true;
    return false;
  }
};

// A point t = Exp(v0) of the character torus, stored through the exponent
// vector v0 = re + i*im in lattice-basis coordinates. Canonical form reduces
// re into [0,1)^n; equality compares canonical re and exact im. Torsion
// points are exactly those with im = 0.
struct TorusPoint {
  std::vector<Rat> re;
  std::vector<Rat> im;

  bool operator==(const TorusPoint& o) const { return re == o.re && im == o.im; }
  bool is_torsion() const {
    for (const Rat& x : im)
      if (x != 0) return false;
    return true;
  }
  bool is_unit() const {
    if (!is_torsion()) return false;
    for (const Rat& x : re)
      if (x != 0) return false;
    return true;
  }
};

TorusPoint canonicalize(const std::vector<Rat>& raw_re,
                        const CharacterSetup& setup);
TorusPoint canonicalize(const std::vector<Rat>& raw_re,
                        const std::vector<Rat>& raw_im,
                        const CharacterSetup& setup);

TorusPoint unit_point(const CharacterSetup& setup);

// The character value exponent a(v0) as a pair (real, imaginary).
// a~(t) = 1 holds iff the real part is an integer and the imaginary part 0.
std::pair<Rat, Rat> form_exponent(const FormVector& f, const TorusPoint& t);

// Phi_t = { a in Phi : a~(t) = 1 }, in Phi's order.
std::vector<int> phi_at_indices(const TorusPoint& t,
                                const CharacterSetup& setup);
FormSet phi_at(const TorusPoint& t, const CharacterSetup& setup);

// The subtorus T(S) = { t : a~(t) = 1 for all a in S }: dimension, elementary
// divisors of the component group C(S) = T(S)/T(S)_1, one torsion
// representative per component (identity component first, represented by the
// unit), and an integer basis of the identity component's tangent D0(S).
struct SubtorusDescription {
  FormSet S;
  int dimension = 0;
  std::vector<Int> component_group;  // elementary divisors > 1
  std::vector<TorusPoint> component_reps;
  std::vector<std::vector<Int>> rep_combos;  // torsion coordinates per rep
  std::vector<std::vector<Int>> identity_tangent;

  int component_count() const {
    return static_cast<int>(component_reps.size());
  }
};

SubtorusDescription subtorus(const FormSet& s, const CharacterSetup& setup);

// True iff t lies in the identity component T(S)_1, i.e. some integral
// translate v0 + lambda of the exponent vector lies in D0(S). Preconditions
// (t torsion, a~(t) = 1 on S) are enforced and reported per offending form.
bool in_identity_component(const TorusPoint& t, const FormSet& s);

// Membership of t in the translated connected subtorus rep * T(S)_1.
bool in_translated_subtorus(const TorusPoint& t, const TorusPoint& rep,
                            const FormSet& s);

}  // namespace torusadm
