#include "torusadm/torus.hpp"

#include <stdexcept>

#include "torusadm/exact_linalg.hpp"

namespace torusadm {

TorusPoint canonicalize(const std::vector<Rat>& raw_re,
                        const std::vector<Rat>& raw_im,
                        const CharacterSetup& setup) {
  if (static_cast<int>(raw_re.size()) != setup.rank ||
      (!raw_im.empty() && raw_im.size() != raw_re.size()))
    throw std::invalid_argument("canonicalize: exponent vector length != rank");
  TorusPoint t;
  t.re.reserve(setup.rank);
  for (const Rat& x : raw_re) t.re.push_back(mod1(x));
  t.im = raw_im.empty() ? std::vector<Rat>(setup.rank, Rat(0)) : raw_im;
  return t;
}

TorusPoint canonicalize(const std::vector<Rat>& raw_re,
                        const CharacterSetup& setup) {
  return canonicalize(raw_re, {}, setup);
}

TorusPoint unit_point(const CharacterSetup& setup) {
  TorusPoint t;
  t.re.assign(setup.rank, Rat(0));
  t.im.assign(setup.rank, Rat(0));
  return t;
}

std::pair<Rat, Rat> form_exponent(const FormVector& f, const TorusPoint& t) {
  return {form_value(f, t.re), form_value(f, t.im)};
}

std::vector<int> phi_at_indices(const TorusPoint& t,
                                const CharacterSetup& setup) {
  std::vector<int> out;
  for (int i = 0; i < setup.phi.size(); ++i) {
    const auto [re, im] = form_exponent(setup.phi[i], t);
    if (is_integer(re) && im == 0) out.push_back(i);
  }
  return out;
}

FormSet phi_at(const TorusPoint& t, const CharacterSetup& setup) {
  return setup.phi.subset(phi_at_indices(t, setup));
}

SubtorusDescription subtorus(const FormSet& s, const CharacterSetup& setup) {
  const int n = setup.rank;
  SubtorusDescription d;
  d.S = s;
  d.identity_tangent = d0_subspace(
      s.empty() ? FormSet{n, {}} : s);  // saturated basis of D0(S)
  if (s.empty()) {
    d.dimension = n;
    d.component_reps = {unit_point(setup)};
    d.rep_combos = {{}};
    return d;
  }
  const SNFResult sn = snf(s.matrix());
  const int bound = std::min(s.size(), n);
  std::vector<Int> divs;
  for (int i = 0; i < bound; ++i)
    if (sn.D(i, i) != 0) divs.push_back(sn.D(i, i));
  const int rk = static_cast<int>(divs.size());
  d.dimension = n - rk;
  std::vector<int> nontrivial;  // positions with divisor > 1
  for (int i = 0; i < rk; ++i)
    if (divs[i] > 1) {
      d.component_group.push_back(divs[i]);
      nontrivial.push_back(i);
    }
  // Torsion representatives: v = V w with w_i = k_i / d_i; the odometer over
  // k runs the last coordinate fastest, so the identity (all k = 0) is first.
  std::vector<Int> combo(nontrivial.size(), Int(0));
  while (true) {
    std::vector<Rat> w(n, Rat(0));
    for (size_t j = 0; j < nontrivial.size(); ++j)
      w[nontrivial[j]] = make_rat(combo[j], divs[nontrivial[j]]);
    std::vector<Rat> v(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (w[j] == 0) continue;
        v[i] += Rat(sn.V(i, j)) * w[j];
      }
      v[i] = mod1(v[i]);
    }
    d.component_reps.push_back(TorusPoint{v, std::vector<Rat>(n, Rat(0))});
    d.rep_combos.push_back(combo);
    int pos = static_cast<int>(combo.size()) - 1;
    while (pos >= 0) {
      combo[pos] += 1;
      if (combo[pos] < divs[nontrivial[pos]]) break;
      combo[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return d;
}

bool in_identity_component(const TorusPoint& t, const FormSet& s) {
  if (!t.is_torsion())
    throw std::invalid_argument(
        "in_identity_component: point is not torsion (nonzero imaginary part)");
  if (s.empty()) return true;
  std::vector<Int> b;
  b.reserve(s.size());
  for (const FormVector& f : s.forms) {
    const Rat val = form_value(f, t.re);
    if (!is_integer(val))
      throw std::invalid_argument("in_identity_component: form '" + f.label +
                                  "' does not take value 1 at the point");
    b.push_back(-val.get_num());
  }
  return solve_integer_linear(s.matrix(), b).has_value();
}

bool in_translated_subtorus(const TorusPoint& t, const TorusPoint& rep,
                            const FormSet& s) {
  // t in rep * T(S)_1 iff v_t - v_rep lands in (D0(S) tensor C) + Lambda:
  // the imaginary difference must be annihilated by S outright, and
  // M (re_t - re_rep) must be an integer vector of the form M lambda.
  if (s.empty()) return true;
  std::vector<Int> b;
  b.reserve(s.size());
  for (const FormVector& f : s.forms) {
    if (form_value(f, t.im) != form_value(f, rep.im)) return false;
    Rat diff = form_value(f, t.re) - form_value(f, rep.re);
    if (!is_integer(diff)) return false;
    b.push_back(diff.get_num());
  }
  return solve_integer_linear(s.matrix(), b).has_value();
}

}  // namespace torusadm
