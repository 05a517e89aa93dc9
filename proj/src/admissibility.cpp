#include "torusadm/admissibility.hpp"

#include <random>
#include <stdexcept>

#include "torusadm/exact_linalg.hpp"
#include "torusadm/lp.hpp"

namespace torusadm {

AdmissibilityVerdict is_admissible(const TorusPoint& t,
                                   const CharacterSetup& setup) {
  const int n = setup.rank;
  AdmissibilityVerdict out;
  const std::vector<int> s_idx = phi_at_indices(t, setup);
  out.phi_t = setup.phi.subset(s_idx);
  const FormSet s_eq = implicit_equalities(out.phi_t);

  // Integral translate with a(v0 + lambda) = 0 for every implicit equality.
  std::vector<Rat> v1 = t.re;
  if (!s_eq.empty()) {
    std::vector<Int> rhs;
    rhs.reserve(s_eq.size());
    for (const FormVector& f : s_eq.forms) {
      const Rat val = form_value(f, t.re);
      // a in Phi_t makes this integral by construction.
      rhs.push_back(-val.get_num());
    }
    const IntMatrix m = s_eq.matrix();
    auto lambda = solve_integer_linear(m, rhs);
    if (!lambda) {
      out.admissible = false;
      out.obstruction = AdmissibilityVerdict::Obstruction{s_eq, m, rhs};
      return out;
    }
    for (int i = 0; i < n; ++i) v1[i] += Rat((*lambda)[i]);
  }

  // Push into the cone interior: find an integral direction w with
  // a(w) = 0 on S= and a(w) <= -1 on S \ S=, then translate far enough.
  std::vector<const FormVector*> rest;
  for (const FormVector& f : out.phi_t.forms)
    if (s_eq.index_of(f.label) < 0) rest.push_back(&f);
  std::vector<Rat> v = v1;
  if (!rest.empty()) {
    QMatrix a_eq(s_eq.size(), n);
    for (int i = 0; i < s_eq.size(); ++i)
      for (int j = 0; j < n; ++j) a_eq(i, j) = Rat(s_eq.forms[i].coeffs[j]);
    QMatrix a_le(static_cast<int>(rest.size()), n);
    for (size_t i = 0; i < rest.size(); ++i)
      for (int j = 0; j < n; ++j) a_le(static_cast<int>(i), j) = Rat(rest[i]->coeffs[j]);
    auto w = lp_feasible(a_eq, std::vector<Rat>(s_eq.size(), Rat(0)), a_le,
                         std::vector<Rat>(rest.size(), Rat(-1)), n);
    if (!w)
      throw std::logic_error(
          "is_admissible: relative interior direction must exist");
    Int den(1);
    for (const Rat& x : *w) den = lcm(den, x.get_den());
    std::vector<Int> w_int(n);
    for (int i = 0; i < n; ++i)
      w_int[i] = Int((*w)[i].get_num() * (den / (*w)[i].get_den()));
    Int k(0);
    for (const FormVector* f : rest) {
      const Rat a1 = form_value(*f, v1);
      Rat aw(0);
      for (int i = 0; i < n; ++i) aw += Rat(f->coeffs[i]) * Rat(w_int[i]);
      if (a1 > 0) {
        const Int need = ceil_rat(a1 / -aw);
        if (need > k) k = need;
      }
    }
    if (k > 0)
      for (int i = 0; i < n; ++i) v[i] += Rat(k * w_int[i]);
  }

  out.admissible = true;
  out.witness_re = v;
  out.witness_im = t.im;
  // Safety net: the witness must avoid positive integers on all of Phi.
  for (const FormVector& f : setup.phi.forms) {
    if (form_value(f, t.im) != 0) continue;
    if (is_positive_integer(form_value(f, v)))
      throw std::logic_error("is_admissible: witness failed on form '" +
                             f.label + "'");
  }
  return out;
}

bool verify_verdict(const AdmissibilityVerdict& v, const TorusPoint& t,
                    const CharacterSetup& setup) {
  if (v.admissible) {
    if (!v.witness_re || !v.witness_im) return false;
    // Exp(witness) = t: same imaginary part, real parts differ by integers.
    if (*v.witness_im != t.im) return false;
    for (int i = 0; i < setup.rank; ++i)
      if (!is_integer((*v.witness_re)[i] - t.re[i])) return false;
    for (const FormVector& f : setup.phi.forms) {
      if (form_value(f, *v.witness_im) != 0) continue;
      if (is_positive_integer(form_value(f, *v.witness_re))) return false;
    }
    return true;
  }
  if (!v.obstruction) return false;
  const auto& ob = *v.obstruction;
  // The recorded rows must match the implicit forms evaluated at the point,
  // and the system must remain unsolvable over the integers.
  if (ob.system.rows != ob.implicit_forms.size()) return false;
  for (int i = 0; i < ob.implicit_forms.size(); ++i) {
    const FormVector& f = ob.implicit_forms[i];
    for (int j = 0; j < setup.rank; ++j)
      if (ob.system(i, j) != f.coeffs[j]) return false;
    const Rat val = form_value(f, t.re);
    if (!is_integer(val) || ob.rhs[i] != -val.get_num()) return false;
  }
  return !solve_integer_linear(ob.system, ob.rhs).has_value();
}

std::optional<TorusPoint> generic_representative(const FormSet& s,
                                                 int component,
                                                 const SubtorusDescription& sub,
                                                 const CharacterSetup& setup) {
  const int n = setup.rank;
  const TorusPoint& rep = sub.component_reps.at(component);

  // Exact emptiness test: a form outside S that is a rational combination of
  // S is constant on the whole component; if its value there is integral, no
  // point of the component has Phi_t = S.
  const QMatrix st = to_rational(s.matrix()).transpose();
  for (int i = 0; i < setup.phi.size(); ++i) {
    const FormVector& f = setup.phi[i];
    if (s.index_of(f.label) >= 0) continue;
    std::vector<Rat> b;
    b.reserve(n);
    for (const Int& c : f.coeffs) b.emplace_back(c);
    if (s.empty()
            ? f.is_zero()
            : rational_solve(st, b).has_value()) {
      if (is_integer(form_value(f, rep.re))) return std::nullopt;
    }
  }

  std::vector<int> target;
  for (int i = 0; i < setup.phi.size(); ++i)
    if (s.index_of(setup.phi[i].label) >= 0) target.push_back(i);

  const auto& tangent = sub.identity_tangent;
  if (tangent.empty()) {
    // Zero-dimensional component: the representative is the only candidate.
    if (phi_at_indices(rep, setup) == target) return rep;
    return std::nullopt;
  }

  static constexpr int kPrimes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  std::mt19937_64 rng(0x5eedULL + 1315423911ULL * component +
                      17ULL * s.size());
  for (int p : kPrimes) {
    for (int attempt = 0; attempt < 48; ++attempt) {
      std::vector<Rat> v = rep.re;
      for (const auto& dir : tangent) {
        const long c = static_cast<long>(rng() % static_cast<unsigned>(p));
        if (c == 0) continue;
        const Rat step = make_rat(c, p);
        for (int i = 0; i < n; ++i) v[i] += step * Rat(dir[i]);
      }
      TorusPoint cand = canonicalize(v, setup);
      if (phi_at_indices(cand, setup) == target) return cand;
    }
  }
  throw std::logic_error("generic_representative: retry budget exhausted");
}

}  // namespace torusadm
