#include "torusadm/cones.hpp"

#include <algorithm>
#include <stdexcept>

#include "torusadm/exact_linalg.hpp"

namespace torusadm {

namespace {

// Columns are the forms of S; feasibility of { c >= 0 : A c = target }.
QMatrix forms_as_columns(const FormSet& s) {
  QMatrix a(s.ambient_rank, s.size());
  for (int j = 0; j < s.size(); ++j)
    for (int i = 0; i < s.ambient_rank; ++i)
      a(i, j) = Rat(s.forms[j].coeffs[i]);
  return a;
}

ConeCertificate attach_labels(const FormSet& s, const std::vector<Rat>& c) {
  ConeCertificate cert;
  cert.coefficients.reserve(s.size());
  for (int i = 0; i < s.size(); ++i)
    cert.coefficients.emplace_back(s.forms[i].label, c[i]);
  return cert;
}

}  // namespace

std::optional<ConeCertificate> cone_contains(const FormVector& target,
                                             const FormSet& s,
                                             LpEngine engine) {
  if (static_cast<int>(target.coeffs.size()) != s.ambient_rank)
    throw std::invalid_argument("cone_contains: dimension mismatch");
  std::vector<Rat> b;
  b.reserve(s.ambient_rank);
  for (const Int& x : target.coeffs) b.emplace_back(x);
  if (s.empty()) {
    const bool zero =
        std::all_of(b.begin(), b.end(), [](const Rat& x) { return x == 0; });
    if (!zero) return std::nullopt;
    return ConeCertificate{};
  }
  auto c = nonneg_feasible(forms_as_columns(s), b, engine);
  if (!c) return std::nullopt;
  return attach_labels(s, *c);
}

std::optional<ConeCertificate> cone_contains(const std::vector<Int>& target,
                                             const FormSet& s,
                                             LpEngine engine) {
  return cone_contains(FormVector{"target", target}, s, engine);
}

FormSet implicit_equalities(const FormSet& s) {
  FormSet out;
  out.ambient_rank = s.ambient_rank;
  for (const FormVector& f : s.forms) {
    FormVector neg{f.label, f.coeffs};
    for (Int& c : neg.coeffs) c = -c;
    if (cone_contains(neg, s)) out.forms.push_back(f);
  }
  return out;
}

std::optional<ConeCertificate> positive_relation(const FormSet& s) {
  if (s.empty()) return std::nullopt;
  const int r = s.size();
  const int n = s.ambient_rank;
  // All-ones shortcut: when the forms sum to zero the relation matches the
  // printed one directly.
  {
    bool zero = true;
    for (int i = 0; i < n && zero; ++i) {
      Int acc(0);
      for (int j = 0; j < r; ++j) acc += s.forms[j].coeffs[i];
      zero = (acc == 0);
    }
    if (zero)
      return attach_labels(s, std::vector<Rat>(r, Rat(1)));
  }
  // Substitute c = 1 + d with d >= 0: A d = -A 1.
  QMatrix a(n, r);
  std::vector<Rat> b(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) {
      a(i, j) = Rat(s.forms[j].coeffs[i]);
      b[i] -= a(i, j);
    }
  auto d = nonneg_feasible(a, b);
  if (!d) return std::nullopt;
  std::vector<Rat> c(r);
  for (int j = 0; j < r; ++j) c[j] = Rat(1) + (*d)[j];
  // Scale to the primitive integer vector; when the relation space is
  // one-dimensional this is the unique primitive positive relation.
  Int den(1);
  for (const Rat& v : c) den = lcm(den, v.get_den());
  std::vector<Int> ints(r);
  Int g(0);
  for (int j = 0; j < r; ++j) {
    ints[j] = Int(c[j].get_num() * (den / c[j].get_den()));
    g = gcd(g, ints[j]);
  }
  if (g > 1)
    for (Int& v : ints) v /= g;
  for (int j = 0; j < r; ++j) c[j] = Rat(ints[j]);
  return attach_labels(s, c);
}

std::vector<std::vector<Int>> d0_subspace(const FormSet& s) {
  if (s.empty()) {
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < s.ambient_rank; ++j) {
      std::vector<Int> e(s.ambient_rank, Int(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return integer_kernel(s.matrix());
}

bool verify_certificate(const ConeCertificate& cert, const FormSet& s,
                        const std::vector<Rat>& target) {
  std::vector<Rat> acc(s.ambient_rank, Rat(0));
  for (const auto& [label, c] : cert.coefficients) {
    if (c < 0) return false;
    const int idx = s.index_of(label);
    if (idx < 0) return false;
    for (int i = 0; i < s.ambient_rank; ++i)
      acc[i] += c * Rat(s.forms[idx].coeffs[i]);
  }
  return acc == target;
}

}  // namespace torusadm
