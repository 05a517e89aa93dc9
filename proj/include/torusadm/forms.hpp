#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torusadm/matrix.hpp"

namespace torusadm {

// An integral linear form on the exponent lattice, in the coordinates of the
// chosen lattice basis. Forms keep their printed coefficients as built
// (content is not divided out), so relation certificates stay label-faithful.
struct FormVector {
  std::string label;
  std::vector<Int> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
};

struct FormSet {
  int ambient_rank = 0;
  std::vector<FormVector> forms;

  int size() const { return static_cast<int>(forms.size()); }
  bool empty() const { return forms.empty(); }
  const FormVector& operator[](int i) const { return forms[i]; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.label);
    return out;
  }

  // Stacked coefficient matrix, one row per form.
  IntMatrix matrix() const {
    IntMatrix m(size(), ambient_rank);
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < ambient_rank; ++j) m(i, j) = forms[i].coeffs[j];
    return m;
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (forms[i].label == label) return i;
    return -1;
  }

  FormSet subset(const std::vector<int>& indices) const {
    FormSet s;
    s.ambient_rank = ambient_rank;
    for (int i : indices) s.forms.push_back(forms[i]);
    return s;
  }
};

// Validates label uniqueness, coefficient lengths and nonzero forms.
inline FormSet make_form_set(int ambient_rank, std::vector<FormVector> forms) {
  FormSet s;
  s.ambient_rank = ambient_rank;
  s.forms = std::move(forms);
  for (int i = 0; i < s.size(); ++i) {
    const auto& f = s.forms[i];
    if (static_cast<int>(f.coeffs.size()) != ambient_rank)
      throw std::invalid_argument("form '" + f.label + "': wrong length");
    if (f.is_zero())
      throw std::invalid_argument("form '" + f.label + "': zero form");
    for (int j = 0; j < i; ++j)
      if (s.forms[j].label == f.label)
        throw std::invalid_argument("duplicate form label '" + f.label + "'");
  }
  return s;
}

// Evaluate a form on a rational vector.
inline Rat form_value(const FormVector& f, const std::vector<Rat>& v) {
  Rat out(0);
  for (size_t i = 0; i < f.coeffs.size(); ++i) out += Rat(f.coeffs[i]) * v[i];
  return out;
}

inline Rat form_value(const std::vector<Int>& coeffs,
                      const std::vector<Rat>& v) {
  Rat out(0);
  for (size_t i = 0; i < coeffs.size(); ++i) out += Rat(coeffs[i]) * v[i];
  return out;
}

}  // namespace torusadm
