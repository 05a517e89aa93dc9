#include "torusadm/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "torusadm/exact_linalg.hpp"

namespace torusadm {

namespace {

// Primitive representative with the first nonzero entry positive.
std::array<Int, 3> normalize_triple(std::array<Int, 3> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw InputFormatError("line coefficients are all zero");
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

Int coeff_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputFormatError("bad integer literal: " + j.get<std::string>());
    }
  }
  throw InputFormatError("line coefficient must be an integer");
}

std::array<Int, 3> cross(const std::array<Int, 3>& a,
                         const std::array<Int, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

Arrangement parse_arrangement(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputFormatError("arrangement must be an object");
  Arrangement a;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw InputFormatError("\"name\" must be a string");
    a.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("lines") || !doc["lines"].is_array() ||
      doc["lines"].empty())
    throw InputFormatError("\"lines\" must be a non-empty array");

  std::set<std::string> labels;
  std::set<std::array<Int, 3>> seen;
  for (const auto& lj : doc["lines"]) {
    if (!lj.is_object() || !lj.contains("label") || !lj.contains("coeffs"))
      throw InputFormatError("each line needs \"label\" and \"coeffs\"");
    if (!lj["label"].is_string())
      throw InputFormatError("line label must be a string");
    ProjectiveLine line;
    line.label = lj["label"].get<std::string>();
    if (line.label.empty()) throw InputFormatError("empty line label");
    if (!labels.insert(line.label).second)
      throw InputFormatError("duplicate line label: " + line.label);
    const auto& cj = lj["coeffs"];
    if (!cj.is_array() || cj.size() != 3)
      throw InputFormatError("\"coeffs\" must have exactly 3 entries");
    for (int k = 0; k < 3; ++k) line.coeffs[k] = coeff_from_json(cj[k]);
    line.coeffs = normalize_triple(line.coeffs);
    if (!seen.insert(line.coeffs).second)
      throw InputFormatError("duplicate line: " + line.label);
    a.lines.push_back(std::move(line));
  }
  return a;
}

Arrangement parse_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_arrangement(doc);
}

std::vector<IncidencePoint> incidence(const Arrangement& a) {
  const int n = a.size();
  std::map<std::array<Int, 3>, std::set<int>> at;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto p = normalize_triple(cross(a.lines[i].coeffs, a.lines[j].coeffs));
      at[p].insert(i);
      at[p].insert(j);
    }

  std::vector<IncidencePoint> pts;
  Int pair_count = 0;
  for (const auto& [coords, through] : at) {
    IncidencePoint p;
    p.coords = coords;
    p.line_indices.assign(through.begin(), through.end());
    p.multiplicity = static_cast<int>(p.line_indices.size());
    pair_count += Int(p.multiplicity) * (p.multiplicity - 1) / 2;
    pts.push_back(std::move(p));
  }
  if (pair_count != Int(n) * (n - 1) / 2)
    throw std::logic_error("incidence bookkeeping lost a line pair");

  std::sort(pts.begin(), pts.end(),
            [](const IncidencePoint& x, const IncidencePoint& y) {
              return x.line_indices < y.line_indices;
            });
  return pts;
}

ArrangementSetup build_setup(const Arrangement& a) {
  const int n = a.size();
  if (n < 2) throw SemanticError("arrangement needs at least 2 lines");
  const int rank = n - 1;

  bool multi_char = false;
  for (const auto& l : a.lines) multi_char |= l.label.size() > 1;
  auto point_label = [&](const std::vector<int>& idx) {
    std::string s = "a_";
    for (size_t k = 0; k < idx.size(); ++k) {
      if (multi_char && k > 0) s += '_';
      s += a.lines[idx[k]].label;
    }
    return s;
  };

  // Coordinate form of line i in the lattice basis b_j = e_j - e_{j+1}:
  // value on b_j is [i == j] - [i == j+1].
  auto coordinate_form = [&](int i) {
    std::vector<Int> c(rank, 0);
    if (i < rank) c[i] = 1;
    if (i >= 1) c[i - 1] = -1;
    return c;
  };

  ArrangementSetup as;
  as.arrangement = a;
  as.points = incidence(a);

  std::vector<FormVector> forms;
  for (int i = 0; i < n; ++i)
    forms.push_back({"a_" + a.lines[i].label, coordinate_form(i)});
  auto is_zero = [](const std::vector<Int>& c) {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  };
  for (const auto& p : as.points) {
    if (p.multiplicity < 3) continue;
    std::vector<Int> c(rank, 0);
    for (int i : p.line_indices) {
      auto ci = coordinate_form(i);
      for (int j = 0; j < rank; ++j) c[j] += ci[j];
    }
    // A point lying on every line (a full pencil) sums to the zero form,
    // which imposes no condition; skip it.
    if (is_zero(c)) continue;
    forms.push_back({point_label(p.line_indices), std::move(c)});
  }

  as.setup.rank = rank;
  as.setup.phi = make_form_set(rank, forms);
  as.setup.basis_note = "b_j = e_j - e_{j+1} in the rank-(#lines-1) lattice";
  for (int i = 0; i < n; ++i) as.setup.coordinate_form_indices.push_back(i);

  for (int i = 0; i < n; ++i) as.form_lines.push_back({i});
  for (const auto& p : as.points)
    if (p.multiplicity >= 3 && p.multiplicity < n)
      as.form_lines.push_back(p.line_indices);
  return as;
}

TorusPoint torus_point_from_monodromy(const std::vector<Rat>& q_re,
                                      const std::vector<Rat>& q_im,
                                      const ArrangementSetup& as) {
  const int n = as.arrangement.size();
  if (static_cast<int>(q_re.size()) != n ||
      static_cast<int>(q_im.size()) != n)
    throw InputFormatError("expected one exponent per line");

  Rat s_re = 0, s_im = 0;
  for (const auto& q : q_re) s_re += q;
  for (const auto& q : q_im) s_im += q;
  if (!is_integer(s_re))
    throw SemanticError("exponents do not sum to an integer (got " +
                        rat_str(s_re) + "); point is not on the torus");
  if (s_im != 0)
    throw SemanticError("imaginary parts do not sum to zero (got " +
                        rat_str(s_im) + "); point is not on the torus");

  // Shift the first exponent so the sum is exactly zero, then read off the
  // lattice coordinates as partial sums.
  std::vector<Rat> re(as.setup.rank), im(as.setup.rank);
  Rat acc_re = q_re[0] - s_re, acc_im = q_im[0];
  for (int j = 0; j < as.setup.rank; ++j) {
    re[j] = acc_re;
    im[j] = acc_im;
    if (j + 1 < n) {
      acc_re += q_re[j + 1];
      acc_im += q_im[j + 1];
    }
  }
  return canonicalize(re, im, as.setup);
}

TorusPoint parse_point(const nlohmann::json& doc, const ArrangementSetup& as) {
  if (!doc.is_object() || !doc.contains("exponents") ||
      !doc["exponents"].is_array())
    throw InputFormatError("point document needs an \"exponents\" array");
  auto read_vec = [](const nlohmann::json& arr) {
    std::vector<Rat> out;
    for (const auto& e : arr) {
      if (e.is_number_integer()) {
        out.push_back(Rat(e.get<long>()));
      } else if (e.is_string()) {
        auto r = parse_rat(e.get<std::string>());
        if (!r)
          throw InputFormatError("bad rational literal: " +
                                 e.get<std::string>());
        out.push_back(*r);
      } else {
        throw InputFormatError("exponents must be integers or \"p/q\" strings");
      }
    }
    return out;
  };
  std::vector<Rat> q_re = read_vec(doc["exponents"]);
  std::vector<Rat> q_im(q_re.size(), Rat(0));
  if (doc.contains("imag")) {
    if (!doc["imag"].is_array())
      throw InputFormatError("\"imag\" must be an array");
    q_im = read_vec(doc["imag"]);
    if (q_im.size() != q_re.size())
      throw InputFormatError("\"imag\" length differs from \"exponents\"");
  }
  return torus_point_from_monodromy(q_re, q_im, as);
}

TorusPoint parse_point_file(const std::string& path,
                            const ArrangementSetup& as) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_point(doc, as);
}

std::vector<Rat> per_line_exponents(const std::vector<Rat>& lattice_coords,
                                    int n_lines) {
  std::vector<Rat> v(n_lines);
  Rat prev = 0;
  for (int i = 0; i < n_lines; ++i) {
    Rat cur = i < n_lines - 1 ? lattice_coords[i] : Rat(0);
    v[i] = cur - prev;
    prev = cur;
  }
  return v;
}

std::vector<Rat> per_line_exponents_mod1(const std::vector<Rat>& lattice_coords,
                                         int n_lines) {
  auto v = per_line_exponents(lattice_coords, n_lines);
  for (auto& x : v) x = mod1(x);
  return v;
}

}  // namespace torusadm
