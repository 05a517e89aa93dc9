#include "torusadm/report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "torusadm/admissibility.hpp"
#include "torusadm/aomoto.hpp"
#include "torusadm/cones.hpp"

namespace torusadm {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_doc(const std::string& bytes, const std::string& what) {
  try {
    return nlohmann::json::parse(bytes, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputFormatError("invalid JSON in " + what + ": " + e.what());
  }
}

ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

ordered_json rat_vec_json(const std::vector<Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

ordered_json int_mat_json(const std::vector<std::vector<Int>>& rows) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row = ordered_json::array();
    for (const auto& x : r) row.push_back(int_json(x));
    a.push_back(row);
  }
  return a;
}

ordered_json int_mat_json(const IntMatrix& m) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(int_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

bool any_nonzero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return true;
  return false;
}

std::vector<std::string> line_labels(const ArrangementSetup& as,
                                     const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(as.arrangement.lines[i].label);
  return out;
}

ordered_json str_vec_json(const std::vector<std::string>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

ordered_json point_json(const TorusPoint& t, const ArrangementSetup& as) {
  const int n = as.arrangement.size();
  ordered_json p;
  p["exponents"] = rat_vec_json(per_line_exponents_mod1(t.re, n));
  if (any_nonzero(t.im))
    p["imag"] = rat_vec_json(per_line_exponents(t.im, n));
  return p;
}

std::string point_str(const TorusPoint& t, const ArrangementSetup& as) {
  const int n = as.arrangement.size();
  auto re = per_line_exponents_mod1(t.re, n);
  auto im = per_line_exponents(t.im, n);
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += coordinate_str(re[i], im[i]);
  }
  return s + ")";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

std::vector<int> parse_form_labels(const std::string& csv,
                                   const FormSet& phi) {
  std::vector<int> idx;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) continue;
    int i = phi.index_of(item);
    if (i < 0) throw SemanticError("unknown form label: " + item);
    idx.push_back(i);
  }
  if (idx.empty()) throw InputFormatError("--forms gave no labels");
  return idx;
}

ordered_json subtorus_json(const FormSet& s, const ArrangementSetup& as) {
  auto sub = subtorus(s, as.setup);
  const int n = as.arrangement.size();
  ordered_json j;
  j["forms"] = str_vec_json(s.labels());
  j["dimension"] = sub.dimension;
  ordered_json cg = ordered_json::array();
  for (const auto& d : sub.component_group) cg.push_back(int_json(d));
  j["component_group"] = cg;
  j["component_count"] = int_json(sub.component_count());
  j["identity_tangent"] = int_mat_json(sub.identity_tangent);
  ordered_json comps = ordered_json::array();
  for (size_t c = 0; c < sub.component_reps.size(); ++c) {
    ordered_json cj;
    ordered_json combo = ordered_json::array();
    for (const auto& k : sub.rep_combos[c]) combo.push_back(int_json(k));
    cj["combo"] = combo;
    cj["representative"] =
        rat_vec_json(per_line_exponents_mod1(sub.component_reps[c].re, n));
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

std::string subtorus_str(const FormSet& s, const ArrangementSetup& as) {
  auto sub = subtorus(s, as.setup);
  std::ostringstream out;
  out << "T(S) for S = {" << join(s.labels(), ", ") << "}\n";
  out << "dimension " << sub.dimension << ", ";
  if (sub.component_group.empty())
    out << "connected";
  else {
    out << "component group ";
    for (size_t i = 0; i < sub.component_group.size(); ++i) {
      if (i) out << " x ";
      out << "Z/" << sub.component_group[i].get_str();
    }
    out << " (" << sub.component_count() << " components)";
  }
  out << "\n";
  for (size_t c = 0; c < sub.component_reps.size(); ++c)
    out << "  [" << c << "] rep " << point_str(sub.component_reps[c], as)
        << "\n";
  return out.str();
}

ordered_json cohomology_json(const CohomologyReport& rep) {
  ordered_json j;
  j["b0"] = rep.b0;
  j["b1"] = rep.b1;
  j["b2"] = rep.b2;
  j["euler"] = rep.euler;
  ordered_json wr = ordered_json::array(), wi = ordered_json::array();
  bool has_im = false;
  for (const auto& w : rep.weights) {
    wr.push_back(rat_str(w.re));
    wi.push_back(rat_str(w.im));
    has_im |= w.im != 0;
  }
  j["weights"] = wr;
  if (has_im) j["weights_imag"] = wi;
  return j;
}

ordered_json check_json(const TorusPoint& t, const ArrangementSetup& as,
                        bool betti) {
  auto verdict = is_admissible(t, as.setup);
  if (!verify_verdict(verdict, t, as.setup))
    throw std::logic_error("certificate failed re-verification");

  const int n = as.arrangement.size();
  ordered_json j;
  j["point"] = point_json(t, as);
  j["admissible"] = verdict.admissible;
  j["phi_t"] = str_vec_json(verdict.phi_t.labels());
  if (verdict.admissible) {
    ordered_json w;
    w["per_line"] = rat_vec_json(per_line_exponents(*verdict.witness_re, n));
    if (any_nonzero(*verdict.witness_im))
      w["per_line_imag"] =
          rat_vec_json(per_line_exponents(*verdict.witness_im, n));
    w["lattice"] = rat_vec_json(*verdict.witness_re);
    j["witness"] = w;
  } else {
    const auto& ob = *verdict.obstruction;
    ordered_json o;
    o["forms"] = str_vec_json(ob.implicit_forms.labels());
    o["system"] = int_mat_json(ob.system);
    ordered_json rhs = ordered_json::array();
    for (const auto& r : ob.rhs) rhs.push_back(int_json(r));
    o["rhs"] = rhs;
    j["obstruction"] = o;
  }
  j["verified"] = true;
  if (betti) {
    if (verdict.admissible)
      j["cohomology"] = cohomology_json(cohomology_report(t, as));
    else {
      j["cohomology"] = nullptr;
      j["note"] = "twisted Betti numbers are only computed for admissible "
                  "points";
    }
  }
  return j;
}

std::string check_str(const ordered_json& j, const ArrangementSetup& as,
                      const TorusPoint& t) {
  std::ostringstream out;
  out << "point " << point_str(t, as) << "\n";
  out << "admissible: " << (j["admissible"].get<bool>() ? "yes" : "no")
      << "\n";
  std::vector<std::string> labels;
  for (const auto& l : j["phi_t"]) labels.push_back(l.get<std::string>());
  out << "Phi_t (" << labels.size() << "): {" << join(labels, ", ") << "}\n";
  if (j.contains("witness")) {
    std::vector<std::string> w;
    for (const auto& x : j["witness"]["per_line"])
      w.push_back(x.get<std::string>());
    out << "witness exponents: (" << join(w, ", ") << ")";
    if (j["witness"].contains("per_line_imag")) {
      std::vector<std::string> wi;
      for (const auto& x : j["witness"]["per_line_imag"])
        wi.push_back(x.get<std::string>());
      out << " + i*(" << join(wi, ", ") << ")";
    }
    out << "\n";
  }
  if (j.contains("obstruction")) {
    std::vector<std::string> f;
    for (const auto& x : j["obstruction"]["forms"])
      f.push_back(x.get<std::string>());
    out << "obstruction: no integral shift fixes {" << join(f, ", ") << "}\n";
  }
  if (j.contains("cohomology") && !j["cohomology"].is_null()) {
    const auto& c = j["cohomology"];
    out << "twisted Betti numbers: b0=" << c["b0"] << " b1=" << c["b1"]
        << " b2=" << c["b2"] << "\n";
  }
  return out.str();
}

std::vector<Rat> read_rat_array(const nlohmann::json& arr,
                                const std::string& what) {
  if (!arr.is_array()) throw InputFormatError(what + " must be an array");
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
      throw InputFormatError(what + " entries must be integers or \"p/q\"");
    }
  }
  return out;
}

unsigned long long resolve_budget(const CliOptions& opts) {
  if (opts.budget) return *opts.budget;
  if (const char* env = std::getenv("STRATUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || end == env)
      throw InputFormatError(std::string("bad STRATUM_BUDGET: ") + env);
    return v;
  }
  return EnumerateOptions{}.budget;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

std::string coordinate_str(const Rat& re, const Rat& im) {
  if (im != 0) {
    std::string s = "exp(2*pi*i*(" + rat_str(re);
    s += im > 0 ? "+" : "-";
    Rat a = abs(im);
    s += rat_str(a) + "i))";
    return s;
  }
  Rat r = mod1(re);
  if (r == 0) return "1";
  Int k = num(r), m = den(r);
  if (m == 2) return "-1";
  std::string s = "zeta_" + m.get_str();
  if (k != 1) s += "^" + k.get_str();
  return s;
}

nlohmann::ordered_json ReportDocument::to_json() const {
  ordered_json j;
  j["tool"] = tool;
  j["version"] = version;
  j["verb"] = verb;
  j["input_digest"] = input_digest;
  j["payload"] = payload;
  j["timing_ms"] = timing_ms;
  return j;
}

CommandResult execute(const CliOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();

  if (opts.arrangement_path.empty())
    throw InputFormatError("an arrangement file is required");
  std::string arr_bytes = slurp(opts.arrangement_path);
  std::string digest_input = arr_bytes;
  auto arr = parse_arrangement(parse_doc(arr_bytes, opts.arrangement_path));
  auto as = build_setup(arr);
  const int n = as.arrangement.size();

  auto load_point = [&]() {
    if (opts.point_path.empty())
      throw InputFormatError("this verb needs a point file");
    std::string bytes = slurp(opts.point_path);
    digest_input += "\n";
    digest_input += bytes;
    return parse_point(parse_doc(bytes, opts.point_path), as);
  };

  CommandResult result;
  result.doc.verb = opts.verb;
  ordered_json payload;
  payload["arrangement"] = as.arrangement.name;
  payload["line_count"] = n;
  std::ostringstream human;
  human << "arrangement " << as.arrangement.name << " (" << n << " lines)\n";

  if (opts.verb == "phi") {
    auto t = load_point();
    auto idx = phi_at_indices(t, as.setup);
    payload["point"] = point_json(t, as);
    ordered_json forms = ordered_json::array();
    for (int i : idx) {
      ordered_json f;
      f["label"] = as.setup.phi[i].label;
      f["lines"] = str_vec_json(line_labels(as, as.form_lines[i]));
      f["value"] = rat_str(form_value(as.setup.phi[i], t.re));
      forms.push_back(f);
    }
    payload["phi_t"] = forms;
    payload["count"] = static_cast<int>(idx.size());
    human << "point " << point_str(t, as) << "\n";
    human << "Phi_t has " << idx.size() << " of " << as.setup.phi.size()
          << " forms\n";
    for (int i : idx)
      human << "  " << as.setup.phi[i].label << "  lines {"
            << join(line_labels(as, as.form_lines[i]), ",") << "}  value "
            << rat_str(form_value(as.setup.phi[i], t.re)) << "\n";
  } else if (opts.verb == "check") {
    auto t = load_point();
    auto cj = check_json(t, as, opts.betti);
    for (auto& [k, v] : cj.items()) payload[k] = v;
    human << check_str(cj, as, t);
  } else if (opts.verb == "strata") {
    EnumerateOptions eo;
    eo.essential_only = opts.essential;
    eo.budget = resolve_budget(opts);
    eo.jobs = opts.jobs;
    if (!opts.forms.empty())
      eo.restrict_forms =
          as.setup.phi.subset(parse_form_labels(opts.forms, as.setup.phi));
    auto res = enumerate_nonadm(as.setup, eo);
    payload["essential"] = eo.essential_only;
    payload["budget"] = eo.budget;
    payload["subsets_examined"] = res.subsets_examined;
    ordered_json list = ordered_json::array();
    for (const auto& st : res.subtori) {
      ordered_json sj;
      sj["forms"] = str_vec_json(st.S.labels());
      sj["dimension"] = st.dimension;
      sj["representative"] =
          rat_vec_json(per_line_exponents_mod1(st.representative.re, n));
      ordered_json combo = ordered_json::array();
      for (const auto& k : st.component) combo.push_back(int_json(k));
      sj["component"] = combo;
      sj["tangent"] = int_mat_json(st.tangent);
      list.push_back(sj);
    }
    payload["strata"] = list;
    payload["count"] = static_cast<int>(res.subtori.size());
    human << "non-admissible locus: " << res.subtori.size()
          << (res.subtori.size() == 1 ? " stratum" : " strata") << " (examined "
          << res.subsets_examined << " subsets)\n";
    int k = 1;
    for (const auto& st : res.subtori) {
      human << "  [" << k++ << "] dim " << st.dimension << "  forms {"
            << join(st.S.labels(), ",") << "}  rep "
            << point_str(st.representative, as) << "\n";
    }
  } else if (opts.verb == "components") {
    FormSet s = as.setup.phi;
    if (!opts.forms.empty())
      s = as.setup.phi.subset(parse_form_labels(opts.forms, as.setup.phi));
    payload["subtorus"] = subtorus_json(s, as);
    human << subtorus_str(s, as);
  } else if (opts.verb == "resonance") {
    if (opts.class_path.empty() && opts.point_path.empty())
      throw InputFormatError("resonance needs a class file");
    const std::string path =
        opts.class_path.empty() ? opts.point_path : opts.class_path;
    std::string bytes = slurp(path);
    digest_input += "\n";
    digest_input += bytes;
    auto doc = parse_doc(bytes, path);
    if (!doc.is_object() || !doc.contains("weights"))
      throw InputFormatError("class document needs a \"weights\" array");
    auto w_re = read_rat_array(doc["weights"], "\"weights\"");
    std::vector<Rat> w_im(w_re.size(), Rat(0));
    if (doc.contains("imag")) {
      w_im = read_rat_array(doc["imag"], "\"imag\"");
      if (w_im.size() != w_re.size())
        throw InputFormatError("\"imag\" length differs from \"weights\"");
    }
    if (static_cast<int>(w_re.size()) != n)
      throw InputFormatError("expected one weight per line");
    AomotoClass alpha;
    for (size_t i = 0; i < w_re.size(); ++i)
      alpha.weights.emplace_back(w_re[i], w_im[i]);
    auto os = os_structure(as);
    int rank = 0;
    int h1 = aomoto_h1(alpha, os, &rank);
    payload["weights"] = rat_vec_json(w_re);
    if (any_nonzero(w_im)) payload["weights_imag"] = rat_vec_json(w_im);
    payload["b1"] = os.b1;
    payload["b2"] = os.b2;
    payload["rank"] = rank;
    payload["h1"] = h1;
    human << "b1=" << os.b1 << " b2=" << os.b2 << "; multiplication rank "
          << rank << " -> h1 = " << h1 << "\n";
  } else if (opts.verb == "report") {
    auto t = load_point();
    ordered_json lines = ordered_json::array();
    for (const auto& l : as.arrangement.lines) {
      ordered_json lj;
      lj["label"] = l.label;
      ordered_json c = ordered_json::array();
      for (const auto& x : l.coeffs) c.push_back(int_json(x));
      lj["coeffs"] = c;
      lines.push_back(lj);
    }
    payload["lines"] = lines;
    ordered_json pts = ordered_json::array();
    for (const auto& p : as.points) {
      ordered_json pj;
      pj["lines"] = str_vec_json(line_labels(as, p.line_indices));
      pj["multiplicity"] = p.multiplicity;
      pts.push_back(pj);
    }
    payload["intersection_points"] = pts;
    ordered_json forms = ordered_json::array();
    for (int i = 0; i < as.setup.phi.size(); ++i) {
      ordered_json f;
      f["label"] = as.setup.phi[i].label;
      f["lines"] = str_vec_json(line_labels(as, as.form_lines[i]));
      forms.push_back(f);
    }
    payload["phi"] = forms;
    auto cj = check_json(t, as, /*betti=*/true);
    payload["check"] = cj;
    auto idx = phi_at_indices(t, as.setup);
    payload["subtorus_of_phi_t"] = subtorus_json(as.setup.phi.subset(idx), as);
    human << check_str(cj, as, t);
    human << subtorus_str(as.setup.phi.subset(idx), as);
  } else {
    throw InputFormatError("unknown verb: " + opts.verb);
  }

  result.doc.input_digest = digest_hex(fnv1a64(digest_input));
  result.doc.payload = payload;
  result.human = human.str();
  result.doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
  return result;
}

int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    auto result = execute(opts);
    if (opts.json)
      out << result.doc.to_json().dump(2) << "\n";
    else
      out << result.human;
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const InputFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace torusadm
