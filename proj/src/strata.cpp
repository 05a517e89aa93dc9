#include "torusadm/strata.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "torusadm/exact_linalg.hpp"
#include "torusadm/lp.hpp"

namespace torusadm {

namespace {

// Is f an integer combination of the forms in s?
bool in_integer_span(const FormVector& f, const FormSet& s) {
  if (s.empty()) return f.is_zero();
  const IntMatrix at = s.matrix().transpose();
  return solve_integer_linear(at, f.coeffs).has_value();
}

// Does some v satisfy a(v) <= -1 for every a in S (so D(S) is
// full-dimensional and S has no implicit equality)?
bool has_strictly_negative_point(const FormSet& s) {
  QMatrix a_le(s.size(), s.ambient_rank);
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.ambient_rank; ++j)
      a_le(i, j) = Rat(s.forms[i].coeffs[j]);
  return lp_feasible(QMatrix(0, s.ambient_rank), {}, a_le,
                     std::vector<Rat>(s.size(), Rat(-1)), s.ambient_rank)
      .has_value();
}

std::vector<TranslatedSubtorus> scan_range(const CharacterSetup& setup,
                                           const std::vector<int>& cand,
                                           unsigned long long lo,
                                           unsigned long long hi) {
  std::vector<TranslatedSubtorus> found;
  const int k = static_cast<int>(cand.size());
  for (unsigned long long mask = lo; mask < hi; ++mask) {
    std::vector<int> s_idx;
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1ull) s_idx.push_back(cand[b]);
    if (s_idx.empty()) continue;
    const FormSet s = setup.phi.subset(s_idx);

    bool closed = true;
    for (int i = 0; i < setup.phi.size() && closed; ++i) {
      if (std::find(s_idx.begin(), s_idx.end(), i) != s_idx.end()) continue;
      if (in_integer_span(setup.phi[i], s)) closed = false;
    }
    if (!closed) continue;
    if (rational_rank(to_rational(s.matrix())) == s.size()) continue;
    if (has_strictly_negative_point(s)) continue;

    const SubtorusDescription sub = subtorus(s, setup);
    for (int c = 0; c < sub.component_count(); ++c) {
      const auto& combo = sub.rep_combos[c];
      const bool identity = std::all_of(combo.begin(), combo.end(),
                                        [](const Int& x) { return x == 0; });
      if (identity) continue;
      auto rep = generic_representative(s, c, sub, setup);
      if (!rep) continue;
      if (is_admissible(*rep, setup).admissible) continue;
      found.push_back(TranslatedSubtorus{s, sub.dimension,
                                         sub.component_reps[c], combo,
                                         sub.identity_tangent});
    }
  }
  return found;
}

bool contained_in(const TranslatedSubtorus& a, const TranslatedSubtorus& b) {
  if (a.dimension > b.dimension) return false;
  // Tangent containment over Q plus coset membership of the representative.
  for (const auto& dir : a.tangent) {
    std::vector<Rat> d = to_rational(dir);
    for (const FormVector& f : b.S.forms)
      if (form_value(f, d) != 0) return false;
  }
  return in_translated_subtorus(a.representative, b.representative, b.S);
}

}  // namespace

NonAdmResult enumerate_nonadm(const CharacterSetup& setup,
                              const EnumerateOptions& options) {
  std::vector<int> cand;
  if (options.restrict_forms) {
    for (const FormVector& f : options.restrict_forms->forms) {
      const int idx = setup.phi.index_of(f.label);
      if (idx < 0)
        throw std::invalid_argument("enumerate_nonadm: unknown form '" +
                                    f.label + "'");
      cand.push_back(idx);
    }
    std::sort(cand.begin(), cand.end());
  } else {
    for (int i = 0; i < setup.phi.size(); ++i) {
      if (options.essential_only && setup.is_coordinate_form(i)) continue;
      cand.push_back(i);
    }
  }

  const int k = static_cast<int>(cand.size());
  if (k >= 63 || (1ull << k) > options.budget)
    throw BudgetExceeded(
        "enumeration over " + std::to_string(k) + " candidate forms needs 2^" +
        std::to_string(k) + " subsets, over the budget of " +
        std::to_string(options.budget));
  const unsigned long long total = 1ull << k;

  NonAdmResult result;
  result.subsets_examined = total;
  std::vector<TranslatedSubtorus> found;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || total < 256) {
    found = scan_range(setup, cand, 0, total);
  } else {
    // Fixed chunking keeps the merged order independent of scheduling.
    std::vector<std::vector<TranslatedSubtorus>> parts(jobs);
    std::vector<std::thread> workers;
    const unsigned long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const unsigned long long lo = chunk * w;
      const unsigned long long hi = std::min(total, lo + chunk);
      workers.emplace_back([&, w, lo, hi] {
        if (lo < hi) parts[w] = scan_range(setup, cand, lo, hi);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& p : parts)
      for (auto& x : p) found.push_back(std::move(x));
  }

  // Sort, then keep only subtori not contained in an earlier-kept one.
  std::stable_sort(found.begin(), found.end(),
                   [](const TranslatedSubtorus& x, const TranslatedSubtorus& y) {
                     if (x.dimension != y.dimension)
                       return x.dimension > y.dimension;
                     const auto lx = x.S.labels();
                     const auto ly = y.S.labels();
                     if (lx != ly) return lx < ly;
                     return x.component < y.component;
                   });
  for (const auto& t : found) {
    bool redundant = false;
    for (const auto& kept : result.subtori)
      if (contained_in(t, kept)) {
        redundant = true;
        break;
      }
    if (!redundant) result.subtori.push_back(t);
  }
  return result;
}

}  // namespace torusadm
