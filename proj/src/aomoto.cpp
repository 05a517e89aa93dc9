#include "torusadm/aomoto.hpp"

#include <stdexcept>

#include "torusadm/admissibility.hpp"

namespace torusadm {

GaussQ GaussQ::inv() const {
  Rat n = re * re + im * im;
  if (n == 0) throw std::domain_error("division by zero");
  return {re / n, -im / n};
}

std::vector<std::pair<int, int>> OSStructure::product(int i, int j) const {
  if (i >= j) throw std::invalid_argument("product wants i < j");
  auto it = pair_point.find({i, j});
  if (it == pair_point.end()) return {};  // lines meet on the removed line
  const int k = it->second;
  const int i0 = affine_points[k][0];
  if (i == i0) return {{basis_index.at({k, j}), 1}};
  return {{basis_index.at({k, j}), 1}, {basis_index.at({k, i}), -1}};
}

OSStructure os_structure(const ArrangementSetup& as) {
  const int n = as.arrangement.size();
  const int last = n - 1;
  OSStructure os;
  os.n_lines = n;
  os.b1 = n - 1;
  for (const auto& p : as.points) {
    if (std::find(p.line_indices.begin(), p.line_indices.end(), last) !=
        p.line_indices.end())
      continue;
    const int k = static_cast<int>(os.affine_points.size());
    os.affine_points.push_back(p.line_indices);
    os.b2 += p.multiplicity - 1;
    for (size_t u = 0; u < p.line_indices.size(); ++u)
      for (size_t v = u + 1; v < p.line_indices.size(); ++v)
        os.pair_point[{p.line_indices[u], p.line_indices[v]}] = k;
    for (size_t u = 1; u < p.line_indices.size(); ++u) {
      os.basis_index[{k, p.line_indices[u]}] =
          static_cast<int>(os.deg2_basis.size());
      os.deg2_basis.emplace_back(k, p.line_indices[u]);
    }
  }
  return os;
}

namespace {

int gauss_rank(std::vector<std::vector<GaussQ>>& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    GaussQ inv = m[rank][c].inv();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      GaussQ f = m[r][c] * inv;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = m[r][cc] - f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int aomoto_h1(const AomotoClass& alpha, const OSStructure& os, int* rank_out) {
  if (static_cast<int>(alpha.weights.size()) != os.n_lines)
    throw std::invalid_argument("class needs one weight per line");
  GaussQ sum;
  for (const auto& w : alpha.weights) sum = sum + w;
  if (!sum.is_zero())
    throw SemanticError("class weights must sum to zero, got " +
                        rat_str(sum.re) + (sum.im == 0 ? "" : " + i*" +
                        rat_str(sum.im)));

  // Multiplication by the class, OS^1 -> OS^2, on the affine generators.
  std::vector<std::vector<GaussQ>> m(
      os.b2, std::vector<GaussQ>(os.b1, GaussQ()));
  for (int j = 0; j < os.b1; ++j)
    for (int i = 0; i < os.b1; ++i) {
      if (i == j || alpha.weights[i].is_zero()) continue;
      auto terms = i < j ? os.product(i, j) : os.product(j, i);
      const int sign = i < j ? 1 : -1;
      for (const auto& [row, c] : terms)
        m[row][j] = m[row][j] + alpha.weights[i] * GaussQ(Rat(sign * c));
    }
  // The class vanishes in the deconed model iff all affine weights do (the
  // removed line's weight is minus their sum).
  bool nonzero = false;
  for (int i = 0; i < os.b1; ++i) nonzero |= !alpha.weights[i].is_zero();

  const int rank = gauss_rank(m);
  if (rank_out) *rank_out = rank;
  return os.b1 - rank - (nonzero ? 1 : 0);
}

CohomologyReport cohomology_report(const TorusPoint& t,
                                   const ArrangementSetup& as) {
  auto verdict = is_admissible(t, as.setup);
  if (!verdict.admissible)
    throw SemanticError(
        "point is not admissible; twisted Betti numbers are only computed "
        "from an admissibility witness");

  const int n = as.arrangement.size();
  auto re = per_line_exponents(*verdict.witness_re, n);
  auto im = per_line_exponents(*verdict.witness_im, n);

  CohomologyReport rep;
  for (int i = 0; i < n; ++i) rep.weights.emplace_back(re[i], im[i]);

  auto os = os_structure(as);
  const int chi = 1 - os.b1 + os.b2;
  rep.euler = chi;
  rep.b0 = t.is_unit() ? 1 : 0;
  AomotoClass alpha{rep.weights};
  rep.b1 = aomoto_h1(alpha, os);
  rep.b2 = chi - rep.b0 + rep.b1;
  return rep;
}

}  // namespace torusadm
