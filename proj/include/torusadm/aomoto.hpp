#pragma once

#include <map>
#include <utility>
#include <vector>

#include "torusadm/arrangement.hpp"

namespace torusadm {

// Gaussian rational a + b*i. Division is always exact: the norm a^2 + b^2
// of a nonzero element is a nonzero rational.
struct GaussQ {
  Rat re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(const Rat& r) : re(r), im(0) {}
  GaussQ(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussQ inv() const;
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    return a * b.inv();
  }
};

// A degree-1 class of the arrangement complement, given by one weight per
// line. Weights must sum to zero (the classes live on the projective
// complement).
struct AomotoClass {
  std::vector<GaussQ> weights;
};

// Degree <= 2 part of the cohomology ring of the complement, deconed by the
// last line of the arrangement: the complement is the affine complement of
// the remaining lines, so OS^1 has one generator per affine line and OS^2
// decomposes over the affine intersection points.
struct OSStructure {
  int n_lines = 0;  // projective line count
  int b1 = 0;       // n_lines - 1
  int b2 = 0;       // sum of (multiplicity - 1) over affine points
  std::vector<std::vector<int>> affine_points;  // sorted line-index lists
  // Basis of OS^2: for each affine point, the pairs (lowest line, other).
  // Stored as (affine point index, other line index).
  std::vector<std::pair<int, int>> deg2_basis;

  std::map<std::pair<int, int>, int> pair_point;   // (i, j) i<j -> point idx
  std::map<std::pair<int, int>, int> basis_index;  // deg2_basis lookup

  // e_i e_j for affine i < j as sparse coefficients on deg2_basis; empty when
  // the lines only meet on the removed line.
  std::vector<std::pair<int, int>> product(int i, int j) const;
};

OSStructure os_structure(const ArrangementSetup& as);

// Dimension of the degree-1 cohomology of the complex (OS^*, alpha ^ - ).
// With M the matrix of multiplication OS^1 -> OS^2 this is
// b1 - rank(M) - [alpha != 0]. Optionally reports rank(M).
int aomoto_h1(const AomotoClass& alpha, const OSStructure& os,
              int* rank_out = nullptr);

struct CohomologyReport {
  int b0 = 0, b1 = 0, b2 = 0;
  int euler = 0;                // 1 - b1(complement) + b2(complement)
  std::vector<GaussQ> weights;  // per-line class realizing the point
};

// Betti numbers of the complement with coefficients twisted by the point's
// local system. Requires an admissible point: the twisted cohomology is then
// computed by the class attached to the admissibility witness, and b2 comes
// from the Euler characteristic. Throws SemanticError otherwise.
CohomologyReport cohomology_report(const TorusPoint& t,
                                   const ArrangementSetup& as);

}  // namespace torusadm
