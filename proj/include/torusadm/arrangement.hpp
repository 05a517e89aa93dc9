#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusadm/torus.hpp"

namespace torusadm {

// Malformed input documents (bad schema, duplicate lines, zero triples).
struct InputFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input with unusable content (e.g. exponents not on the torus).
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rational line in the projective plane, stored by a primitive integer
// coefficient triple with the first nonzero coefficient positive.
struct ProjectiveLine {
  std::string label;
  std::array<Int, 3> coeffs;
};

struct Arrangement {
  std::string name;
  std::vector<ProjectiveLine> lines;

  int size() const { return static_cast<int>(lines.size()); }
};

// A pairwise intersection point with all lines through it. Double points are
// reported too; only multiplicity >= 3 contributes a form to Phi.
struct IncidencePoint {
  std::array<Int, 3> coords;       // primitive, first nonzero positive
  std::vector<int> line_indices;   // sorted
  int multiplicity = 0;
};

// Everything derived from one arrangement: incidence, the character setup
// (rank = #lines - 1, lattice basis b_j = e_j - e_{j+1}) and the per-form
// incident line indices used for rendering and essential filtering.
struct ArrangementSetup {
  Arrangement arrangement;
  std::vector<IncidencePoint> points;
  CharacterSetup setup;
  std::vector<std::vector<int>> form_lines;
};

// Schema: { "name": string, "lines": [ { "label": string,
// "coeffs": [int, int, int] }, ... ] }. Unknown keys are ignored.
Arrangement parse_arrangement(const nlohmann::json& doc);
Arrangement parse_arrangement_file(const std::string& path);

// Groups all pairwise intersections into points; the result satisfies the
// pair-count identity sum_p C(m_p, 2) = C(#lines, 2).
std::vector<IncidencePoint> incidence(const Arrangement& a);

ArrangementSetup build_setup(const Arrangement& a);

// Converts per-line monodromy exponents (length #lines, in line order) to
// lattice-basis coordinates of a canonical exponent vector. The per-line
// exponents of a torus point must sum to an integer (real part) and to zero
// (imaginary part); otherwise the point is not on the character torus.
TorusPoint torus_point_from_monodromy(const std::vector<Rat>& q_re,
                                      const std::vector<Rat>& q_im,
                                      const ArrangementSetup& as);

// Point document schema: { "exponents": ["p/q", ...] } with one entry per
// line in label order; optional "imag" array of the same length.
TorusPoint parse_point(const nlohmann::json& doc, const ArrangementSetup& as);
TorusPoint parse_point_file(const std::string& path,
                            const ArrangementSetup& as);

// Inverse of the basis change: per-line exponents of a lattice-coordinate
// vector (their sum is 0 by construction).
std::vector<Rat> per_line_exponents(const std::vector<Rat>& lattice_coords,
                                    int n_lines);

// Per-line exponents reduced mod 1 (for torsion points and reports).
std::vector<Rat> per_line_exponents_mod1(const std::vector<Rat>& lattice_coords,
                                         int n_lines);

}  // namespace torusadm
