#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusadm/forms.hpp"
#include "torusadm/lp.hpp"

namespace torusadm {

// Nonnegative rational coefficients by form label; Sum c_a * a equals the
// certified target exactly (re-verifiable with verify_certificate).
struct ConeCertificate {
  std::vector<std::pair<std::string, Rat>> coefficients;
};

// Membership of target in Cone(S) = { Sum c_a * a : c_a >= 0 }, decided by
// exact feasibility; returns the Farkas-style certificate on success.
std::optional<ConeCertificate> cone_contains(const FormVector& target,
                                             const FormSet& s,
                                             LpEngine engine = LpEngine::Auto);
std::optional<ConeCertificate> cone_contains(const std::vector<Int>& target,
                                             const FormSet& s,
                                             LpEngine engine = LpEngine::Auto);

// The implicit equalities of D(S) = { v : a(v) <= 0 for all a in S }:
// a in S= iff -a in Cone(S) iff a vanishes identically on D(S).
FormSet implicit_equalities(const FormSet& s);

// Strictly positive rational relation Sum c_a * a = 0 with all c_a > 0, when
// one exists (encoded as c_a >= 1, then scaled to a primitive integer vector
// when possible). Checks the all-ones relation first.
std::optional<ConeCertificate> positive_relation(const FormSet& s);

// Saturated integer basis of D0(S) = { v : a(v) = 0 for all a in S }.
std::vector<std::vector<Int>> d0_subspace(const FormSet& s);

// Exact check that Sum c_a * a = target (used by tests and report output).
bool verify_certificate(const ConeCertificate& cert, const FormSet& s,
                        const std::vector<Rat>& target);

}  // namespace torusadm
