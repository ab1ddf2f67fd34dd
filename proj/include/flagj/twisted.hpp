#pragma once

// Invariant 2-forms, their differentials and Omega-twisted integrability.
//
// A 2-form is stored by its diagonal values w_g = w(X_g, X_-g) in Weyl normalization; a 3-form
// by its values Om(E_a, E_b, E_-(a+b)) on the zero-sum triples of the root system, with
// Om(E_-a, E_-b, E_a+b) equal to the same value.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagj/classify.hpp"
#include "flagj/gacs.hpp"
#include "flagj/liealg.hpp"

namespace flagj {

struct InvariantTwoForm {
  std::vector<Gaussian> diag;  // one per positive root
  static InvariantTwoForm zero(const RootSystem& rs) { return {std::vector<Gaussian>(rs.size())}; }
  friend bool operator==(const InvariantTwoForm&, const InvariantTwoForm&) = default;
};

struct InvariantThreeForm {
  std::vector<Gaussian> vals;  // aligned with RootSystem::triples()
  static InvariantThreeForm zero(const RootSystem& rs) { return {std::vector<Gaussian>(rs.triples().size())}; }
  bool is_zero() const;
  friend bool operator==(const InvariantThreeForm&, const InvariantThreeForm&) = default;
};

/// Om = m_{a,b} (w_a + w_b - w_{a+b}) on every triple.
InvariantThreeForm d_omega(const InvariantTwoForm& w, const StructureConstants& m);

/// Om on compact basis vectors of the triple, symbols listed in (a, b, a+b) order:
/// (A,A,S) -> 2i Om, (A,S,A), (S,A,A), (S,S,S) -> -2i Om, anything else 0.
Gaussian omega_on_AS(const InvariantThreeForm& om, std::size_t triple, std::array<Kind, 3> pattern);

/// Trilinear, alternating extension of Om to compact elements.
Gaussian omega_eval(const InvariantThreeForm& om, const RootSystem& rs, const UElement& x, const UElement& y,
                    const UElement& z);

/// Nij plus Om evaluated on the vector parts.
Gaussian nij_twisted(const GeneralizedVector& a, const GeneralizedVector& b, const GeneralizedVector& c,
                     const InvariantThreeForm& om, const StructureConstants& m, const RegularElement& h);

/// Value that Om must take on an all-non-complex triple:
/// (m_{a,b}/12) ((a_s - i)/x_s - (a_b - i)/x_b - (a_a - i)/x_a).
Gaussian required_omega(const StructureConstants& m, const Triple& t, const NonComplex& ja, const NonComplex& jb,
                        const NonComplex& js);

struct OmegaFailure {
  Triple triple;
  std::string reason;             // untwisted verdict tag, or omega-mismatch
  std::optional<Gaussian> required;
  std::optional<Gaussian> actual;
};

struct OmegaReport {
  bool integrable = true;
  std::vector<OmegaFailure> failures;
};

OmegaReport is_omega_integrable(const Structure& s, const InvariantThreeForm& om, const StructureConstants& m);

struct OmegaSolution {
  InvariantThreeForm om;
  std::optional<InvariantTwoForm> w;  // potential with d_omega(w) == om, when found
};

struct SolveOmegaResult {
  std::optional<OmegaSolution> solution;
  std::string reason;              // set when infeasible
  std::optional<Triple> blocking;  // first obstructed triple that is not all non-complex
};

/// The Om that solve_omega would emit, computed without the feasibility check.
OmegaSolution candidate_omega(const Structure& s, const StructureConstants& m);

/// Om is forced on all-non-complex triples; elsewhere it is the differential of the candidate
/// potential w_g = (i - a_g)/(12 x_g) on non-complex roots, 0 on complex ones.
SolveOmegaResult solve_omega(const Structure& s, const StructureConstants& m);

}  // namespace flagj
