#pragma once

// Integrability by the per-triple decision table, Theta extraction/construction and
// closed-form propagation of non-complex parameters.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagj/gacs.hpp"
#include "flagj/rootsystem.hpp"

namespace flagj {

struct TripleVerdict {
  bool integrable = true;
  /// Case tag: all-complex, complex-sign-clash, noncomplex-sum, noncomplex-sum-sign-clash,
  /// noncomplex-summand, noncomplex-summand-sign-clash, two-noncomplex-one-complex,
  /// system-satisfied, system-violated.
  std::string reason;
  /// For all-noncomplex triples: a_s x_a x_b - a_b x_a x_s - a_a x_b x_s and x_a x_b - x_a x_s - x_b x_s.
  std::optional<std::array<Rational, 2>> residuals;
};

/// Blocks at a, b and a+b. Throws InputError on an invalid block.
TripleVerdict triple_status(const RootJ& ja, const RootJ& jb, const RootJ& jab);

struct TripleFailure {
  Triple triple;
  TripleVerdict verdict;
};

struct IntegrabilityReport {
  bool integrable = true;
  std::vector<TripleFailure> failures;  // canonical triple order
};

IntegrabilityReport is_integrable(const Structure& s, const RootSystem& rs);

/// Theta is taken in the simple system of the positive system selected by the structure; that
/// is the standard one exactly when every complex block is J0 and every x is positive.
struct ThetaData {
  std::vector<SignedRoot> simple_system;  // ordered by positive-root index
  std::vector<SignedRoot> theta;          // non-complex members of simple_system
  std::vector<std::size_t> noncomplex;    // positive-root indices
};

/// Throws InputError when s is not integrable, InternalError if the non-complex set is not
/// the closure of Theta.
ThetaData extract_theta(const Structure& s, const RootSystem& rs);

/// +1 selects g, -1 selects -g. Throws InputError when s is not integrable.
std::vector<int> positive_system(const Structure& s, const RootSystem& rs);

struct Seed {
  Rational a;
  Rational x;
};

/// Seeds keyed by simple-root position.
using SeedMap = std::map<std::size_t, Seed>;

/// Closed forms on the closure of theta:
///   x_g = prod x_i^{n_i} / sum_i n_i x_i^{n_i - 1} prod_{j != i} x_j^{n_j}
///   a_g = sum_i a_i n_i x_i^{n_i - 1} prod_{j != i} x_j^{n_j} / (same denominator)
/// Complex blocks elsewhere with the given signs (one entry per positive root; entries on the
/// closure are ignored), all +1 when omitted.
/// Throws InputError on malformed seeds, ConstructionError on a vanishing denominator (naming the
/// root) or when the signs make some triple obstructed (naming the triple).
Structure construct_from_theta(const RootSystem& rs, const std::vector<std::size_t>& theta, const SeedMap& seeds,
                               const std::optional<std::vector<int>>& signs = std::nullopt);

/// Same output as construct_from_theta, built by height induction
///   x_{a+b} = x_a x_b / (x_a + x_b),  a_{a+b} = (a_b x_a + a_a x_b) / (x_a + x_b)
/// over every decomposition; disagreement between decompositions throws InternalError.
Structure propagate(const RootSystem& rs, const std::vector<std::size_t>& theta, const SeedMap& seeds,
                    const std::optional<std::vector<int>>& signs = std::nullopt);

}  // namespace flagj
