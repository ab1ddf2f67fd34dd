#pragma once

// Brute-force Nijenhuis operator on invariant generalized vectors.
//
// Nij(A,B,C) = 1/12 ( k_c <H,[C2,[A1,B1]]> + k_a <H,[A2,[B1,C1]]> + k_b <H,[B2,[C1,A1]]> ),
// X = X1 + X2* split into its vector and dual parts. A dual symbol at root g enters through
// its underlying compact element weighted by k_g = 1/g(H).

#include <optional>
#include <vector>

#include "flagj/gacs.hpp"
#include "flagj/liealg.hpp"

namespace flagj {

Gaussian nij(const GeneralizedVector& a, const GeneralizedVector& b, const GeneralizedVector& c,
             const StructureConstants& m, const RegularElement& h);

/// The 2|positive roots| eigenvectors, two per root in root order.
std::vector<GeneralizedVector> global_eigenbasis(const Structure& s);

struct Witness {
  std::size_t i = 0;  // positions in the vector list, i < j < k
  std::size_t j = 0;
  std::size_t k = 0;
  Gaussian value;
};

struct BruteForceResult {
  bool integrable = true;
  std::optional<Witness> witness;  // first non-vanishing triple in lexicographic order
  std::size_t evaluated = 0;
};

struct BruteForceOptions {
  int max_rank = 4;
  bool lift_cap = false;
};

/// Evaluates a trilinear form on all distinct unordered triples of the given vectors.
template <typename Form>
BruteForceResult vanishes_on(const std::vector<GeneralizedVector>& vs, Form&& form) {
  BruteForceResult out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        ++out.evaluated;
        Gaussian v = form(vs[i], vs[j], vs[k]);
        if (!v.is_zero()) {
          out.integrable = false;
          out.witness = Witness{i, j, k, std::move(v)};
          return out;
        }
      }
    }
  }
  return out;
}

/// Nij vanishes on the i-eigenspace of s. Throws InputError on an invalid structure or
/// when the rank exceeds the cap.
BruteForceResult is_integrable_bruteforce(const Structure& s, const StructureConstants& m, const RegularElement& h,
                                          const BruteForceOptions& options = {});

/// Throws InputError when the rank is above the cap and the cap is not lifted.
void check_rank_cap(const RootSystem& rs, const BruteForceOptions& options);

}  // namespace flagj
