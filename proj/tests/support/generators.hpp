#pragma once

// Random inputs for the property suites. FLAGJ_SEED overrides the default seed.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "flagj/classify.hpp"
#include "flagj/errors.hpp"
#include "flagj/liealg.hpp"

namespace flagj::testing {

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240611) {
  if (const char* s = std::getenv("FLAGJ_SEED")) return std::stoull(s);
  return fallback;
}

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(seed_from_env() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  int sign() { return coin() ? 1 : -1; }

  Rational nonzero() {
    int n = 0;
    while (n == 0) n = uniform(-5, 5);
    return Rational(n, uniform(1, 4));
  }
  Rational any() { return Rational(uniform(-5, 5), uniform(1, 4)); }
  Rational positive() { return Rational(uniform(1, 7), uniform(1, 4)); }
  Gaussian gaussian() { return Gaussian(any(), any()); }

  RegularElement regular(std::size_t rank) {
    RegularElement h;
    for (std::size_t i = 0; i < rank; ++i) h.c.push_back(positive());
    return h;
  }

  RootJ block(bool complex) {
    if (complex) return Complex{sign()};
    return noncomplex_from(any(), nonzero());
  }

  /// Mixed structure: all complex, all non-complex, or a per-root coin flip.
  Structure structure(const RootSystem& rs) {
    const int mode = uniform(0, 2);
    Structure s;
    for (std::size_t r = 0; r < rs.size(); ++r) s.blocks.push_back(block(mode == 0 || (mode == 2 && coin())));
    return s;
  }

  std::vector<std::size_t> subset(std::size_t rank) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank; ++i) {
      if (coin()) out.push_back(i);
    }
    return out;
  }

  SeedMap seeds(const std::vector<std::size_t>& theta, bool positive_x) {
    SeedMap out;
    for (std::size_t i : theta) out[i] = Seed{any(), positive_x ? positive() : nonzero()};
    return out;
  }

  /// Integrable by construction: random Theta, seeds and complex signs, retried until the
  /// construction succeeds.
  Structure integrable(const RootSystem& rs) {
    for (;;) {
      const auto theta = subset(rs.rank());
      std::vector<int> signs(rs.size());
      for (int& s : signs) s = sign();
      try {
        return construct_from_theta(rs, theta, seeds(theta, coin()), signs);
      } catch (const ConstructionError&) {
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace flagj::testing
