#pragma once

// Invariant generalized almost complex structures, one 4x4 block per positive root.
//
// Block matrices act on coordinates in the ordered basis {A_g, S_g, -S*_g, A*_g}.
// A complex block is +-J0; a non-complex block is (a, x, y) with a^2 - x y = -1.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "flagj/liealg.hpp"
#include "flagj/rational.hpp"
#include "flagj/rootsystem.hpp"

namespace flagj {

struct Complex {
  int sign = 1;  // +1 is J0, -1 is -J0
  friend bool operator==(const Complex&, const Complex&) = default;
};

struct NonComplex {
  Rational a;
  Rational x;
  Rational y;
  friend bool operator==(const NonComplex&, const NonComplex&) = default;
};

using RootJ = std::variant<Complex, NonComplex>;

inline bool is_complex(const RootJ& j) { return std::holds_alternative<Complex>(j); }
/// Valid non-complex block with y = (a^2 + 1)/x. Throws InputError if x == 0.
NonComplex noncomplex_from(const Rational& a, const Rational& x);
std::string describe(const RootJ& j);

/// One block per positive root, indexed like RootSystem::positive_roots().
struct Structure {
  std::vector<RootJ> blocks;
  friend bool operator==(const Structure&, const Structure&) = default;
};

struct Violation {
  std::size_t root = 0;
  std::string constraint;
};

/// Constraint failures of a single block, empty when valid.
std::vector<std::string> block_violations(const RootJ& j);
/// Empty iff s is total on the positive roots and every block is valid.
std::vector<Violation> validate(const RootSystem& rs, const Structure& s);
/// Throws InputError listing the violations.
void require_valid(const RootSystem& rs, const Structure& s);

using Matrix4 = Eigen::Matrix<Rational, 4, 4>;
using Coords4 = Eigen::Matrix<Gaussian, 4, 1>;

Matrix4 matrix4(const RootJ& j);
/// Split-signature pairing on {A, S, -S*, A*}: A with -S* and S with A*.
Matrix4 pairing_matrix();

/// X + xi with X in the compact form (A/S symbols) and xi a dual combination (A*/S* symbols,
/// stored as the A/S symbol they are dual to).
struct GeneralizedVector {
  UElement vec;
  UElement dual;

  GeneralizedVector& operator+=(const GeneralizedVector& o);
  GeneralizedVector& operator*=(const Gaussian& k);
  friend GeneralizedVector operator+(GeneralizedVector a, const GeneralizedVector& b) { return a += b; }
  friend GeneralizedVector operator*(const Gaussian& k, GeneralizedVector v) { return v *= k; }
  friend bool operator==(const GeneralizedVector&, const GeneralizedVector&) = default;

  static GeneralizedVector A(std::size_t r) { return {UElement::A(r), {}}; }
  static GeneralizedVector S(std::size_t r) { return {UElement::S(r), {}}; }
  static GeneralizedVector Astar(std::size_t r) { return {{}, UElement::A(r)}; }
  static GeneralizedVector Sstar(std::size_t r) { return {{}, UElement::S(r)}; }

  std::string str(const RootSystem& rs) const;
};

/// Coordinates of v's components at root r in the basis {A, S, -S*, A*}.
Coords4 coordinates(const GeneralizedVector& v, std::size_t r);
GeneralizedVector from_coordinates(const Coords4& c, std::size_t r);

struct EigenBasis {
  GeneralizedVector first;
  GeneralizedVector second;
};

/// Basis of the i-eigenspace of the block at positive root r.
EigenBasis eigenbasis(const RootJ& j, std::size_t r);

/// The same block written in the basis attached to -g.
RootJ negate_basis(const RootJ& j);

/// -1 for J0, +1 for -J0, empty for non-complex blocks.
std::optional<int> epsilon(const RootJ& j);

}  // namespace flagj
