#pragma once

// Structure constants, the bracket on the compact real form and the regular element H.
//
// Root vectors E_a form a Chevalley basis: [E_a, E_b] = N_{a,b} E_{a+b} with integer N,
// [E_a, E_-a] = 2 H_a / (a,a), where H_a is dual to a under the symmetrized Cartan form.
// The compact basis is A_a = E_a - E_-a, S_a = i (E_a + E_-a), and iH_j := i H_{a_j}.
//
// m(a,b) = 2 N_{a,b} / (a+b, a+b) is the constant that a Weyl basis (<X_a, X_-a> = 1)
// exhibits after rescaling each root space uniformly; it is rational, antisymmetric and
// cyclic on zero-sum triples. On simply-laced types m = N.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagj/rational.hpp"
#include "flagj/rootsystem.hpp"

namespace flagj {

class StructureConstants {
 public:
  const RootSystem& roots() const { return rs_; }

  /// Chevalley integer N_{a,b}; 0 when a+b is not a root.
  int chevalley(SignedRoot a, SignedRoot b) const { return table_[code(a) * stride() + code(b)]; }
  /// Cyclic constant 2 N_{a,b} / (a+b, a+b).
  Rational m(SignedRoot a, SignedRoot b) const;
  /// max{k >= 0 : b - k a is a root}
  int p(SignedRoot a, SignedRoot b) const;

  friend StructureConstants chevalley_constants(const RootSystem& rs);

 private:
  explicit StructureConstants(RootSystem rs) : rs_(std::move(rs)) {}
  std::size_t stride() const { return 2 * rs_.size(); }
  std::size_t code(SignedRoot r) const { return r.sign > 0 ? r.index : rs_.size() + r.index; }

  RootSystem rs_;
  std::vector<int> table_;
};

/// Extraspecial-pair construction. Every identity (antisymmetry, negation, |N| = p+1,
/// cyclicity, Jacobi) is re-checked; a failure throws InternalError.
StructureConstants chevalley_constants(const RootSystem& rs);

/// (a, b) in the symmetrized Cartan form, short roots of length^2 2.
Rational pairing(const RootSystem& rs, const Root& a, const Root& b);

struct RegularElement {
  /// c_i = a_i(H) > 0
  std::vector<Rational> c;

  static RegularElement ones(std::size_t rank) { return {std::vector<Rational>(rank, Rational(1))}; }
  /// Throws InputError unless c has the right length and is positive.
  void validate(const RootSystem& rs) const;
};

/// a(H) = sum n_i c_i
Rational alpha_of_H(const RegularElement& h, const Root& a);

enum class Kind : std::uint8_t { A, S, H };

/// A_g, S_g (index = positive root) or iH_j (index = simple-root position j).
struct Sym {
  Kind kind = Kind::A;
  std::uint32_t index = 0;

  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;
};

/// Finite combination of basis symbols of the compact form with coefficients in Q(i).
class UElement {
 public:
  UElement() = default;
  static UElement basis(Sym s, Gaussian coeff = Gaussian(1));
  static UElement A(std::size_t root) { return basis({Kind::A, static_cast<std::uint32_t>(root)}); }
  static UElement S(std::size_t root) { return basis({Kind::S, static_cast<std::uint32_t>(root)}); }
  /// iH_g for an arbitrary root g, expanded over the simple iH_j.
  static UElement iH(const Root& g);

  void add(Sym s, const Gaussian& coeff);
  Gaussian coeff(Sym s) const;
  const std::map<Sym, Gaussian>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Gaussian& k);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const Gaussian& k) { return a *= k; }
  friend UElement operator*(const Gaussian& k, UElement a) { return a *= k; }
  friend bool operator==(const UElement&, const UElement&) = default;

  std::string str(const RootSystem& rs) const;

 private:
  std::map<Sym, Gaussian> terms_;
};

/// Bilinear bracket on the compact form.
UElement bracket_u(const StructureConstants& m, const UElement& x, const UElement& y);
/// Bracket of two basis symbols (real coefficients).
UElement bracket_basis(const StructureConstants& m, Sym x, Sym y);

/// <H, x>: sum of coeff(iH_j) * i * c_j. Root-space components pair to zero.
Gaussian killing_H(const RegularElement& h, const UElement& x);

}  // namespace flagj
