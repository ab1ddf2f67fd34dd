#pragma once

// Root systems of complex semi-simple Lie algebras built from Cartan data.
//
// Roots are integer coefficient vectors over the simple roots a1..al (Bourbaki
// labelling). Only positive roots are stored; a negative root is a positive
// index paired with a sign. Positive roots are ordered by (height, coefficients).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "flagj/rational.hpp"

namespace flagj {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraSpec {
  Family family = Family::A;
  int rank = 1;

  /// "A3", "g2", ... Throws InputError on unknown family or unsupported rank.
  static AlgebraSpec parse(std::string_view text);
  static AlgebraSpec make(char family, int rank);
  std::string name() const;
  void validate() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Number of positive roots for a (validated) type.
std::size_t classical_positive_root_count(const AlgebraSpec& spec);

class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  static Root simple(std::size_t rank, std::size_t i);
  static Root zero(std::size_t rank) { return Root(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const int> coeffs() const { return coeffs_; }
  int height() const;
  bool is_zero() const;
  bool is_positive() const;
  bool is_negative() const;
  /// Indices of simple roots with a nonzero coefficient.
  std::vector<std::size_t> support() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  Root scaled(int k) const;

  friend bool operator==(const Root&, const Root&) = default;
  /// Order by height, then lexicographically by coefficients.
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);

 private:
  std::vector<int> coeffs_;
};

/// sign * positive_roots()[index]
struct SignedRoot {
  std::size_t index = 0;
  int sign = 1;

  SignedRoot operator-() const { return {index, -sign}; }
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// Zero-sum configuration (a, b, -(a+b)) given by positive-root indices with a < b.
struct Triple {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t sum = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class RootSystem {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  std::size_t rank() const { return static_cast<std::size_t>(spec_.rank); }
  /// cartan(i, j) = 2 (a_i, a_j) / (a_j, a_j), Bourbaki convention.
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  /// gram(i, j) = (a_i, a_j), short roots have squared length 2.
  const Eigen::MatrixXi& gram() const { return gram_; }
  /// d_j = (a_j, a_j) / 2, so that cartan * diag(d) is the Gram matrix.
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t size() const { return positive_.size(); }
  const Root& root(std::size_t index) const { return positive_[index]; }
  Root root(SignedRoot r) const { return r.sign > 0 ? positive_[r.index] : -positive_[r.index]; }

  std::optional<std::size_t> index_of(const Root& positive) const;
  std::optional<SignedRoot> locate(const Root& r) const;
  bool is_root(const Root& r) const { return locate(r).has_value(); }
  bool is_simple(std::size_t index) const { return positive_[index].height() == 1; }
  std::vector<std::size_t> simple_indices() const;
  /// Positive-root index of the i-th simple root.
  std::size_t simple_index(std::size_t i) const { return simple_index_[i]; }

  /// (a, b) for arbitrary integer vectors.
  int inner(const Root& a, const Root& b) const;
  /// (r, r) for the positive root at index.
  int norm2(std::size_t index) const { return norm2_[index]; }

  /// a + b for signed roots when it is a root.
  std::optional<SignedRoot> combine(SignedRoot a, SignedRoot b) const;

  /// All zero-sum triples in canonical order (by sum, then a).
  const std::vector<Triple>& triples() const { return triples_; }
  /// Triples whose sum, or one of whose summands, is the given root.
  const std::vector<std::size_t>& triples_through(std::size_t index) const { return through_[index]; }

  /// "a1+a2", "2a1+a2", "-(a1+a2)", "-a1"
  std::string name(const Root& r) const;
  std::string name(std::size_t index) const { return name(positive_[index]); }
  std::string name(SignedRoot r) const { return name(root(r)); }
  std::string triple_name(const Triple& t) const;
  /// Inverse of name(); accepts repeated terms ("a1+a1+a2"). Throws InputError if not a root.
  SignedRoot parse_root(std::string_view text) const;
  std::size_t parse_positive_root(std::string_view text) const;
  /// Resolves names that must denote simple roots into simple-root positions 0..l-1.
  std::vector<std::size_t> parse_simple_set(std::span<const std::string> names) const;

  friend RootSystem build_root_system(const AlgebraSpec& spec);

 private:
  RootSystem() = default;
  void index_roots();

  AlgebraSpec spec_;
  Eigen::MatrixXi cartan_;
  Eigen::MatrixXi gram_;
  std::vector<Rational> symmetrizer_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_index_;
  std::vector<int> norm2_;
  // Dense n x n tables over positive indices, encoded as signed (index + 1), 0 if not a root.
  std::vector<int> sum_table_;
  std::vector<int> diff_table_;
  std::vector<Triple> triples_;
  std::vector<std::vector<std::size_t>> through_;
};

/// Closure of the simple roots under root strings. Throws InputError on an invalid spec.
RootSystem build_root_system(const AlgebraSpec& spec);

std::optional<Root> root_add(const RootSystem& rs, const Root& a, const Root& b);

const std::vector<Triple>& zero_sum_triples(const RootSystem& rs);

/// Positive roots supported on theta (given as simple-root positions), sorted by index.
std::vector<std::size_t> theta_closure(const RootSystem& rs, std::span<const std::size_t> theta);

/// One sign per positive root: +1 selects gamma, -1 selects -gamma.
/// True iff the selected set is closed under root addition. Throws InputError if malformed.
bool check_positive_system(const RootSystem& rs, std::span<const int> selection);

}  // namespace flagj
