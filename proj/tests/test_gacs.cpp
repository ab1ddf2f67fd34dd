#include <catch2/catch_amalgamated.hpp>

#include "flagj/errors.hpp"
#include "flagj/gacs.hpp"
#include "support/generators.hpp"

using namespace flagj;

namespace {

using GMatrix4 = Eigen::Matrix<Gaussian, 4, 4>;

GMatrix4 complexify(const Matrix4& m) { return m.cast<Gaussian>(); }

Gaussian pair(const Coords4& u, const Coords4& v) {
  return (u.transpose() * complexify(pairing_matrix()) * v)(0, 0);
}

std::vector<RootJ> sample_blocks(testing::Gen& gen) {
  std::vector<RootJ> out{Complex{1}, Complex{-1}, noncomplex_from(0, 1), noncomplex_from(1, 2),
                         noncomplex_from(Rational(-3, 2), Rational(-5, 7))};
  for (int k = 0; k < 20; ++k) out.push_back(gen.block(false));
  return out;
}

}  // namespace

TEST_CASE("every block squares to minus the identity") {
  testing::Gen gen(11);
  for (const RootJ& j : sample_blocks(gen)) {
    CAPTURE(describe(j));
    const Matrix4 m = matrix4(j);
    CHECK(m * m == -Matrix4::Identity());
  }
}

TEST_CASE("every block is orthogonal for the split pairing") {
  testing::Gen gen(12);
  const Matrix4 b = pairing_matrix();
  CHECK(b.transpose() == b);
  for (const RootJ& j : sample_blocks(gen)) {
    CAPTURE(describe(j));
    const Matrix4 m = matrix4(j);
    CHECK(m.transpose() * b * m == b);
  }
}

TEST_CASE("eigenbasis vectors are i-eigenvectors spanning an isotropic plane") {
  testing::Gen gen(13);
  const std::size_t r = 2;
  for (const RootJ& j : sample_blocks(gen)) {
    CAPTURE(describe(j));
    const GMatrix4 m = complexify(matrix4(j));
    const EigenBasis e = eigenbasis(j, r);
    const Coords4 u = coordinates(e.first, r);
    const Coords4 v = coordinates(e.second, r);
    CHECK(m * u == Gaussian::i() * u);
    CHECK(m * v == Gaussian::i() * v);
    CHECK(pair(u, u).is_zero());
    CHECK(pair(u, v).is_zero());
    CHECK(pair(v, v).is_zero());
    // Independence: some 2x2 minor is nonzero.
    bool independent = false;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) independent = independent || !(u(p) * v(q) - u(q) * v(p)).is_zero();
    }
    CHECK(independent);
    CHECK(from_coordinates(u, r) == e.first);
  }
}

TEST_CASE("eigenbases of the complex blocks") {
  const std::size_t r = 0;
  const Gaussian i = Gaussian::i();
  const EigenBasis plus = eigenbasis(Complex{1}, r);
  CHECK(plus.first == GeneralizedVector::A(r) + (-i) * GeneralizedVector::S(r));
  CHECK(plus.second == GeneralizedVector::Astar(r) + (-i) * GeneralizedVector::Sstar(r));
  const EigenBasis minus = eigenbasis(Complex{-1}, r);
  CHECK(minus.first == GeneralizedVector::A(r) + i * GeneralizedVector::S(r));
  CHECK(epsilon(Complex{1}) == -1);
  CHECK(epsilon(Complex{-1}) == 1);
  CHECK_FALSE(epsilon(noncomplex_from(0, 1)).has_value());
}

TEST_CASE("non-complex parameters satisfy a^2 - xy = -1") {
  testing::Gen gen(14);
  for (int k = 0; k < 50; ++k) {
    const auto n = std::get<NonComplex>(gen.block(false));
    CHECK(n.a * n.a - n.x * n.y == Rational(-1));
  }
  CHECK(noncomplex_from(1, 2).y == Rational(1));
  CHECK_THROWS_AS(noncomplex_from(1, 0), InputError);
}

TEST_CASE("structure validation") {
  const RootSystem rs = build_root_system(AlgebraSpec::parse("A2"));
  Structure good{{Complex{1}, Complex{-1}, noncomplex_from(0, 1)}};
  CHECK(validate(rs, good).empty());
  CHECK_NOTHROW(require_valid(rs, good));

  Structure short_one{{Complex{1}, Complex{1}}};
  CHECK_FALSE(validate(rs, short_one).empty());
  CHECK_THROWS_AS(require_valid(rs, short_one), InputError);

  Structure bad_sign{{Complex{2}, Complex{1}, Complex{1}}};
  CHECK(validate(rs, bad_sign).size() == 1);

  Structure bad_relation{{Complex{1}, NonComplex{Rational(1), Rational(1), Rational(1)}, Complex{1}}};
  const auto v = validate(rs, bad_relation);
  REQUIRE(v.size() == 1);
  CHECK(v[0].root == 1);

  Structure zero_x{{Complex{1}, NonComplex{Rational(0), Rational(0), Rational(1)}, Complex{1}}};
  CHECK_FALSE(validate(rs, zero_x).empty());
}

TEST_CASE("changing the root sign flips the block parameters") {
  CHECK(negate_basis(Complex{1}) == RootJ{Complex{-1}});
  const NonComplex n = noncomplex_from(Rational(2), Rational(3));
  const auto flipped = std::get<NonComplex>(negate_basis(n));
  CHECK(flipped.a == n.a);
  CHECK(flipped.x == -n.x);
  CHECK(flipped.a * flipped.a - flipped.x * flipped.y == Rational(-1));
}
