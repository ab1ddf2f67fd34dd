#include "flagj/gacs.hpp"

#include "flagj/errors.hpp"

namespace flagj {

NonComplex noncomplex_from(const Rational& a, const Rational& x) {
  if (x.is_zero()) throw InputError("non-complex block needs x != 0");
  return {a, x, (a * a + Rational(1)) / x};
}

std::string describe(const RootJ& j) {
  if (const auto* c = std::get_if<Complex>(&j)) return c->sign > 0 ? "J0" : "-J0";
  const auto& n = std::get<NonComplex>(j);
  return "(a=" + n.a.str() + ", x=" + n.x.str() + ", y=" + n.y.str() + ")";
}

std::vector<std::string> block_violations(const RootJ& j) {
  std::vector<std::string> out;
  if (const auto* c = std::get_if<Complex>(&j)) {
    if (c->sign != 1 && c->sign != -1) out.push_back("complex sign must be +1 or -1");
    return out;
  }
  const auto& n = std::get<NonComplex>(j);
  if (n.x.is_zero()) out.push_back("x must be nonzero");
  if (n.y.is_zero()) out.push_back("y must be nonzero");
  if (n.a * n.a - n.x * n.y != Rational(-1)) out.push_back("a^2 - x y must equal -1");
  return out;
}

std::vector<Violation> validate(const RootSystem& rs, const Structure& s) {
  std::vector<Violation> out;
  if (s.blocks.size() != rs.size()) {
    out.push_back({0, "structure has " + std::to_string(s.blocks.size()) + " blocks, expected " +
                          std::to_string(rs.size())});
    return out;
  }
  for (std::size_t r = 0; r < s.blocks.size(); ++r) {
    for (std::string& what : block_violations(s.blocks[r])) out.push_back({r, std::move(what)});
  }
  return out;
}

void require_valid(const RootSystem& rs, const Structure& s) {
  const auto violations = validate(rs, s);
  if (violations.empty()) return;
  std::string msg = "invalid structure:";
  for (const auto& v : violations) {
    msg += " [";
    if (s.blocks.size() == rs.size()) msg += rs.name(v.root) + ": ";
    msg += v.constraint + "]";
  }
  throw InputError(msg);
}

Matrix4 matrix4(const RootJ& j) {
  Matrix4 m = Matrix4::Zero();
  if (const auto* c = std::get_if<Complex>(&j)) {
    const Rational s(c->sign);
    m(0, 1) = -s;
    m(1, 0) = s;
    m(2, 3) = -s;
    m(3, 2) = s;
    return m;
  }
  const auto& n = std::get<NonComplex>(j);
  m(0, 0) = n.a;
  m(0, 3) = -n.x;
  m(1, 1) = n.a;
  m(1, 2) = n.x;
  m(2, 1) = -n.y;
  m(2, 2) = -n.a;
  m(3, 0) = n.y;
  m(3, 3) = -n.a;
  return m;
}

Matrix4 pairing_matrix() {
  Matrix4 b = Matrix4::Zero();
  b(0, 2) = 1;
  b(2, 0) = 1;
  b(1, 3) = 1;
  b(3, 1) = 1;
  return b;
}

GeneralizedVector& GeneralizedVector::operator+=(const GeneralizedVector& o) {
  vec += o.vec;
  dual += o.dual;
  return *this;
}

GeneralizedVector& GeneralizedVector::operator*=(const Gaussian& k) {
  vec *= k;
  dual *= k;
  return *this;
}

std::string GeneralizedVector::str(const RootSystem& rs) const {
  std::string out = vec.is_zero() ? "" : vec.str(rs);
  if (!dual.is_zero()) {
    std::string d = dual.str(rs);
    for (std::size_t pos = 0; (pos = d.find("[", pos)) != std::string::npos; pos += 2) d.insert(pos, "*");
    out += (out.empty() ? "" : " + ") + d;
  }
  return out.empty() ? "0" : out;
}

Coords4 coordinates(const GeneralizedVector& v, std::size_t r) {
  const auto idx = static_cast<std::uint32_t>(r);
  Coords4 c;
  c(0) = v.vec.coeff({Kind::A, idx});
  c(1) = v.vec.coeff({Kind::S, idx});
  c(2) = -v.dual.coeff({Kind::S, idx});
  c(3) = v.dual.coeff({Kind::A, idx});
  return c;
}

GeneralizedVector from_coordinates(const Coords4& c, std::size_t r) {
  const auto idx = static_cast<std::uint32_t>(r);
  GeneralizedVector v;
  v.vec.add({Kind::A, idx}, c(0));
  v.vec.add({Kind::S, idx}, c(1));
  v.dual.add({Kind::S, idx}, -c(2));
  v.dual.add({Kind::A, idx}, c(3));
  return v;
}

EigenBasis eigenbasis(const RootJ& j, std::size_t r) {
  const Gaussian i = Gaussian::i();
  if (const auto* c = std::get_if<Complex>(&j)) {
    // J0: {A - iS, A* - iS*};  -J0: {A + iS, A* + iS*}
    const Gaussian s = c->sign > 0 ? -i : i;
    return {GeneralizedVector::A(r) + s * GeneralizedVector::S(r),
            GeneralizedVector::Astar(r) + s * GeneralizedVector::Sstar(r)};
  }
  const auto& n = std::get<NonComplex>(j);
  const Gaussian x(n.x);
  const Gaussian w = Gaussian(n.a) - i;
  return {x * GeneralizedVector::A(r) + w * GeneralizedVector::Astar(r),
          x * GeneralizedVector::S(r) + w * GeneralizedVector::Sstar(r)};
}

RootJ negate_basis(const RootJ& j) {
  if (const auto* c = std::get_if<Complex>(&j)) return Complex{-c->sign};
  const auto& n = std::get<NonComplex>(j);
  return NonComplex{n.a, -n.x, -n.y};
}

std::optional<int> epsilon(const RootJ& j) {
  if (const auto* c = std::get_if<Complex>(&j)) return -c->sign;
  return std::nullopt;
}

}  // namespace flagj
