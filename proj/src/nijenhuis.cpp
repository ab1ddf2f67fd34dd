#include "flagj/nijenhuis.hpp"

#include "flagj/errors.hpp"

namespace flagj {

namespace {

// sum over dual terms X*_g of coeff * k_g * <H, [X_g, [u, v]]>
Gaussian dual_term(const UElement& dual, const UElement& u, const UElement& v, const StructureConstants& m,
                   const RegularElement& h) {
  if (dual.is_zero() || u.is_zero() || v.is_zero()) return {};
  const UElement uv = bracket_u(m, u, v);
  if (uv.is_zero()) return {};
  Gaussian total;
  for (const auto& [sym, coeff] : dual.terms()) {
    const Rational k = alpha_of_H(h, m.roots().root(sym.index)).inverse();
    const Gaussian pairing = killing_H(h, bracket_u(m, UElement::basis(sym), uv));
    if (pairing.is_zero()) continue;
    total += coeff * Gaussian(k) * pairing;
  }
  return total;
}

}  // namespace

Gaussian nij(const GeneralizedVector& a, const GeneralizedVector& b, const GeneralizedVector& c,
             const StructureConstants& m, const RegularElement& h) {
  Gaussian total = dual_term(c.dual, a.vec, b.vec, m, h);
  total += dual_term(a.dual, b.vec, c.vec, m, h);
  total += dual_term(b.dual, c.vec, a.vec, m, h);
  if (total.is_zero()) return total;
  return total * Gaussian(Rational(1, 12));
}

std::vector<GeneralizedVector> global_eigenbasis(const Structure& s) {
  std::vector<GeneralizedVector> out;
  out.reserve(2 * s.blocks.size());
  for (std::size_t r = 0; r < s.blocks.size(); ++r) {
    EigenBasis e = eigenbasis(s.blocks[r], r);
    out.push_back(std::move(e.first));
    out.push_back(std::move(e.second));
  }
  return out;
}

void check_rank_cap(const RootSystem& rs, const BruteForceOptions& options) {
  if (!options.lift_cap && static_cast<int>(rs.rank()) > options.max_rank) {
    throw InputError("brute-force evaluation is capped at rank " + std::to_string(options.max_rank) + ", " +
                     rs.spec().name() + " has rank " + std::to_string(rs.rank()) + " (lift the cap to proceed)");
  }
}

BruteForceResult is_integrable_bruteforce(const Structure& s, const StructureConstants& m, const RegularElement& h,
                                          const BruteForceOptions& options) {
  require_valid(m.roots(), s);
  check_rank_cap(m.roots(), options);
  h.validate(m.roots());
  const auto vs = global_eigenbasis(s);
  return vanishes_on(vs, [&](const auto& x, const auto& y, const auto& z) { return nij(x, y, z, m, h); });
}

}  // namespace flagj
