#include "flagj/twisted.hpp"

#include "flagj/errors.hpp"
#include "flagj/nijenhuis.hpp"

namespace flagj {

bool InvariantThreeForm::is_zero() const {
  for (const Gaussian& v : vals) {
    if (!v.is_zero()) return false;
  }
  return true;
}

InvariantThreeForm d_omega(const InvariantTwoForm& w, const StructureConstants& m) {
  const RootSystem& rs = m.roots();
  if (w.diag.size() != rs.size()) throw InputError("2-form needs one value per positive root");
  InvariantThreeForm out = InvariantThreeForm::zero(rs);
  for (std::size_t k = 0; k < rs.triples().size(); ++k) {
    const Triple& t = rs.triples()[k];
    const Gaussian sum = w.diag[t.a] + w.diag[t.b] - w.diag[t.sum];
    out.vals[k] = Gaussian(m.m({t.a, 1}, {t.b, 1})) * sum;
  }
  return out;
}

Gaussian omega_on_AS(const InvariantThreeForm& om, std::size_t triple, std::array<Kind, 3> pattern) {
  using enum Kind;
  const Gaussian two_i(Rational(0), Rational(2));
  const Gaussian& v = om.vals.at(triple);
  if (pattern == std::array{A, A, S}) return two_i * v;
  if (pattern == std::array{A, S, A} || pattern == std::array{S, A, A} || pattern == std::array{S, S, S}) {
    return -(two_i * v);
  }
  return {};
}

namespace {

// Triple index and the permutation sign taking (p, q, r) to (a, b, a+b); empty if not a triple.
struct Placement {
  std::size_t triple;
  int sign;
  std::array<int, 3> slot;  // slot[k] = position of argument k within (a, b, a+b)
};

std::optional<Placement> place(const RootSystem& rs, std::size_t p, std::size_t q, std::size_t r) {
  const std::array<std::size_t, 3> args{p, q, r};
  std::size_t top = 0;
  for (int k = 1; k < 3; ++k) {
    if (args[k] > args[top]) top = k;
  }
  for (std::size_t idx : rs.triples_through(args[top])) {
    const Triple& t = rs.triples()[idx];
    if (t.sum != args[top]) continue;
    std::array<int, 3> slot{};
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      if (args[k] == t.a) slot[k] = 0;
      else if (args[k] == t.b) slot[k] = 1;
      else if (args[k] == t.sum) slot[k] = 2;
      else ok = false;
    }
    if (!ok || slot[0] == slot[1] || slot[1] == slot[2] || slot[0] == slot[2]) continue;
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) inversions += slot[i] > slot[j];
    }
    return Placement{idx, inversions % 2 == 0 ? 1 : -1, slot};
  }
  return std::nullopt;
}

}  // namespace

Gaussian omega_eval(const InvariantThreeForm& om, const RootSystem& rs, const UElement& x, const UElement& y,
                    const UElement& z) {
  Gaussian total;
  for (const auto& [sx, cx] : x.terms()) {
    if (sx.kind == Kind::H) continue;
    for (const auto& [sy, cy] : y.terms()) {
      if (sy.kind == Kind::H) continue;
      for (const auto& [sz, cz] : z.terms()) {
        if (sz.kind == Kind::H) continue;
        const auto pl = place(rs, sx.index, sy.index, sz.index);
        if (!pl) continue;
        std::array<Kind, 3> pattern{};
        pattern[pl->slot[0]] = sx.kind;
        pattern[pl->slot[1]] = sy.kind;
        pattern[pl->slot[2]] = sz.kind;
        const Gaussian v = omega_on_AS(om, pl->triple, pattern);
        if (v.is_zero()) continue;
        total += Gaussian(pl->sign) * cx * cy * cz * v;
      }
    }
  }
  return total;
}

Gaussian nij_twisted(const GeneralizedVector& a, const GeneralizedVector& b, const GeneralizedVector& c,
                     const InvariantThreeForm& om, const StructureConstants& m, const RegularElement& h) {
  return nij(a, b, c, m, h) + omega_eval(om, m.roots(), a.vec, b.vec, c.vec);
}

Gaussian required_omega(const StructureConstants& m, const Triple& t, const NonComplex& ja, const NonComplex& jb,
                        const NonComplex& js) {
  const Gaussian i = Gaussian::i();
  const auto part = [&](const NonComplex& j) { return (Gaussian(j.a) - i) / Gaussian(j.x); };
  const Gaussian bracket = part(js) - part(jb) - part(ja);
  return Gaussian(m.m({t.a, 1}, {t.b, 1}) / Rational(12)) * bracket;
}

namespace {

bool all_noncomplex(const Structure& s, const Triple& t) {
  return !is_complex(s.blocks[t.a]) && !is_complex(s.blocks[t.b]) && !is_complex(s.blocks[t.sum]);
}

}  // namespace

OmegaReport is_omega_integrable(const Structure& s, const InvariantThreeForm& om, const StructureConstants& m) {
  const RootSystem& rs = m.roots();
  require_valid(rs, s);
  if (om.vals.size() != rs.triples().size()) throw InputError("3-form needs one value per zero-sum triple");
  OmegaReport out;
  for (std::size_t k = 0; k < rs.triples().size(); ++k) {
    const Triple& t = rs.triples()[k];
    if (all_noncomplex(s, t)) {
      const Gaussian req = required_omega(m, t, std::get<NonComplex>(s.blocks[t.a]),
                                          std::get<NonComplex>(s.blocks[t.b]), std::get<NonComplex>(s.blocks[t.sum]));
      if (req != om.vals[k]) out.failures.push_back({t, "omega-mismatch", req, om.vals[k]});
      continue;
    }
    const TripleVerdict v = triple_status(s.blocks[t.a], s.blocks[t.b], s.blocks[t.sum]);
    if (!v.integrable) out.failures.push_back({t, v.reason, std::nullopt, std::nullopt});
  }
  out.integrable = out.failures.empty();
  return out;
}

OmegaSolution candidate_omega(const Structure& s, const StructureConstants& m) {
  const RootSystem& rs = m.roots();
  require_valid(rs, s);
  InvariantTwoForm w = InvariantTwoForm::zero(rs);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (const auto* n = std::get_if<NonComplex>(&s.blocks[r])) {
      w.diag[r] = (Gaussian::i() - Gaussian(n->a)) / Gaussian(Rational(12) * n->x);
    }
  }
  const InvariantThreeForm dw = d_omega(w, m);
  OmegaSolution sol;
  sol.om = dw;
  for (std::size_t k = 0; k < rs.triples().size(); ++k) {
    const Triple& t = rs.triples()[k];
    if (!all_noncomplex(s, t)) continue;
    sol.om.vals[k] = required_omega(m, t, std::get<NonComplex>(s.blocks[t.a]), std::get<NonComplex>(s.blocks[t.b]),
                                    std::get<NonComplex>(s.blocks[t.sum]));
  }
  if (sol.om == dw) sol.w = std::move(w);
  return sol;
}

SolveOmegaResult solve_omega(const Structure& s, const StructureConstants& m) {
  const RootSystem& rs = m.roots();
  require_valid(rs, s);
  SolveOmegaResult out;
  for (const Triple& t : rs.triples()) {
    if (all_noncomplex(s, t)) continue;
    if (!triple_status(s.blocks[t.a], s.blocks[t.b], s.blocks[t.sum]).integrable) {
      out.reason = "obstructed triple not all non-complex";
      out.blocking = t;
      return out;
    }
  }
  out.solution = candidate_omega(s, m);
  return out;
}

}  // namespace flagj
