#include "flagj/classify.hpp"

#include <algorithm>

#include "flagj/errors.hpp"

namespace flagj {

namespace {

int sign_of(const RootJ& j) { return std::get<Complex>(j).sign; }

void require_block(const RootJ& j) {
  const auto v = block_violations(j);
  if (!v.empty()) throw InputError("invalid block " + describe(j) + ": " + v.front());
}

}  // namespace

TripleVerdict triple_status(const RootJ& ja, const RootJ& jb, const RootJ& jab) {
  require_block(ja);
  require_block(jb);
  require_block(jab);
  const int noncomplex = !is_complex(ja) + !is_complex(jb) + !is_complex(jab);
  TripleVerdict v;
  switch (noncomplex) {
    case 0:
      v.integrable = !(sign_of(ja) == sign_of(jb) && sign_of(jb) != sign_of(jab));
      v.reason = v.integrable ? "all-complex" : "complex-sign-clash";
      break;
    case 1:
      if (!is_complex(jab)) {
        v.integrable = sign_of(ja) != sign_of(jb);
        v.reason = v.integrable ? "noncomplex-sum" : "noncomplex-sum-sign-clash";
      } else {
        const int other = is_complex(ja) ? sign_of(ja) : sign_of(jb);
        v.integrable = other == sign_of(jab);
        v.reason = v.integrable ? "noncomplex-summand" : "noncomplex-summand-sign-clash";
      }
      break;
    case 2:
      v.integrable = false;
      v.reason = "two-noncomplex-one-complex";
      break;
    default: {
      const auto& a = std::get<NonComplex>(ja);
      const auto& b = std::get<NonComplex>(jb);
      const auto& s = std::get<NonComplex>(jab);
      v.residuals = std::array<Rational, 2>{s.a * a.x * b.x - b.a * a.x * s.x - a.a * b.x * s.x,
                                            a.x * b.x - a.x * s.x - b.x * s.x};
      v.integrable = (*v.residuals)[0].is_zero() && (*v.residuals)[1].is_zero();
      v.reason = v.integrable ? "system-satisfied" : "system-violated";
    }
  }
  return v;
}

IntegrabilityReport is_integrable(const Structure& s, const RootSystem& rs) {
  require_valid(rs, s);
  IntegrabilityReport out;
  for (const Triple& t : rs.triples()) {
    TripleVerdict v = triple_status(s.blocks[t.a], s.blocks[t.b], s.blocks[t.sum]);
    if (!v.integrable) {
      out.integrable = false;
      out.failures.push_back({t, std::move(v)});
    }
  }
  return out;
}

ThetaData extract_theta(const Structure& s, const RootSystem& rs) {
  const std::vector<int> sel = positive_system(s, rs);
  const auto selected = [&](std::optional<SignedRoot> r) { return r && sel[r->index] == r->sign; };
  ThetaData out;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    const SignedRoot p{r, sel[r]};
    bool decomposes = false;
    for (std::size_t q = 0; q < rs.size() && !decomposes; ++q) {
      decomposes = q != r && selected(rs.combine(p, SignedRoot{q, -sel[q]}));
    }
    if (decomposes) continue;
    out.simple_system.push_back(p);
    if (!is_complex(s.blocks[r])) out.theta.push_back(p);
  }
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (!is_complex(s.blocks[r])) out.noncomplex.push_back(r);
  }
  // Closure of Theta: add members of Theta one at a time.
  std::vector<bool> reached(rs.size(), false);
  std::vector<SignedRoot> frontier = out.theta;
  for (const SignedRoot& t : out.theta) reached[t.index] = true;
  while (!frontier.empty()) {
    std::vector<SignedRoot> next;
    for (const SignedRoot& c : frontier) {
      for (const SignedRoot& t : out.theta) {
        const auto sum = rs.combine(c, t);
        if (!sum || reached[sum->index]) continue;
        reached[sum->index] = true;
        next.push_back(*sum);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::size_t> closure;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (reached[r]) closure.push_back(r);
  }
  if (out.simple_system.size() != rs.rank() || closure != out.noncomplex) {
    throw InternalError("non-complex roots of an integrable structure are not the closure of Theta");
  }
  return out;
}

std::vector<int> positive_system(const Structure& s, const RootSystem& rs) {
  const auto report = is_integrable(s, rs);
  if (!report.integrable) {
    throw InputError("positive system requested for a non-integrable structure; " +
                     rs.triple_name(report.failures.front().triple) + " is obstructed");
  }
  std::vector<int> out;
  out.reserve(rs.size());
  for (const RootJ& j : s.blocks) {
    if (const auto* c = std::get_if<Complex>(&j)) {
      out.push_back(c->sign);
    } else {
      out.push_back(std::get<NonComplex>(j).x.sign() > 0 ? 1 : -1);
    }
  }
  return out;
}

namespace {

struct ClosureSetup {
  std::vector<std::size_t> closure;
  std::vector<bool> in_closure;
};

ClosureSetup prepare(const RootSystem& rs, const std::vector<std::size_t>& theta, const SeedMap& seeds,
                     const std::optional<std::vector<int>>& signs) {
  std::vector<std::size_t> sorted = theta;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("Theta lists a simple root twice");
  for (std::size_t i : sorted) {
    if (i >= rs.rank()) throw InputError("Theta contains an invalid simple-root position");
    auto it = seeds.find(i);
    if (it == seeds.end()) throw InputError("missing seed for simple root " + rs.name(rs.simple_index(i)));
    if (it->second.x.is_zero()) throw InputError("seed x for " + rs.name(rs.simple_index(i)) + " must be nonzero");
  }
  for (const auto& [i, seed] : seeds) {
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) {
      throw InputError("seed given for a simple root outside Theta (position " + std::to_string(i) + ")");
    }
  }
  if (signs) {
    if (signs->size() != rs.size()) throw InputError("sign map must have one entry per positive root");
    for (int s : *signs) {
      if (s != 1 && s != -1) throw InputError("complex signs must be +1 or -1");
    }
  }
  ClosureSetup out;
  out.closure = theta_closure(rs, sorted);
  out.in_closure.assign(rs.size(), false);
  for (std::size_t r : out.closure) out.in_closure[r] = true;
  return out;
}

void fill_complex(const RootSystem& rs, const ClosureSetup& setup, const std::optional<std::vector<int>>& signs,
                  Structure& s) {
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (!setup.in_closure[r]) s.blocks[r] = Complex{signs ? (*signs)[r] : 1};
  }
}

void require_integrable(const RootSystem& rs, const Structure& s) {
  const auto report = is_integrable(s, rs);
  if (!report.integrable) {
    const auto& f = report.failures.front();
    throw ConstructionError("sign map makes triple " + rs.triple_name(f.triple) + " obstructed (" + f.verdict.reason + ")");
  }
}

[[noreturn]] void vanishing_denominator(const RootSystem& rs, std::size_t r) {
  throw ConstructionError("seed values make the denominator for root " + rs.name(r) + " vanish");
}

}  // namespace

Structure construct_from_theta(const RootSystem& rs, const std::vector<std::size_t>& theta, const SeedMap& seeds,
                               const std::optional<std::vector<int>>& signs) {
  const ClosureSetup setup = prepare(rs, theta, seeds, signs);
  Structure s;
  s.blocks.assign(rs.size(), Complex{1});
  for (std::size_t r : setup.closure) {
    const Root& g = rs.root(r);
    const auto support = g.support();
    // prod_j x_j^{n_j - [j == i]}
    const auto monomial = [&](std::optional<std::size_t> lowered) {
      Rational p(1);
      for (std::size_t j : support) {
        const int e = g[j] - (lowered == j ? 1 : 0);
        for (int k = 0; k < e; ++k) p *= seeds.at(j).x;
      }
      return p;
    };
    Rational numerator_x = monomial(std::nullopt);
    Rational denominator;
    Rational numerator_a;
    for (std::size_t i : support) {
      const Rational term = Rational(g[i]) * monomial(i);
      denominator += term;
      numerator_a += seeds.at(i).a * term;
    }
    if (denominator.is_zero()) vanishing_denominator(rs, r);
    const Rational x = numerator_x / denominator;
    s.blocks[r] = noncomplex_from(numerator_a / denominator, x);
  }
  fill_complex(rs, setup, signs, s);
  require_integrable(rs, s);
  return s;
}

Structure propagate(const RootSystem& rs, const std::vector<std::size_t>& theta, const SeedMap& seeds,
                    const std::optional<std::vector<int>>& signs) {
  const ClosureSetup setup = prepare(rs, theta, seeds, signs);
  std::vector<std::optional<Seed>> values(rs.size());
  for (std::size_t r : setup.closure) {
    if (rs.is_simple(r)) {
      values[r] = seeds.at(rs.root(r).support().front());
      continue;
    }
    for (std::size_t t : rs.triples_through(r)) {
      const Triple& tr = rs.triples()[t];
      if (tr.sum != r) continue;
      const Seed& u = *values[tr.a];
      const Seed& v = *values[tr.b];
      const Rational den = u.x + v.x;
      if (den.is_zero()) vanishing_denominator(rs, r);
      Seed candidate{(v.a * u.x + u.a * v.x) / den, u.x * v.x / den};
      if (!values[r]) {
        values[r] = std::move(candidate);
      } else if (values[r]->x != candidate.x || values[r]->a != candidate.a) {
        throw InternalError("decompositions of " + rs.name(r) + " give different parameters");
      }
    }
  }
  Structure s;
  s.blocks.assign(rs.size(), Complex{1});
  for (std::size_t r : setup.closure) s.blocks[r] = noncomplex_from(values[r]->a, values[r]->x);
  fill_complex(rs, setup, signs, s);
  require_integrable(rs, s);
  return s;
}

}  // namespace flagj
