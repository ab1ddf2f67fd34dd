#include "flagj/liealg.hpp"

#include <cstdlib>
#include <numeric>

#include "flagj/errors.hpp"

namespace flagj {

namespace {

class ConstantsBuilder {
 public:
  explicit ConstantsBuilder(const RootSystem& rs)
      : rs_(rs), n_(rs.size()), positive_(n_ * n_, 0), known_(n_ * n_, false) {}

  void run() {
    for (std::size_t xi = 0; xi < n_; ++xi) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < xi; ++a) {
        auto b = rs_.combine({xi, 1}, {a, -1});
        if (b && b->sign > 0 && a < b->index) pairs.emplace_back(a, b->index);
      }
      if (pairs.empty()) continue;
      // Pairs are scanned with a increasing, so the first one is extraspecial.
      const auto [a1, b1] = pairs.front();
      const int n1 = string_length({a1, 1}, {b1, 1}) + 1;
      set(a1, b1, n1);
      const SignedRoot alpha1{a1, 1};
      const SignedRoot beta1{b1, 1};
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const SignedRoot alpha{pairs[k].first, 1};
        const SignedRoot beta{pairs[k].second, 1};
        // Jacobi on (E_alpha, E_beta, E_-alpha1), solved for N_{alpha,beta}.
        long total_num = 0;
        long total_den = 1;
        const auto add_term = [&](long num, long den) {
          total_num = total_num * den + num * total_den;
          total_den *= den;
        };
        if (auto d = rs_.combine(beta, -alpha1)) {
          add_term(static_cast<long>(N(beta, -alpha1)) * N(alpha, -beta1), norm2(*d));
        }
        if (auto d = rs_.combine(alpha, -alpha1)) {
          add_term(static_cast<long>(N(-alpha1, alpha)) * N(beta, -beta1), norm2(*d));
        }
        const long num = static_cast<long>(rs_.norm2(xi)) * total_num;
        const long den = static_cast<long>(n1) * total_den;
        if (den == 0 || num % den != 0) {
          throw InternalError("non-integral structure constant for " + rs_.triple_name({alpha.index, beta.index, xi}));
        }
        const long value = num / den;
        if (std::labs(value) != string_length(alpha, beta) + 1) {
          throw InternalError("structure constant violates |N| = p+1 at " +
                              rs_.triple_name({alpha.index, beta.index, xi}));
        }
        set(alpha.index, beta.index, static_cast<int>(value));
      }
    }
  }

  int N(SignedRoot a, SignedRoot b) const {
    auto s = rs_.combine(a, b);
    if (!s) return 0;
    if (a.sign > 0 && b.sign > 0) {
      const std::size_t k = a.index * n_ + b.index;
      if (!known_[k]) throw InternalError("structure constant requested before it was fixed");
      return positive_[k];
    }
    if (a.sign < 0 && b.sign < 0) return -N(-a, -b);
    // a + b + c = 0 with c = -(a+b); N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
    const SignedRoot c = -*s;
    long num = 0;
    long den = 1;
    if (b.sign == c.sign) {
      num = static_cast<long>(norm2(c)) * N(b, c);
      den = norm2(a);
    } else {
      num = static_cast<long>(norm2(c)) * N(c, a);
      den = norm2(b);
    }
    if (num % den != 0) throw InternalError("non-integral structure constant");
    return static_cast<int>(num / den);
  }

  int string_length(SignedRoot a, SignedRoot b) const {
    const Root ra = rs_.root(a);
    Root cur = rs_.root(b);
    int p = 0;
    while (true) {
      cur = cur - ra;
      if (!rs_.is_root(cur)) return p;
      ++p;
    }
  }

 private:
  int norm2(SignedRoot r) const { return rs_.norm2(r.index); }

  void set(std::size_t a, std::size_t b, int value) {
    positive_[a * n_ + b] = value;
    positive_[b * n_ + a] = -value;
    known_[a * n_ + b] = true;
    known_[b * n_ + a] = true;
  }

  const RootSystem& rs_;
  std::size_t n_;
  std::vector<int> positive_;
  std::vector<bool> known_;
};

}  // namespace

StructureConstants chevalley_constants(const RootSystem& rs) {
  ConstantsBuilder builder(rs);
  builder.run();

  StructureConstants sc(rs);
  const std::size_t n = rs.size();
  std::vector<SignedRoot> all;
  for (std::size_t k = 0; k < n; ++k) all.push_back({k, 1});
  for (std::size_t k = 0; k < n; ++k) all.push_back({k, -1});
  sc.table_.assign(4 * n * n, 0);
  for (const SignedRoot& a : all) {
    for (const SignedRoot& b : all) sc.table_[sc.code(a) * sc.stride() + sc.code(b)] = builder.N(a, b);
  }

  const auto fail = [&](const std::string& what, SignedRoot a, SignedRoot b) {
    throw InternalError(what + " fails for (" + rs.name(a) + ", " + rs.name(b) + ") in " + rs.spec().name());
  };
  const auto norm = [&](SignedRoot r) { return rs.norm2(r.index); };
  for (const SignedRoot& a : all) {
    for (const SignedRoot& b : all) {
      const int v = sc.chevalley(a, b);
      const auto s = rs.combine(a, b);
      if (v != -sc.chevalley(b, a)) fail("antisymmetry", a, b);
      if (v != -sc.chevalley(-a, -b)) fail("negation rule", a, b);
      if ((v != 0) != s.has_value()) fail("support", a, b);
      if (s && std::abs(v) != builder.string_length(a, b) + 1) fail("|N| = p+1", a, b);
      if (s) {
        const SignedRoot c = -*s;
        if (static_cast<long>(v) * norm(a) != static_cast<long>(sc.chevalley(b, c)) * norm(c)) {
          fail("cyclic identity", a, b);
        }
      }
    }
  }

  // Jacobi on root vectors: the E_{a+b+c} coefficient of [E_a,[E_b,E_c]] + cyclic vanishes.
  const auto inner = [&](SignedRoot x, SignedRoot y) { return rs.inner(rs.root(x), rs.root(y)); };
  const auto nested = [&](SignedRoot x, SignedRoot y, SignedRoot z, long& num, long den) {
    // Adds den * coefficient of [E_x,[E_y,E_z]] to num; den is a common multiple of all norms.
    if (y.index == z.index && y.sign != z.sign) {
      // [E_y, E_-y] = 2 H_y/(y,y); [E_x, H] = -x(H) E_x.
      num -= den / norm(y) * 2 * inner(x, y);
      return;
    }
    const auto yz = rs.combine(y, z);
    if (!yz) return;
    num += den * sc.chevalley(y, z) * sc.chevalley(x, *yz);
  };
  long den = 1;
  for (std::size_t k = 0; k < n; ++k) den = std::lcm(den, static_cast<long>(rs.norm2(k)));
  for (const SignedRoot& a : all) {
    for (const SignedRoot& b : all) {
      for (const SignedRoot& c : all) {
        // a+b+c must be a root; zero totals give the Cartan part, equivalent to the cyclic identity.
        const auto total_is_root = [&](SignedRoot x, SignedRoot y, SignedRoot z) -> std::optional<bool> {
          if (x == -y) return true;
          const auto xy = rs.combine(x, y);
          if (!xy) return std::nullopt;
          return *xy != -z && rs.combine(*xy, z).has_value();
        };
        auto root_total = total_is_root(a, b, c);
        if (!root_total) root_total = total_is_root(b, c, a);
        if (!root_total) root_total = total_is_root(c, a, b);
        if (!root_total || !*root_total) continue;
        long num = 0;
        nested(a, b, c, num, den);
        nested(b, c, a, num, den);
        nested(c, a, b, num, den);
        if (num != 0) {
          throw InternalError("Jacobi identity fails for (" + rs.name(a) + ", " + rs.name(b) + ", " + rs.name(c) + ")");
        }
      }
    }
  }
  return sc;
}

Rational StructureConstants::m(SignedRoot a, SignedRoot b) const {
  const int v = chevalley(a, b);
  if (v == 0) return Rational(0);
  const auto s = rs_.combine(a, b);
  return Rational(2L * v, rs_.norm2(s->index));
}

int StructureConstants::p(SignedRoot a, SignedRoot b) const {
  const Root ra = rs_.root(a);
  Root cur = rs_.root(b);
  int k = 0;
  while (true) {
    cur = cur - ra;
    if (!rs_.is_root(cur)) return k;
    ++k;
  }
}

Rational pairing(const RootSystem& rs, const Root& a, const Root& b) { return Rational(rs.inner(a, b)); }

void RegularElement::validate(const RootSystem& rs) const {
  if (c.size() != rs.rank()) {
    throw InputError("H needs " + std::to_string(rs.rank()) + " entries, got " + std::to_string(c.size()));
  }
  for (const Rational& v : c) {
    if (v.sign() <= 0) throw InputError("H entries must be positive, got " + v.str());
  }
}

Rational alpha_of_H(const RegularElement& h, const Root& a) {
  Rational total;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] != 0) total += Rational(a[i]) * h.c.at(i);
  }
  return total;
}

// --- UElement --------------------------------------------------------------

UElement UElement::basis(Sym s, Gaussian coeff) {
  UElement u;
  u.add(s, coeff);
  return u;
}

UElement UElement::iH(const Root& g) {
  UElement u;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (g[j] != 0) u.add({Kind::H, static_cast<std::uint32_t>(j)}, Gaussian(g[j]));
  }
  return u;
}

void UElement::add(Sym s, const Gaussian& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Gaussian UElement::coeff(Sym s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Gaussian() : it->second;
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

UElement& UElement::operator*=(const Gaussian& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= k;
  return *this;
}

std::string UElement::str(const RootSystem& rs) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    switch (s.kind) {
      case Kind::A: out += "A[" + rs.name(s.index) + "]"; break;
      case Kind::S: out += "S[" + rs.name(s.index) + "]"; break;
      case Kind::H: out += "iH[" + rs.name(rs.simple_index(s.index)) + "]"; break;
    }
  }
  return out;
}

// --- Bracket ---------------------------------------------------------------

namespace {

void add_root_term(UElement& out, Kind kind, std::optional<SignedRoot> r, int coeff) {
  if (!r || coeff == 0) return;
  // A_{-g} = -A_g, S_{-g} = S_g
  const int sign = (kind == Kind::A && r->sign < 0) ? -1 : 1;
  out.add({kind, static_cast<std::uint32_t>(r->index)}, Gaussian(sign * coeff));
}

// [iH_j, X_b]
UElement bracket_h(const RootSystem& rs, std::size_t j, Sym x) {
  UElement out;
  if (x.kind == Kind::H) return out;
  const Root& b = rs.root(x.index);
  int value = 0;
  for (std::size_t k = 0; k < rs.rank(); ++k) value += b[k] * rs.gram()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
  if (value == 0) return out;
  if (x.kind == Kind::A) {
    out.add({Kind::S, x.index}, Gaussian(value));
  } else {
    out.add({Kind::A, x.index}, Gaussian(-value));
  }
  return out;
}

}  // namespace

UElement bracket_basis(const StructureConstants& m, Sym x, Sym y) {
  const RootSystem& rs = m.roots();
  if (x.kind == Kind::H) return bracket_h(rs, x.index, y);
  if (y.kind == Kind::H) return bracket_h(rs, y.index, x) * Gaussian(-1);

  UElement out;
  if (x.index == y.index) {
    if (x.kind == y.kind) return out;
    // [A_a, S_a] = (4/(a,a)) iH_a
    UElement h = UElement::iH(rs.root(x.index));
    const Rational scale(4L * (x.kind == Kind::A ? 1 : -1), rs.norm2(x.index));
    return h * Gaussian(scale);
  }
  const SignedRoot a{x.index, 1};
  const SignedRoot b{y.index, 1};
  const auto sum = rs.combine(a, b);
  const auto diff = rs.combine(a, -b);
  if (x.kind == Kind::A && y.kind == Kind::A) {
    add_root_term(out, Kind::A, sum, m.chevalley(a, b));
    add_root_term(out, Kind::A, diff, m.chevalley(-a, b));
  } else if (x.kind == Kind::S && y.kind == Kind::S) {
    add_root_term(out, Kind::A, sum, -m.chevalley(a, b));
    add_root_term(out, Kind::A, diff, -m.chevalley(a, -b));
  } else if (x.kind == Kind::A) {
    add_root_term(out, Kind::S, sum, m.chevalley(a, b));
    add_root_term(out, Kind::S, diff, m.chevalley(a, -b));
  } else {
    return bracket_basis(m, y, x) * Gaussian(-1);
  }
  return out;
}

UElement bracket_u(const StructureConstants& m, const UElement& x, const UElement& y) {
  UElement out;
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      UElement b = bracket_basis(m, sx, sy);
      if (b.is_zero()) continue;
      out += b * (cx * cy);
    }
  }
  return out;
}

Gaussian killing_H(const RegularElement& h, const UElement& x) {
  Gaussian out;
  for (const auto& [s, c] : x.terms()) {
    if (s.kind == Kind::H) out += c * Gaussian::i() * Gaussian(h.c.at(s.index));
  }
  return out;
}

}  // namespace flagj
