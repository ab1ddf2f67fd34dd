#include "flagj/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "flagj/errors.hpp"

namespace flagj {

// --- AlgebraSpec -----------------------------------------------------------

AlgebraSpec AlgebraSpec::make(char family, int rank) {
  AlgebraSpec spec;
  switch (std::toupper(static_cast<unsigned char>(family))) {
    case 'A': spec.family = Family::A; break;
    case 'B': spec.family = Family::B; break;
    case 'C': spec.family = Family::C; break;
    case 'D': spec.family = Family::D; break;
    case 'E': spec.family = Family::E; break;
    case 'F': spec.family = Family::F; break;
    case 'G': spec.family = Family::G; break;
    default: throw InputError(std::string("unknown Lie algebra family '") + family + "'");
  }
  spec.rank = rank;
  spec.validate();
  return spec;
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("algebra must look like 'A3', got '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
      throw InputError("algebra must look like 'A3', got '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  return make(text.front(), rank);
}

std::string AlgebraSpec::name() const { return static_cast<char>(family) + std::to_string(rank); }

void AlgebraSpec::validate() const {
  const auto reject = [&](const char* why) {
    throw InputError("invalid algebra " + name() + ": " + why);
  };
  switch (family) {
    case Family::A: if (rank < 1 || rank > 8) reject("type A needs 1 <= rank <= 8"); break;
    case Family::B: if (rank < 2 || rank > 8) reject("type B needs 2 <= rank <= 8"); break;
    case Family::C: if (rank < 2 || rank > 8) reject("type C needs 2 <= rank <= 8"); break;
    case Family::D: if (rank < 4 || rank > 8) reject("type D needs 4 <= rank <= 8"); break;
    case Family::E: if (rank < 6 || rank > 8) reject("type E needs rank 6, 7 or 8"); break;
    case Family::F: if (rank != 4) reject("type F needs rank 4"); break;
    case Family::G: if (rank != 2) reject("type G needs rank 2"); break;
  }
}

std::size_t classical_positive_root_count(const AlgebraSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// --- Root ------------------------------------------------------------------

Root Root::simple(std::size_t rank, std::size_t i) {
  std::vector<int> c(rank, 0);
  c.at(i) = 1;
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

std::vector<std::size_t> Root::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(i);
  }
  return out;
}

Root Root::operator-() const { return scaled(-1); }

Root Root::scaled(int k) const {
  std::vector<int> c = coeffs_;
  for (int& x : c) x *= k;
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  std::vector<int> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return Root(std::move(c));
}

Root operator-(const Root& a, const Root& b) {
  std::vector<int> c(a.coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return Root(std::move(c));
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  if (auto h = a.height() <=> b.height(); h != 0) return h;
  return b.coeffs_ <=> a.coeffs_;
}

// --- Construction ----------------------------------------------------------

namespace {

// Symmetric Gram matrix of the simple roots, Bourbaki labelling, short roots of length^2 2.
Eigen::MatrixXi gram_matrix(const AlgebraSpec& spec) {
  const int n = spec.rank;
  Eigen::MatrixXi g = Eigen::MatrixXi::Zero(n, n);
  const auto link = [&](int i, int j, int value) {
    g(i, j) = value;
    g(j, i) = value;
  };
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n - 1; ++i) g(i, i) = 4;
      g(n - 1, n - 1) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n - 1; ++i) g(i, i) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g(0, 0) = 4;
      g(1, 1) = 4;
      g(2, 2) = 2;
      g(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem build_root_system(const AlgebraSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  const auto n = static_cast<std::size_t>(spec.rank);
  rs.gram_ = gram_matrix(spec);
  rs.cartan_.resize(spec.rank, spec.rank);
  rs.symmetrizer_.clear();
  for (int i = 0; i < spec.rank; ++i) {
    rs.symmetrizer_.emplace_back(rs.gram_(i, i), 2);
    for (int j = 0; j < spec.rank; ++j) rs.cartan_(i, j) = 2 * rs.gram_(i, j) / rs.gram_(j, j);
  }

  std::set<std::vector<int>> known;
  std::vector<Root> level;
  for (std::size_t i = 0; i < n; ++i) {
    level.push_back(Root::simple(n, i));
    known.insert(std::vector<int>(level.back().coeffs().begin(), level.back().coeffs().end()));
  }
  std::vector<Root> all = level;
  const auto contains = [&](const Root& r) {
    return known.count(std::vector<int>(r.coeffs().begin(), r.coeffs().end())) > 0;
  };
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& gamma : level) {
      for (std::size_t i = 0; i < n; ++i) {
        const Root ai = Root::simple(n, i);
        // a_i-string through gamma: gamma - p a_i, ..., gamma + q a_i with p - q = <gamma, a_i^vee>.
        int p = 0;
        while (contains(gamma - ai.scaled(p + 1))) ++p;
        const int pairing = rs.inner(gamma, ai);
        const int q = p - 2 * pairing / rs.gram_(static_cast<int>(i), static_cast<int>(i));
        if (q <= 0) continue;
        Root up = gamma + ai;
        std::vector<int> key(up.coeffs().begin(), up.coeffs().end());
        if (known.insert(key).second) next.push_back(std::move(up));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end());
  rs.positive_ = std::move(all);
  rs.index_roots();
  return rs;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int total = 0;
  const auto n = static_cast<int>(rank());
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) total += a[i] * gram_(i, j) * b[j];
  }
  return total;
}

void RootSystem::index_roots() {
  const std::size_t n = positive_.size();
  std::map<std::vector<int>, std::size_t> lookup;
  for (std::size_t k = 0; k < n; ++k) {
    lookup.emplace(std::vector<int>(positive_[k].coeffs().begin(), positive_[k].coeffs().end()), k);
  }
  const auto find = [&](const Root& r) -> int {
    if (r.is_positive()) {
      auto it = lookup.find(std::vector<int>(r.coeffs().begin(), r.coeffs().end()));
      return it == lookup.end() ? 0 : static_cast<int>(it->second) + 1;
    }
    if (r.is_negative()) {
      const Root m = -r;
      auto it = lookup.find(std::vector<int>(m.coeffs().begin(), m.coeffs().end()));
      return it == lookup.end() ? 0 : -(static_cast<int>(it->second) + 1);
    }
    return 0;
  };

  simple_index_.assign(rank(), 0);
  norm2_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    norm2_[k] = inner(positive_[k], positive_[k]);
    if (positive_[k].height() == 1) simple_index_[positive_[k].support().front()] = k;
  }
  sum_table_.assign(n * n, 0);
  diff_table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sum_table_[i * n + j] = find(positive_[i] + positive_[j]);
      diff_table_[i * n + j] = find(positive_[i] - positive_[j]);
    }
  }
  triples_.clear();
  through_.assign(n, {});
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < s; ++a) {
      const int b = diff_table_[s * n + a];
      if (b <= 0) continue;
      const auto bi = static_cast<std::size_t>(b - 1);
      if (bi <= a) continue;
      const std::size_t t = triples_.size();
      triples_.push_back({a, bi, s});
      through_[a].push_back(t);
      through_[bi].push_back(t);
      through_[s].push_back(t);
    }
  }
}

std::optional<std::size_t> RootSystem::index_of(const Root& positive) const {
  auto r = locate(positive);
  if (!r || r->sign < 0) return std::nullopt;
  return r->index;
}

std::optional<SignedRoot> RootSystem::locate(const Root& r) const {
  if (r.rank() != rank()) return std::nullopt;
  const int sign = r.is_positive() ? 1 : r.is_negative() ? -1 : 0;
  if (sign == 0) return std::nullopt;
  const Root target = sign > 0 ? r : -r;
  auto it = std::lower_bound(positive_.begin(), positive_.end(), target);
  if (it == positive_.end() || !(*it == target)) return std::nullopt;
  return SignedRoot{static_cast<std::size_t>(it - positive_.begin()), sign};
}

std::vector<std::size_t> RootSystem::simple_indices() const { return simple_index_; }

std::optional<SignedRoot> RootSystem::combine(SignedRoot a, SignedRoot b) const {
  const std::size_t n = positive_.size();
  int code = 0;
  if (a.sign > 0 && b.sign > 0) {
    code = sum_table_[a.index * n + b.index];
  } else if (a.sign < 0 && b.sign < 0) {
    code = -sum_table_[a.index * n + b.index];
  } else if (a.sign > 0) {
    code = diff_table_[a.index * n + b.index];
  } else {
    code = diff_table_[b.index * n + a.index];
  }
  if (code == 0) return std::nullopt;
  return code > 0 ? SignedRoot{static_cast<std::size_t>(code - 1), 1}
                  : SignedRoot{static_cast<std::size_t>(-code - 1), -1};
}

// --- Names -----------------------------------------------------------------

std::string RootSystem::name(const Root& r) const {
  if (r.is_negative()) {
    const Root m = -r;
    const std::string inner_name = name(m);
    return m.height() == 1 ? "-" + inner_name : "-(" + inner_name + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (r[i] != 1) out += std::to_string(r[i]);
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string RootSystem::triple_name(const Triple& t) const {
  return name(t.a) + "|" + name(t.b) + "|" + name(t.sum);
}

SignedRoot RootSystem::parse_root(std::string_view text) const {
  const std::string original(text);
  const auto fail = [&]() -> SignedRoot { throw InputError("'" + original + "' is not a root of " + spec_.name()); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  int sign = 1;
  if (!s.empty() && s.front() == '-') {
    sign = -1;
    s.erase(0, 1);
    if (!s.empty() && s.front() == '(') {
      if (s.back() != ')') return fail();
      s = s.substr(1, s.size() - 2);
    }
  }
  if (s.empty()) return fail();
  std::vector<int> coeffs(rank(), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int k = 0;
    bool has_k = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      k = k * 10 + (s[pos++] - '0');
      has_k = true;
      if (k > 100) return fail();
    }
    if (!has_k) k = 1;
    if (pos >= s.size() || s[pos] != 'a') return fail();
    ++pos;
    int idx = 0;
    bool has_idx = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos++] - '0');
      has_idx = true;
      if (idx > 100) return fail();
    }
    if (!has_idx || idx < 1 || static_cast<std::size_t>(idx) > rank()) return fail();
    coeffs[static_cast<std::size_t>(idx - 1)] += k;
    if (pos < s.size()) {
      if (s[pos] != '+' || pos + 1 == s.size()) return fail();
      ++pos;
    }
  }
  auto r = locate(Root(std::move(coeffs)));
  if (!r) return fail();
  return {r->index, r->sign * sign};
}

std::size_t RootSystem::parse_positive_root(std::string_view text) const {
  const SignedRoot r = parse_root(text);
  if (r.sign < 0) throw InputError("'" + std::string(text) + "' is a negative root; expected a positive root");
  return r.index;
}

std::vector<std::size_t> RootSystem::parse_simple_set(std::span<const std::string> names) const {
  std::vector<std::size_t> out;
  for (const std::string& nm : names) {
    const std::size_t idx = parse_positive_root(nm);
    if (!is_simple(idx)) throw InputError("'" + nm + "' is not a simple root");
    const std::size_t pos = positive_[idx].support().front();
    if (std::find(out.begin(), out.end(), pos) != out.end()) {
      throw InputError("simple root '" + nm + "' listed twice");
    }
    out.push_back(pos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Free operations -------------------------------------------------------

std::optional<Root> root_add(const RootSystem& rs, const Root& a, const Root& b) {
  const Root s = a + b;
  if (!rs.is_root(s)) return std::nullopt;
  return s;
}

const std::vector<Triple>& zero_sum_triples(const RootSystem& rs) { return rs.triples(); }

std::vector<std::size_t> theta_closure(const RootSystem& rs, std::span<const std::size_t> theta) {
  std::vector<bool> allowed(rs.rank(), false);
  for (std::size_t i : theta) {
    if (i >= rs.rank()) throw InputError("theta contains a non-simple root position " + std::to_string(i));
    allowed[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const auto supp = rs.root(k).support();
    if (std::all_of(supp.begin(), supp.end(), [&](std::size_t i) { return allowed[i]; })) out.push_back(k);
  }
  return out;
}

bool check_positive_system(const RootSystem& rs, std::span<const int> selection) {
  if (selection.size() != rs.size()) {
    throw InputError("signed selection has " + std::to_string(selection.size()) + " entries, expected " +
                     std::to_string(rs.size()));
  }
  for (int s : selection) {
    if (s != 1 && s != -1) throw InputError("signed selection entries must be +1 or -1");
  }
  const auto selected = [&](SignedRoot r) { return selection[r.index] == r.sign; };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i; j < rs.size(); ++j) {
      const SignedRoot a{i, selection[i]};
      const SignedRoot b{j, selection[j]};
      if (auto s = rs.combine(a, b); s && !selected(*s)) return false;
    }
  }
  return true;
}

}  // namespace flagj
