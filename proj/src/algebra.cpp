#include "knotlike/algebra.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "knotlike/error.hpp"

namespace knotlike {

std::optional<int> Bigrading::alexander() const {
  const int diff = gr_u - gr_v;
  if (diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

Monomial Monomial::u(int exponent) {
  if (exponent < 0) throw ValidationError(ValidationError::Kind::InvalidMonomial, "negative U exponent");
  return exponent == 0 ? Monomial() : Monomial(Kind::U, exponent);
}

Monomial Monomial::v(int exponent) {
  if (exponent < 0) throw ValidationError(ValidationError::Kind::InvalidMonomial, "negative V exponent");
  return exponent == 0 ? Monomial() : Monomial(Kind::V, exponent);
}

Bigrading Monomial::grading() const {
  switch (kind_) {
    case Kind::Unit: return {0, 0};
    case Kind::U: return {-2 * exponent_, 0};
    case Kind::V: return {0, -2 * exponent_};
  }
  return {0, 0};
}

std::optional<Monomial> Monomial::times(const Monomial& other) const {
  if (is_unit()) return other;
  if (other.is_unit()) return *this;
  if (kind_ != other.kind_) return std::nullopt;
  return Monomial(kind_, exponent_ + other.exponent_);
}

std::string Monomial::to_string() const {
  switch (kind_) {
    case Kind::Unit: return "1";
    case Kind::U: return "U^" + std::to_string(exponent_);
    case Kind::V: return "V^" + std::to_string(exponent_);
  }
  return "1";
}

std::optional<Monomial> monomial_between(Bigrading from, Bigrading to) {
  const Bigrading d = to - from;
  if (d.gr_u == 0 && d.gr_v == 0) return Monomial::unit();
  if (d.gr_v == 0 && d.gr_u < 0 && d.gr_u % 2 == 0) return Monomial::u(-d.gr_u / 2);
  if (d.gr_u == 0 && d.gr_v < 0 && d.gr_v % 2 == 0) return Monomial::v(-d.gr_v / 2);
  return std::nullopt;
}

namespace {

using Kind = ValidationError::Kind;

std::string entry_label(const std::vector<Generator>& gens, std::size_t src, std::size_t tgt) {
  return "(" + gens[src].name + ", " + gens[tgt].name + ")";
}

// Shared structural check. `lines[src]` decorates errors raised for the
// differential of `src`.
void check_structure(const std::vector<Generator>& gens, std::vector<std::vector<Term>>& diff,
                     const std::vector<std::optional<int>>& lines) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!seen.emplace(gens[i].name, i).second) {
      throw ValidationError(Kind::DuplicateGenerator, gens[i].name);
    }
  }
  if (diff.size() != gens.size()) throw ValidationError(Kind::UnknownGenerator, "differential table size mismatch");
  for (std::size_t s = 0; s < diff.size(); ++s) {
    auto line = s < lines.size() ? lines[s] : std::nullopt;
    auto& terms = diff[s];
    for (const Term& t : terms) {
      if (t.target >= gens.size()) {
        throw ValidationError(Kind::UnknownGenerator, "target index " + std::to_string(t.target), line);
      }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.target < b.target; });
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k > 0 && terms[k].target == terms[k - 1].target) {
        throw ValidationError(Kind::DuplicateEntry, entry_label(gens, s, terms[k].target), line);
      }
      const Bigrading lhs = terms[k].coefficient.grading() + gens[terms[k].target].grading;
      const Bigrading rhs = gens[s].grading + kDifferentialDegree;
      if (!(lhs == rhs)) {
        throw ValidationError(Kind::DegreeViolation, entry_label(gens, s, terms[k].target), line);
      }
    }
  }
  // d^2 = 0: accumulate d(d s) per target. Coefficients at a fixed target are
  // grading-forced, so a parity bit per target is enough.
  std::vector<char> parity(gens.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t s = 0; s < diff.size(); ++s) {
    touched.clear();
    for (const Term& t1 : diff[s]) {
      for (const Term& t2 : diff[t1.target]) {
        if (!t1.coefficient.times(t2.coefficient)) continue;
        if (parity[t2.target] == 0) touched.push_back(t2.target);
        parity[t2.target] ^= 1;
      }
    }
    bool bad = false;
    for (std::size_t t : touched) {
      bad = bad || parity[t] != 0;
      parity[t] = 0;
    }
    if (bad) {
      throw ValidationError(Kind::DSquaredNonzero, gens[s].name, s < lines.size() ? lines[s] : std::nullopt);
    }
  }
}

}  // namespace

Complex::Complex() : generators_{{"x0", {0, 0}}}, differential_(1) {}

Complex::Complex(std::vector<Generator> generators, std::vector<std::vector<Term>> differential)
    : generators_(std::move(generators)), differential_(std::move(differential)) {
  check_structure(generators_, differential_, {});
}

std::optional<std::size_t> Complex::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Complex::is_reduced() const {
  for (const auto& terms : differential_) {
    for (const Term& t : terms) {
      if (t.coefficient.is_unit()) return false;
    }
  }
  return true;
}

std::size_t Complex::num_entries() const {
  std::size_t n = 0;
  for (const auto& terms : differential_) n += terms.size();
  return n;
}

Complex validate(const RawComplex& raw) {
  std::vector<Generator> gens;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& g : raw.generators) {
    if (!index.emplace(g.name, gens.size()).second) {
      throw ValidationError(Kind::DuplicateGenerator, g.name, g.line);
    }
    gens.push_back({g.name, g.grading});
  }
  std::vector<std::vector<Term>> diff(gens.size());
  std::vector<std::optional<int>> lines(gens.size());
  std::vector<char> has_line(gens.size(), 0);
  for (const auto& d : raw.differentials) {
    auto src = index.find(d.source);
    if (src == index.end()) throw ValidationError(Kind::UnknownGenerator, d.source, d.line);
    if (has_line[src->second]) {
      throw ValidationError(Kind::DuplicateEntry, "differential of " + d.source + " given twice", d.line);
    }
    has_line[src->second] = 1;
    lines[src->second] = d.line;
    for (const auto& t : d.terms) {
      auto tgt = index.find(t.target);
      if (tgt == index.end()) throw ValidationError(Kind::UnknownGenerator, t.target, d.line);
      diff[src->second].push_back({t.coefficient, tgt->second});
    }
  }
  check_structure(gens, diff, lines);
  return Complex(std::move(gens), std::move(diff));
}

Complex reduce(const Complex& c) {
  const std::size_t n = c.size();
  // Working differential: source -> (target -> coefficient), ordered.
  std::vector<std::map<std::size_t, Monomial>> d(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const Term& t : c.differential(s)) d[s].emplace(t.target, t.coefficient);
  }
  std::vector<char> alive(n, 1);

  auto add_term = [&](std::size_t src, std::size_t tgt, const Monomial& m) {
    auto [it, inserted] = d[src].emplace(tgt, m);
    if (!inserted) d[src].erase(it);  // equal monomials cancel over F_2
  };

  while (true) {
    std::size_t x = n, y = n;
    for (std::size_t s = 0; s < n && x == n; ++s) {
      if (!alive[s]) continue;
      for (const auto& [t, m] : d[s]) {
        if (m.is_unit()) {
          x = s;
          y = t;
          break;
        }
      }
    }
    if (x == n) break;
    // Cancel x -> y: d'(w) = d(w) + <dw, y> * (dx minus its y-component),
    // then drop x and y.
    std::vector<std::pair<std::size_t, Monomial>> gamma;
    for (const auto& [t, m] : d[x]) {
      if (t != y) gamma.emplace_back(t, m);
    }
    // This is the differential of the quotient by the acyclic subcomplex
    // spanned by x and dx, where y is identified with gamma.
    for (std::size_t w = 0; w < n; ++w) {
      if (!alive[w] || w == x) continue;
      d[w].erase(x);
      auto it = d[w].find(y);
      if (it == d[w].end()) continue;
      const Monomial beta = it->second;
      d[w].erase(it);
      for (const auto& [t, m] : gamma) {
        if (auto prod = beta.times(m)) add_term(w, t, *prod);
      }
    }
    alive[x] = alive[y] = 0;
    d[x].clear();
    d[y].clear();
  }

  std::vector<std::size_t> new_index(n, n);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) {
      new_index[i] = gens.size();
      gens.push_back(c.generator(i));
    }
  }
  std::vector<std::vector<Term>> diff(gens.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    for (const auto& [t, m] : d[s]) {
      if (!alive[t]) throw InternalError("reduce: differential into a cancelled generator");
      diff[new_index[s]].push_back({m, new_index[t]});
    }
  }
  return Complex(std::move(gens), std::move(diff));
}

Complex tensor(const Complex& c1, const Complex& c2) {
  const std::size_t n2 = c2.size();
  std::vector<Generator> gens;
  gens.reserve(c1.size() * n2);
  for (const auto& x : c1.generators()) {
    for (const auto& y : c2.generators()) {
      gens.push_back({x.name + "|" + y.name, x.grading + y.grading});
    }
  }
  std::vector<std::vector<Term>> diff(gens.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      auto& terms = diff[i * n2 + j];
      for (const Term& t : c1.differential(i)) terms.push_back({t.coefficient, t.target * n2 + j});
      for (const Term& t : c2.differential(j)) terms.push_back({t.coefficient, i * n2 + t.target});
    }
  }
  return Complex(std::move(gens), std::move(diff));
}

Complex dual(const Complex& c) {
  std::vector<Generator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({g.name + "*", -g.grading});
  std::vector<std::vector<Term>> diff(c.size());
  for (std::size_t y = 0; y < c.size(); ++y) {
    for (const Term& t : c.differential(y)) diff[t.target].push_back({t.coefficient, y});
  }
  return Complex(std::move(gens), std::move(diff));
}

Complex apply_shift(const Complex& c, int shift_u, int shift_v) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.grading = g.grading + Bigrading{shift_u, shift_v};
  std::vector<std::vector<Term>> diff(c.size());
  for (std::size_t s = 0; s < c.size(); ++s) diff[s] = c.differential(s);
  return Complex(std::move(gens), std::move(diff));
}

bool same_up_to_renaming(const Complex& a, const Complex& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.generator(i).grading == b.generator(i).grading)) return false;
    if (a.differential(i) != b.differential(i)) return false;
  }
  return true;
}

}  // namespace knotlike
