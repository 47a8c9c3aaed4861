#include "knotlike/homology.hpp"

#include <algorithm>
#include <limits>

#include "knotlike/error.hpp"

namespace knotlike {

const char* to_string(Side side) { return side == Side::ModU ? "ModU" : "ModV"; }

std::vector<std::size_t> BasisChange::support(std::size_t new_element) const {
  std::vector<std::size_t> out;
  const auto& row = forward[new_element];
  for (std::size_t b = row.first_set(); b < row.size(); b = row.next_set(b + 1)) out.push_back(b);
  return out;
}

int TowerReport::max_eta() const {
  int m = 0;
  for (const auto& p : torsion_pairs) m = std::max(m, p.eta);
  return m;
}

namespace {

// Differential of C/U (resp. C/V) as an F_2 matrix with implicit powers.
class SideMatrix {
 public:
  SideMatrix(const Complex& c, Side side) : c_(c), side_(side), n_(c.size()) {
    rows_.assign(n_, f2::BitVector(n_));
    basis_.forward.assign(n_, f2::BitVector(n_));
    basis_.inverse.assign(n_, f2::BitVector(n_));
    const Monomial::Kind kind = side == Side::ModU ? Monomial::Kind::V : Monomial::Kind::U;
    for (std::size_t s = 0; s < n_; ++s) {
      basis_.forward[s].set(s);
      basis_.inverse[s].set(s);
      for (const Term& t : c.differential(s)) {
        if (t.coefficient.is_unit()) {
          throw NotReducedError("complex has a unit differential entry from " + c.generator(s).name);
        }
        if (t.coefficient.kind() == kind) rows_[t.target].set(s);
      }
    }
  }

  std::size_t size() const { return n_; }
  bool entry(std::size_t target, std::size_t source) const { return rows_[target].get(source); }

  int power(std::size_t i) const {
    const Bigrading& g = c_.generator(i).grading;
    return side_ == Side::ModU ? g.gr_v : g.gr_u;
  }
  // Exponent of the entry source -> target.
  int exponent(std::size_t source, std::size_t target) const { return (power(target) - power(source) + 1) / 2; }

  // Basis change e_p <- e_p + c e_q, c the grading-forced monomial.
  void add(std::size_t p, std::size_t q) {
    for (std::size_t t = 0; t < n_; ++t) {
      if (rows_[t].get(q)) rows_[t].flip(p);
    }
    rows_[q] ^= rows_[p];
    basis_.forward[p] ^= basis_.forward[q];
    for (std::size_t j = 0; j < n_; ++j) {
      if (basis_.inverse[j].get(p)) basis_.inverse[j].flip(q);
    }
  }

  bool row_empty(std::size_t t) const { return rows_[t].none(); }
  bool column_empty(std::size_t s) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (rows_[t].get(s)) return false;
    }
    return true;
  }

  BasisChange take_basis() { return std::move(basis_); }

 private:
  const Complex& c_;
  Side side_;
  std::size_t n_;
  std::vector<f2::BitVector> rows_;  // rows_[target] = sources hitting target
  BasisChange basis_;
};

}  // namespace

Simplification simplify_all(const Complex& c, Side side) {
  SideMatrix m(c, side);
  const std::size_t n = m.size();
  std::vector<char> active(n, 1);
  Simplification out;
  out.side = side;

  while (true) {
    // Entry with the smallest exponent; ties broken by (source, target).
    std::size_t best_s = n, best_t = n;
    int best_k = std::numeric_limits<int>::max();
    for (std::size_t s = 0; s < n; ++s) {
      if (!active[s]) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (!active[t] || !m.entry(t, s)) continue;
        const int k = m.exponent(s, t);
        if (k < best_k) {
          best_k = k;
          best_s = s;
          best_t = t;
        }
      }
    }
    if (best_s == n) break;
    const std::size_t s = best_s, t = best_t;
    for (std::size_t other = 0; other < n; ++other) {
      if (other != t && m.entry(other, s)) m.add(t, other);
    }
    for (std::size_t other = 0; other < n; ++other) {
      if (other != s && m.entry(t, other)) m.add(other, s);
    }
    if (!m.row_empty(s) || !m.column_empty(t)) {
      throw InternalError("simplify: cancelled pair is not isolated");
    }
    active[s] = active[t] = 0;
    out.torsion_pairs.push_back({s, t, best_k});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) out.free_elements.push_back(i);
  }
  out.basis = m.take_basis();
  return out;
}

TowerReport simplify(const Complex& c, Side side) {
  Simplification s = simplify_all(c, side);
  if (s.free_elements.size() != 1) throw MultipleTowersError(to_string(side), s.free_elements.size());
  TowerReport r;
  r.side = side;
  r.tower = s.free_elements.front();
  r.tower_top = c.generator(r.tower).grading;
  r.torsion_pairs = std::move(s.torsion_pairs);
  r.basis = std::move(s.basis);
  return r;
}

KnotLikeReport check_knot_like(const Complex& c, bool allow_shift) {
  KnotLikeReport report;
  if (!c.is_reduced()) {
    report.reasons.push_back("NotReduced");
    return report;
  }
  const Simplification mod_u = simplify_all(c, Side::ModU);
  const Simplification mod_v = simplify_all(c, Side::ModV);
  if (mod_u.free_elements.size() != 1) {
    report.reasons.push_back("MultipleTowers(" + std::to_string(mod_u.free_elements.size()) + ") in ModU");
  }
  if (mod_v.free_elements.size() != 1) {
    report.reasons.push_back("MultipleTowers(" + std::to_string(mod_v.free_elements.size()) + ") in ModV");
  }
  if (!report.reasons.empty()) return report;

  const int tower_u = c.generator(mod_u.free_elements.front()).grading.gr_u;
  const int tower_v = c.generator(mod_v.free_elements.front()).grading.gr_v;
  if (allow_shift) {
    report.shift_u = -tower_u;
    report.shift_v = -tower_v;
  } else {
    if (tower_u != 0) {
      report.reasons.push_back("V-tower of C/U lies in gr_U = " + std::to_string(tower_u));
    }
    if (tower_v != 0) {
      report.reasons.push_back("U-tower of C/V lies in gr_V = " + std::to_string(tower_v));
    }
  }
  report.is_knot_like = report.reasons.empty();
  return report;
}

Complex normalize(const Complex& c) {
  Complex r = c.is_reduced() ? c : reduce(c);
  const KnotLikeReport report = check_knot_like(r, true);
  if (!report.is_knot_like) {
    std::string why;
    for (const auto& reason : report.reasons) why += (why.empty() ? "" : "; ") + reason;
    throw NotKnotLikeError("not knot-like: " + why);
  }
  if (report.shift_u == 0 && report.shift_v == 0) return r;
  return apply_shift(r, report.shift_u, report.shift_v);
}

TorsionBounds torsion_bounds(const Complex& c) {
  return {simplify(c, Side::ModV).max_eta(), simplify(c, Side::ModU).max_eta()};
}

}  // namespace knotlike
