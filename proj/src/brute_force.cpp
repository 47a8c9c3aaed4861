// Exhaustive oracle for local maps. Written against the definitions only:
// towers come from the homology of C/U in degrees far below every generator
// rather than from the simplified bases used by the solver.

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "knotlike/error.hpp"
#include "knotlike/f2.hpp"
#include "knotlike/localmaps.hpp"

namespace knotlike {

namespace {

int parity(int v) { return ((v % 2) + 2) % 2; }

// Column of V-entries of d(g) as a vector over generators of c.
f2::BitVector v_image(const Complex& c, std::size_t g) {
  f2::BitVector out(c.size());
  for (const Term& t : c.differential(g)) {
    if (t.coefficient.kind() == Monomial::Kind::V) out.flip(t.target);
  }
  return out;
}

struct DeepTower {
  int u = 0;
  int v_parity = 0;
  int v_top = 0;
  f2::BitVector cycle;            // generator of the tower at the top grading
  f2::EchelonBasis boundaries{0};  // deep boundaries in the tower's class

  bool in_class(const Generator& g) const { return g.grading.gr_u == u && parity(g.grading.gr_v) == v_parity; }
};

// Deep-degree homology of C/U in the class (u, parity), as cycles and
// boundaries of support vectors.
DeepTower find_tower(const Complex& c) {
  std::set<std::pair<int, int>> classes;
  for (const auto& g : c.generators()) classes.insert({g.grading.gr_u, parity(g.grading.gr_v)});

  std::vector<DeepTower> towers;
  for (const auto& [u, par] : classes) {
    DeepTower t;
    t.u = u;
    t.v_parity = par;
    t.boundaries = f2::EchelonBasis(c.size());
    for (std::size_t y = 0; y < c.size(); ++y) {
      const Bigrading gy = c.generator(y).grading;
      if (gy.gr_u == u + 1 && parity(gy.gr_v) != par) t.boundaries.insert(v_image(c, y));
    }
    // Cycles among generators of the class whose gr_V is at least v; the set
    // grows as v decreases, so the first v with a cycle outside the
    // boundaries is the top of the tower.
    std::vector<int> levels;
    for (const auto& g : c.generators()) {
      if (t.in_class(g)) levels.push_back(g.grading.gr_v);
    }
    std::sort(levels.rbegin(), levels.rend());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    bool found = false;
    for (int v : levels) {
      std::vector<std::size_t> cols;
      std::vector<f2::BitVector> images;
      for (std::size_t g = 0; g < c.size(); ++g) {
        if (t.in_class(c.generator(g)) && c.generator(g).grading.gr_v >= v) {
          cols.push_back(g);
          images.push_back(v_image(c, g));
        }
      }
      for (const auto& k : f2::kernel(images, c.size())) {
        f2::BitVector z(c.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
          if (k.get(i)) z.set(cols[i]);
        }
        if (!t.boundaries.contains(z)) {
          t.v_top = v;
          t.cycle = z;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) towers.push_back(std::move(t));
  }
  if (towers.size() != 1) throw NotKnotLikeError("C/U has " + std::to_string(towers.size()) + " V-towers");
  return std::move(towers.front());
}

struct Instance {
  const Complex& s;
  const Complex& c;
  int v_shift;
  Relaxation relax;
  f2::BitVector tower_cycle;  // over generators of s
  const DeepTower& target;
};

using Key = std::tuple<std::size_t, std::size_t, Monomial::Kind>;

// Nonzero entries of (d f + f d) after relaxation at the last generator.
std::set<Key> residue(const Instance& in, const std::vector<std::vector<Term>>& f) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Monomial::Kind, int>> acc;
  auto hit = [&](std::size_t src, std::size_t tgt, const Monomial& m) {
    auto& e = acc[{src, tgt}];
    e.first = m.kind();
    e.second ^= 1;
  };
  for (std::size_t i = 0; i < in.s.size(); ++i) {
    for (const Term& ft : f[i]) {
      for (const Term& dt : in.c.differential(ft.target)) {
        if (auto m = ft.coefficient.times(dt.coefficient)) hit(i, dt.target, *m);
      }
    }
    for (const Term& dt : in.s.differential(i)) {
      for (const Term& ft : f[dt.target]) {
        if (auto m = dt.coefficient.times(ft.coefficient)) hit(i, ft.target, *m);
      }
    }
  }
  const std::size_t last = in.s.size() - 1;
  std::set<Key> out;
  for (const auto& [key, e] : acc) {
    if (e.second == 0) continue;
    if (key.first == last && in.relax == Relaxation::KeepV && e.first != Monomial::Kind::V) continue;
    if (key.first == last && in.relax == Relaxation::KeepU && e.first != Monomial::Kind::U) continue;
    out.insert({key.first, key.second, e.first});
  }
  return out;
}

// Support of f(z) mod U inside the target's tower class.
f2::BitVector tower_image(const Instance& in, const std::vector<std::vector<Term>>& f) {
  f2::BitVector out(in.c.size());
  for (std::size_t i = 0; i < in.s.size(); ++i) {
    if (!in.tower_cycle.get(i)) continue;
    for (const Term& t : f[i]) {
      if (t.coefficient.kind() == Monomial::Kind::U) continue;
      if (in.target.in_class(in.c.generator(t.target))) out.flip(t.target);
    }
  }
  return out;
}

bool gradings_ok(const Instance& in, const std::vector<std::vector<Term>>& f) {
  if (f.size() != in.s.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Bigrading want = in.s.generator(i).grading + Bigrading{0, in.v_shift};
    for (const Term& t : f[i]) {
      if (t.target >= in.c.size()) return false;
      if (!(t.coefficient.grading() + in.c.generator(t.target).grading == want)) return false;
    }
  }
  return true;
}

bool check(const Instance& in, const std::vector<std::vector<Term>>& f) {
  return gradings_ok(in, f) && residue(in, f).empty() && !in.target.boundaries.contains(tower_image(in, f));
}

struct Unknown {
  std::size_t source;
  Term term;
};

std::vector<Unknown> unknowns(const Complex& s, const Complex& c, int v_shift) {
  std::vector<Unknown> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Bigrading want = s.generator(i).grading + Bigrading{0, v_shift};
    for (std::size_t g = 0; g < c.size(); ++g) {
      const Bigrading gap = want - c.generator(g).grading;
      std::optional<Monomial> m;
      if (gap.gr_u == 0 && gap.gr_v == 0) {
        m = Monomial::unit();
      } else if (gap.gr_v == 0 && gap.gr_u < 0 && gap.gr_u % 2 == 0) {
        m = Monomial::u(-gap.gr_u / 2);
      } else if (gap.gr_u == 0 && gap.gr_v < 0 && gap.gr_v % 2 == 0) {
        m = Monomial::v(-gap.gr_v / 2);
      }
      if (m) out.push_back({i, {*m, g}});
    }
  }
  return out;
}

std::optional<LocalMapWitness> enumerate(const Instance& in, std::size_t budget) {
  const std::vector<Unknown> vars = unknowns(in.s, in.c, in.v_shift);
  if (vars.size() > budget || vars.size() > 40) {
    throw BudgetExceededError(std::to_string(vars.size()) + " unknown bits exceed the budget of " +
                              std::to_string(budget));
  }
  // Residues are linear in f: evaluate each single-term map once, then walk
  // all assignments in Gray-code order.
  std::map<Key, std::size_t> key_index;
  std::vector<std::set<Key>> single(vars.size());
  std::vector<f2::BitVector> tower(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    std::vector<std::vector<Term>> f(in.s.size());
    f[vars[k].source].push_back(vars[k].term);
    single[k] = residue(in, f);
    for (const Key& key : single[k]) key_index.emplace(key, key_index.size());
    tower[k] = tower_image(in, f);
  }
  std::vector<f2::BitVector> res(vars.size(), f2::BitVector(key_index.size()));
  for (std::size_t k = 0; k < vars.size(); ++k) {
    for (const Key& key : single[k]) res[k].flip(key_index.at(key));
  }

  f2::BitVector cur(key_index.size());
  f2::BitVector cur_tower(in.c.size());
  std::uint64_t state = 0;
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      const int bit = __builtin_ctzll(step);
      state ^= std::uint64_t{1} << bit;
      cur ^= res[bit];
      cur_tower ^= tower[bit];
    }
    if (cur.none() && !in.target.boundaries.contains(cur_tower)) {
      LocalMapWitness w;
      w.v_shift = in.v_shift;
      w.assignment.resize(in.s.size());
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if ((state >> k) & 1U) w.assignment[vars[k].source].push_back(vars[k].term);
      }
      for (auto& terms : w.assignment) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.target < b.target; });
      }
      if (!check(in, w.assignment)) throw InternalError("oracle: incremental and direct evaluation disagree");
      return w;
    }
  }
  return std::nullopt;
}

f2::BitVector unit_vector(std::size_t n, std::size_t i) {
  f2::BitVector v(n);
  v.set(i);
  return v;
}

}  // namespace

std::optional<LocalMapWitness> brute_force_local_map(const Complex& s, const Complex& c, std::size_t budget) {
  const DeepTower ts = find_tower(s);
  const DeepTower tc = find_tower(c);
  if (ts.u != tc.u) return std::nullopt;
  const Instance in{s, c, tc.v_top - ts.v_top, Relaxation::None, ts.cycle, tc};
  return enumerate(in, budget);
}

std::optional<LocalMapWitness> brute_force_short_local_map(const Params& p, const Complex& c, std::size_t budget) {
  const DeepTower tc = find_tower(c);
  const Complex s = build_truncated(p, tc.v_top);
  if (tc.u != 0) return std::nullopt;
  const Instance in{s, c, 0, short_relaxation(p.size()), unit_vector(s.size(), 0), tc};
  return enumerate(in, budget);
}

std::size_t oracle_unknowns(const Complex& s, const Complex& c) {
  return unknowns(s, c, find_tower(c).v_top - find_tower(s).v_top).size();
}

bool verify_local_map(const Complex& s, const Complex& c, const LocalMapWitness& w) {
  const DeepTower ts = find_tower(s);
  const DeepTower tc = find_tower(c);
  if (ts.u != tc.u || w.v_shift != tc.v_top - ts.v_top) return false;
  const Instance in{s, c, w.v_shift, Relaxation::None, ts.cycle, tc};
  return check(in, w.assignment);
}

bool verify_short_local_map(const Params& p, const Complex& c, const LocalMapWitness& w) {
  const DeepTower tc = find_tower(c);
  if (tc.u != 0 || w.v_shift != 0) return false;
  const Complex s = build_truncated(p, tc.v_top);
  const Instance in{s, c, 0, short_relaxation(p.size()), unit_vector(s.size(), 0), tc};
  return check(in, w.assignment);
}

}  // namespace knotlike
