#include "knotlike/localmaps.hpp"

#include <map>

#include "knotlike/error.hpp"
#include "knotlike/f2.hpp"

namespace knotlike {

std::size_t LocalMapWitness::num_terms() const {
  std::size_t n = 0;
  for (const auto& terms : assignment) n += terms.size();
  return n;
}

Relaxation short_relaxation(std::size_t length) { return length % 2 == 0 ? Relaxation::KeepV : Relaxation::KeepU; }

namespace {

void require_knot_like(const Complex& c, const char* role) {
  const KnotLikeReport report = check_knot_like(c, false);
  if (report.is_knot_like) return;
  std::string why;
  for (const auto& r : report.reasons) why += (why.empty() ? "" : "; ") + r;
  throw NotKnotLikeError(std::string(role) + " is not a normalized knot-like complex: " + why);
}

struct Slot {
  std::size_t source;
  std::size_t target;
  Monomial coefficient;
};

std::vector<Slot> enumerate_slots(const Complex& s, const Complex& c, int v_shift) {
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Bigrading image = s.generator(i).grading + Bigrading{0, v_shift};
    for (std::size_t g = 0; g < c.size(); ++g) {
      if (auto m = monomial_between(c.generator(g).grading, image)) slots.push_back({i, g, *m});
    }
  }
  return slots;
}

}  // namespace

LocalMapTarget::LocalMapTarget(Complex c) : c_(std::move(c)) {
  require_knot_like(c_, "target");
  mod_u_ = simplify(c_, Side::ModU);
}

std::size_t LocalMapTarget::count_unknowns(const Complex& s) const {
  const TowerReport src = simplify(s, Side::ModU);
  return enumerate_slots(s, c_, tower_v() - src.tower_top.gr_v).size();
}

std::optional<LocalMapWitness> LocalMapTarget::from(const Complex& s) const {
  require_knot_like(s, "source");
  const TowerReport src = simplify(s, Side::ModU);
  std::vector<std::size_t> tower_sources;
  for (std::size_t i : src.tower_support()) {
    if (s.generator(i).grading == src.tower_top) tower_sources.push_back(i);
  }
  return solve(s, tower_v() - src.tower_top.gr_v, Relaxation::None, tower_sources);
}

std::optional<LocalMapWitness> LocalMapTarget::short_from(const Params& p) const {
  const Complex s = build_truncated(p, tower_v());
  return solve(s, 0, short_relaxation(p.size()), {0});
}

std::optional<LocalMapWitness> LocalMapTarget::solve(const Complex& s, int v_shift, Relaxation relax,
                                                     const std::vector<std::size_t>& tower_sources) const {
  const std::vector<Slot> slots = enumerate_slots(s, c_, v_shift);
  // Variables of each source, in slot order.
  std::vector<std::vector<std::size_t>> by_source(s.size());
  for (std::size_t k = 0; k < slots.size(); ++k) by_source[slots[k].source].push_back(k);

  f2::AffineSystem system(slots.size());
  const std::size_t last = s.size() - 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // (d f + f d)(x_i), one equation per target generator. The monomial of a
    // fixed target is grading-forced, so its kind is recorded once.
    std::map<std::size_t, std::pair<Monomial::Kind, std::vector<std::size_t>>> rows;
    auto contribute = [&](std::size_t target, const Monomial& m, std::size_t var) {
      auto& row = rows[target];
      row.first = m.kind();
      row.second.push_back(var);
    };
    for (std::size_t var : by_source[i]) {
      for (const Term& t : c_.differential(slots[var].target)) {
        if (auto prod = slots[var].coefficient.times(t.coefficient)) contribute(t.target, *prod, var);
      }
    }
    for (const Term& t : s.differential(i)) {
      for (std::size_t var : by_source[t.target]) {
        if (auto prod = t.coefficient.times(slots[var].coefficient)) contribute(slots[var].target, *prod, var);
      }
    }
    const bool relaxed = relax != Relaxation::None && i == last;
    for (const auto& [target, row] : rows) {
      if (relaxed) {
        const Monomial::Kind keep = relax == Relaxation::KeepV ? Monomial::Kind::V : Monomial::Kind::U;
        if (row.first != keep) continue;
      }
      system.add_equation(row.second, false);
    }
  }

  // The image of the tower generator must hit the tower of C/U with
  // coefficient one in the simplified basis. Only unit slots into the exact
  // tower grading can contribute.
  std::vector<std::size_t> tower_vars;
  const std::size_t tower_c = mod_u_.tower;
  for (std::size_t i : tower_sources) {
    for (std::size_t var : by_source[i]) {
      const Slot& slot = slots[var];
      if (!slot.coefficient.is_unit()) continue;
      if (!(c_.generator(slot.target).grading == mod_u_.tower_top)) continue;
      if (mod_u_.basis.inverse[slot.target].get(tower_c)) tower_vars.push_back(var);
    }
  }
  system.add_equation(tower_vars, true);

  const auto solution = system.solve();
  if (!solution) return std::nullopt;
  LocalMapWitness w;
  w.v_shift = v_shift;
  w.assignment.resize(s.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (solution->get(k)) w.assignment[slots[k].source].push_back({slots[k].coefficient, slots[k].target});
  }
  return w;
}

std::optional<LocalMapWitness> exists_local_map(const Complex& s, const Complex& c) {
  return LocalMapTarget(c).from(s);
}

std::optional<LocalMapWitness> exists_short_local_map(const Params& p, const Complex& c) {
  return LocalMapTarget(c).short_from(p);
}

}  // namespace knotlike
