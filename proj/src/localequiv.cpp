#include "knotlike/localequiv.hpp"

#include "knotlike/error.hpp"
#include "knotlike/homology.hpp"

namespace knotlike {

RepResult standard_rep(const Complex& c) {
  const LocalMapTarget target(c);
  const TorsionBounds bounds = torsion_bounds(c);
  const std::size_t cap = 4 * c.size() + 4;

  RepResult out;
  Params prefix;
  while (true) {
    const std::size_t k = prefix.size();
    if (k > cap) {
      throw LengthCapExceededError("representative prefix longer than " + std::to_string(cap) + ": " +
                                   format_params(prefix));
    }
    const bool u_position = (k + 1) % 2 == 1;
    const int m = u_position ? bounds.m_u : bounds.m_v;
    PositionTrace pos;
    pos.position = k + 1;

    auto try_short = [&](int b) {
      Params candidate = prefix;
      candidate.push_back(b);
      const bool ok = target.short_from(candidate).has_value();
      pos.tests.push_back({b, ok});
      return ok;
    };

    std::optional<int> chosen;
    for (int b = 1; b <= m && !chosen; ++b) {
      if (try_short(b)) chosen = b;
    }
    if (!chosen && k % 2 == 0) {
      const bool closes = target.from(build_standard(prefix)).has_value();
      pos.tests.push_back({0, closes});
      if (closes) {
        pos.chosen = 0;
        out.trace.push_back(std::move(pos));
        break;
      }
    }
    for (int b = -m; b <= -1 && !chosen; ++b) {
      if (try_short(b)) chosen = b;
    }
    if (!chosen) {
      throw InternalError("no admissible parameter at position " + std::to_string(k + 1) + " after " +
                          format_params(prefix));
    }
    pos.chosen = *chosen;
    out.trace.push_back(std::move(pos));
    prefix.push_back(*chosen);
  }

  const Complex s = build_standard(prefix);
  auto to = target.from(s);
  auto from = LocalMapTarget(s).from(c);
  if (!to || !from || !verify_local_map(s, c, *to) || !verify_local_map(c, s, *from)) {
    throw VerificationFailedError("C(" + format_params(prefix) + ") is not locally equivalent to the input");
  }
  out.params = std::move(prefix);
  out.to_complex = std::move(*to);
  out.from_complex = std::move(*from);
  return out;
}

const char* to_string(Comparison cmp) {
  switch (cmp) {
    case Comparison::Less: return "<";
    case Comparison::Equivalent: return "~";
    case Comparison::Greater: return ">";
  }
  return "?";
}

Comparison compare(const Complex& c1, const Complex& c2) {
  const auto order = lex_cmp(standard_rep(c1).params, standard_rep(c2).params);
  if (order < 0) return Comparison::Less;
  if (order > 0) return Comparison::Greater;
  return Comparison::Equivalent;
}

Comparison compare_by_maps(const Complex& c1, const Complex& c2) {
  const bool le = exists_local_map(c1, c2).has_value();
  const bool ge = exists_local_map(c2, c1).has_value();
  if (le && ge) return Comparison::Equivalent;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  throw InternalError("neither complex admits a local map to the other");
}

}  // namespace knotlike
