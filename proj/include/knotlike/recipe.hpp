#pragma once

// Knot recipes: sums of torus knots, cables, thin knots and literal
// standard complexes, e.g. "Cable(D;3,4) - T(3,4)".

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "knotlike/alexander.hpp"
#include "knotlike/localequiv.hpp"
#include "knotlike/standard.hpp"

namespace knotlike {

struct KnotAtom {
  enum class Kind { Torus, Cable, Thin, Std, D };

  Kind kind = Kind::D;
  int p = 0;  ///< Torus and Cable
  int q = 0;
  int t = 0;      ///< Thin
  Params params;  ///< Std
  std::shared_ptr<const KnotAtom> inner;  ///< Cable
};

struct KnotTerm {
  bool negated = false;
  int multiplier = 1;
  KnotAtom atom;
};

struct KnotExpr {
  std::vector<KnotTerm> terms;
};

/// expr := term (("+"|"-") term)*, term := [UINT "*"] atom,
/// atom := T(p,q) | Cable(atom;p,q) | Thin(int) | Std(intlist) | D.
/// A leading sign on the first term is also accepted. Throws ParseError
/// with the 1-based column.
KnotExpr parse_knot_expr(std::string_view text);

std::string to_string(const KnotAtom& atom);
std::string to_string(const KnotExpr& expr);

/// Alexander polynomial of a T, Cable or D atom (D uses T(2,3)).
LaurentPoly atom_delta(const KnotAtom& atom);

/// Standard parameters of one atom.
Params atom_params(const KnotAtom& atom);

/// One parameter list per summand after expanding multipliers and applying
/// signs.
std::vector<Params> summand_params(const KnotExpr& expr);

/// Tensor product of all summands, as a single complex.
Complex materialize(const KnotExpr& expr);

/// Representative of the sum. Summands are added one at a time, replacing
/// the running tensor product by its standard representative after each
/// step.
RepResult eval_recipe(const KnotExpr& expr);
RepResult eval_recipe(std::string_view text);

}  // namespace knotlike
