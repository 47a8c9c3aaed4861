#pragma once

// Simplified bases for C/U and C/V, tower extraction and knot-like checks.

#include <cstddef>
#include <string>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/f2.hpp"

namespace knotlike {

/// ModU works in C/U with the V-differential (V-towers); ModV works in C/V
/// with the U-differential (U-towers).
enum class Side { ModU, ModV };

const char* to_string(Side side);

/// Change of basis over F[V] (resp. F[U]) of a bigraded free module. Because
/// coefficients between homogeneous elements are grading-forced, the change is
/// an F_2 matrix: row i expresses new basis element i as a sum of (implicit
/// monomial multiples of) old generators. New element i keeps the grading of
/// old generator i.
struct BasisChange {
  std::vector<f2::BitVector> forward;
  /// forward^{-1}: row j expresses old generator j in the new basis.
  std::vector<f2::BitVector> inverse;

  std::vector<std::size_t> support(std::size_t new_element) const;
};

struct TorsionPair {
  std::size_t source = 0;  ///< y_i, index of a new basis element
  std::size_t target = 0;  ///< z_i
  int eta = 0;             ///< d y_i = (V or U)^eta z_i
};

struct TowerReport {
  Side side = Side::ModU;
  std::size_t tower = 0;  ///< index of the tower basis element
  Bigrading tower_top;
  std::vector<TorsionPair> torsion_pairs;
  BasisChange basis;

  /// Generators in the support of the tower element.
  std::vector<std::size_t> tower_support() const { return basis.support(tower); }
  int max_eta() const;
};

/// Result of the simplification before the single-tower requirement is
/// imposed. `free_elements` are the unpaired basis elements.
struct Simplification {
  Side side = Side::ModU;
  std::vector<std::size_t> free_elements;
  std::vector<TorsionPair> torsion_pairs;
  BasisChange basis;
};

/// Smith-style reduction over the PID F[V] (ModU) or F[U] (ModV). Throws
/// NotReducedError on unit entries.
Simplification simplify_all(const Complex& c, Side side);

/// As simplify_all, but throws MultipleTowersError unless exactly one
/// nontorsion tower is present.
TowerReport simplify(const Complex& c, Side side);

struct KnotLikeReport {
  bool is_knot_like = false;
  int shift_u = 0;  ///< global shift that normalizes the towers
  int shift_v = 0;
  std::vector<std::string> reasons;
};

/// With allow_shift, reports the unique global grading shift that puts the
/// V-tower of C/U in gr_U = 0 and the U-tower of C/V in gr_V = 0; otherwise
/// requires the towers to already sit there. Never throws for violations.
KnotLikeReport check_knot_like(const Complex& c, bool allow_shift);

/// Reduces, then applies the normalizing shift. Throws NotKnotLikeError.
Complex normalize(const Complex& c);

struct TorsionBounds {
  int m_u = 0;  ///< largest U-torsion order (bounds |a_i|, i odd)
  int m_v = 0;  ///< largest V-torsion order (bounds |a_i|, i even)
};

TorsionBounds torsion_bounds(const Complex& c);

}  // namespace knotlike
