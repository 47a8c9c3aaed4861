#pragma once

// Existence of local and short local maps, decided by F_2 elimination, plus
// an exhaustive oracle for small instances.

#include <cstddef>
#include <optional>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/homology.hpp"
#include "knotlike/standard.hpp"

namespace knotlike {

/// A bigraded module map S -> C. Every term m * g of assignment[s] satisfies
/// gr(m) + gr(g) = gr(s) + (0, v_shift).
struct LocalMapWitness {
  int v_shift = 0;
  std::vector<std::vector<Term>> assignment;

  std::size_t num_terms() const;
};

/// Which part of the chain condition is imposed at the last generator of a
/// short map. Even-length domains keep the d_V part, odd-length ones the d_U
/// part.
enum class Relaxation { None, KeepV, KeepU };

Relaxation short_relaxation(std::size_t length);

/// A knot-like target with its mod-U simplification cached, so that many
/// sources can be tested against it.
class LocalMapTarget {
 public:
  /// Requires `c` reduced and knot-like with towers at grading zero; throws
  /// NotKnotLikeError otherwise.
  explicit LocalMapTarget(Complex c);

  const Complex& complex() const { return c_; }
  /// gr_V of the top of the V-tower of C/U.
  int tower_v() const { return mod_u_.tower_top.gr_v; }

  /// A local map S -> C, if one exists. S must satisfy the same conditions
  /// as the target.
  std::optional<LocalMapWitness> from(const Complex& s) const;

  /// A short local map from the truncated complex on `p`, anchored so that
  /// gr_V(x_0) is the tower top of C (hence v_shift = 0).
  std::optional<LocalMapWitness> short_from(const Params& p) const;

  /// Number of unknown bits of the system for S -> C.
  std::size_t count_unknowns(const Complex& s) const;

 private:
  std::optional<LocalMapWitness> solve(const Complex& s, int v_shift, Relaxation relax,
                                       const std::vector<std::size_t>& tower_sources) const;

  Complex c_;
  TowerReport mod_u_;
};

std::optional<LocalMapWitness> exists_local_map(const Complex& s, const Complex& c);
std::optional<LocalMapWitness> exists_short_local_map(const Params& p, const Complex& c);

/// Exhaustive search over all assignments, sharing no code with the solver.
/// Throws BudgetExceededError when the number of unknown bits exceeds
/// `budget`.
std::optional<LocalMapWitness> brute_force_local_map(const Complex& s, const Complex& c, std::size_t budget = 24);

/// Same, for short maps from truncated complexes.
std::optional<LocalMapWitness> brute_force_short_local_map(const Params& p, const Complex& c,
                                                           std::size_t budget = 24);

/// Unknown bits as counted by the oracle.
std::size_t oracle_unknowns(const Complex& s, const Complex& c);

/// Independent check of a witness: gradings, chain condition, and that the
/// image of the V-tower generator of S/U is V-nontorsion in C/U.
bool verify_local_map(const Complex& s, const Complex& c, const LocalMapWitness& w);
bool verify_short_local_map(const Params& p, const Complex& c, const LocalMapWitness& w);

}  // namespace knotlike
