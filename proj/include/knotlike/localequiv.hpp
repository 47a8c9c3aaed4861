#pragma once

// Standard representatives and the total order on knot-like complexes.

#include <optional>
#include <vector>

#include "knotlike/algebra.hpp"
#include "knotlike/localmaps.hpp"
#include "knotlike/standard.hpp"

namespace knotlike {

struct CandidateTest {
  int candidate = 0;  ///< 0 stands for the closing full local map test
  bool success = false;
};

struct PositionTrace {
  std::size_t position = 0;  ///< 1-based index of the parameter being chosen
  std::vector<CandidateTest> tests;
  /// Chosen parameter; 0 when the prefix closed up.
  int chosen = 0;
};

struct RepResult {
  Params params;
  LocalMapWitness to_complex;    ///< C(params) -> C
  LocalMapWitness from_complex;  ///< C -> C(params)
  std::vector<PositionTrace> trace;
};

/// Greedy extraction of a_1, a_2, ... for a reduced, normalized knot-like
/// complex, followed by a two-sided local map check.
RepResult standard_rep(const Complex& c);

enum class Comparison { Less, Equivalent, Greater };

const char* to_string(Comparison cmp);

/// Lexicographic comparison of the standard representatives.
Comparison compare(const Complex& c1, const Complex& c2);

/// The same relation read off directly from local maps in both directions.
Comparison compare_by_maps(const Complex& c1, const Complex& c2);

}  // namespace knotlike
