#pragma once

// Standard and truncated complexes and their parameter-level invariants.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotlike/algebra.hpp"

namespace knotlike {

/// Nonzero parameters (a_1, ..., a_n). Odd positions are U-arrows, even
/// positions V-arrows; a positive entry points back toward x_0. A closed
/// standard complex has even length; an odd-length prefix is semistandard.
using Params = std::vector<int>;

/// Throws Error on a zero entry.
void check_params(const Params& p);

/// C(a_1, ..., a_n) with gradings fixed by gr_U(x_0) = 0 and gr_V(x_n) = 0.
/// Requires even length.
Complex build_standard(const Params& p);

/// Truncated (possibly semistandard) complex on x_0..x_n anchored at
/// gr(x_0) = (0, anchor_v).
Complex build_truncated(const Params& p, int anchor_v = 0);

/// Order of the !-integers: -1 < -2 < -3 < ... < 0 < ... < 3 < 2 < 1,
/// i.e. comparison of 1/a and 1/b with 1/0 read as 0.
std::strong_ordering bang_cmp(int a, int b);

/// Lexicographic comparison under bang_cmp after zero padding.
std::strong_ordering lex_cmp(const Params& p, const Params& q);

/// phi_j: signed count of odd-position entries equal to +-j. Zero values are
/// omitted.
std::map<int, int> phi(const Params& p);

/// Closed formula -2 sum_j j phi_j + sum sgn a_i, cross-checked against the
/// U-grading of the last generator of build_standard(p).
int P_of(const Params& p);

/// -P/2.
int tau_of(const Params& p);

/// Largest j with phi_j != 0, or 0.
int N_of(const Params& p);
double gc_lower(const Params& p);
int uc_lower(const Params& p);

enum class ShiftMode { Both, UOnly, VOnly };

/// Lengthens every arrow of length >= m by one (restricted to U- or V-arrows
/// in the one-sided modes). Requires m >= 1.
Params shift(const Params& p, int m, ShiftMode mode = ShiftMode::Both);

/// a_i = -a_{n+1-i} for all i.
bool is_symmetric(const Params& p);

/// Entrywise negation: parameters of the dual complex.
Params negate(const Params& p);

/// "1,-2,2,-1", optionally wrapped in [] or (); the empty string is the
/// trivial class. format_params writes the bare comma list.
Params parse_params(std::string_view text);
std::string format_params(const Params& p);

}  // namespace knotlike
