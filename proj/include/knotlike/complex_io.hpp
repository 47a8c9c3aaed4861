#pragma once

// Line-oriented complex files:
//
//   # comment
//   gen a 0 0
//   gen b -1 -1
//   d b = U^1 a + V^2 c
//   d c = 0
//
// Exponents are positive; the unit coefficient is written 1. Omitted d lines
// mean a zero differential.

#include <string>
#include <string_view>

#include "knotlike/algebra.hpp"

namespace knotlike {

/// Syntax only; throws ParseError with line and column.
RawComplex parse_raw_complex(std::string_view text);

/// Parses and validates.
Complex parse_complex_file(std::string_view text);

/// gen lines in declaration order, then one d line per generator with a
/// nonzero differential, terms in target order.
std::string serialize_complex(const Complex& c);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace knotlike
