#pragma once

// Helpers shared by the test programs.

#include <random>
#include <string>
#include <vector>

#include "knotlike/complex_io.hpp"
#include "knotlike/standard.hpp"

namespace knotlike::testing {

inline std::string fixture_path(const std::string& name) { return std::string(KNOTLIKE_FIXTURES) + "/" + name; }

inline Complex fixture(const std::string& name) { return parse_complex_file(read_text_file(fixture_path(name))); }

/// Random even-length parameters with entries in {+-1, ..., +-max_abs}.
inline Params random_params(std::mt19937& rng, std::size_t max_len, int max_abs) {
  std::uniform_int_distribution<std::size_t> half(0, max_len / 2);
  std::uniform_int_distribution<int> mag(1, max_abs);
  std::bernoulli_distribution neg(0.5);
  Params p(2 * half(rng));
  for (int& a : p) a = neg(rng) ? -mag(rng) : mag(rng);
  return p;
}

/// Every even-length parameter list of length <= max_len over {+-1..+-max_abs}.
inline std::vector<Params> all_params(std::size_t max_len, int max_abs) {
  std::vector<int> alphabet;
  for (int a = 1; a <= max_abs; ++a) {
    alphabet.push_back(a);
    alphabet.push_back(-a);
  }
  std::vector<Params> out{{}};
  std::vector<Params> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Params> next;
    for (const Params& p : layer) {
      for (int a : alphabet) {
        Params q = p;
        q.push_back(a);
        next.push_back(q);
      }
    }
    layer = next;
    if (len % 2 == 0) out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace knotlike::testing
