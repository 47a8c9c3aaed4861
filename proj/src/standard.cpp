#include "knotlike/standard.hpp"

#include <charconv>
#include <stdexcept>

#include "knotlike/error.hpp"

namespace knotlike {

void check_params(const Params& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw Error("parameter " + std::to_string(i + 1) + " is zero");
  }
}

namespace {

// Generators x_0..x_n with x_0 at (0, anchor_v) and the arrows of p.
Complex build_chain(const Params& p, int anchor_v) {
  check_params(p);
  const std::size_t n = p.size();
  std::vector<Generator> gens;
  gens.reserve(n + 1);
  gens.push_back({"x0", {0, anchor_v}});
  std::vector<std::vector<Term>> diff(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const int b = p[i - 1];
    const int len = b > 0 ? b : -b;
    const bool u_arrow = i % 2 == 1;
    const Monomial m = u_arrow ? Monomial::u(len) : Monomial::v(len);
    const Bigrading prev = gens.back().grading;
    Bigrading next;
    if (b > 0) {
      // d x_i = m x_{i-1}
      next = prev + m.grading() - kDifferentialDegree;
      diff[i].push_back({m, i - 1});
    } else {
      // d x_{i-1} = m x_i
      next = prev + kDifferentialDegree - m.grading();
      diff[i - 1].push_back({m, i});
    }
    gens.push_back({"x" + std::to_string(i), next});
  }
  return Complex(std::move(gens), std::move(diff));
}

int sgn(int a) { return (a > 0) - (a < 0); }

}  // namespace

Complex build_standard(const Params& p) {
  if (p.size() % 2 != 0) throw Error("standard complexes need an even number of parameters");
  const Complex unanchored = build_chain(p, 0);
  const int top_v = unanchored.generator(p.size()).grading.gr_v;
  return build_chain(p, -top_v);
}

Complex build_truncated(const Params& p, int anchor_v) { return build_chain(p, anchor_v); }

std::strong_ordering bang_cmp(int a, int b) {
  // 1/a < 1/b; compare signs first, then magnitudes within a sign.
  const int sa = sgn(a), sb = sgn(b);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: 1/a < 1/b iff b < a.
  return b <=> a;
}

std::strong_ordering lex_cmp(const Params& p, const Params& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < p.size() ? p[i] : 0;
    const int b = i < q.size() ? q[i] : 0;
    if (auto c = bang_cmp(a, b); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::map<int, int> phi(const Params& p) {
  std::map<int, int> out;
  for (std::size_t i = 0; i < p.size(); i += 2) {
    const int a = p[i];
    out[a > 0 ? a : -a] += sgn(a);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int P_of(const Params& p) {
  int formula = 0;
  for (const auto& [j, count] : phi(p)) formula -= 2 * j * count;
  for (int a : p) formula += sgn(a);
  if (p.size() % 2 == 0) {
    const int graded = build_standard(p).generator(p.size()).grading.gr_u;
    if (graded != formula) {
      throw InternalError("P formula " + std::to_string(formula) + " disagrees with gr_U(x_n) = " +
                          std::to_string(graded));
    }
  }
  return formula;
}

int tau_of(const Params& p) { return -P_of(p) / 2; }

int N_of(const Params& p) {
  const auto f = phi(p);
  return f.empty() ? 0 : f.rbegin()->first;
}

double gc_lower(const Params& p) { return N_of(p) / 2.0; }

int uc_lower(const Params& p) { return N_of(p); }

Params shift(const Params& p, int m, ShiftMode mode) {
  if (m < 1) throw Error("shift index must be positive");
  Params out = p;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool u_arrow = i % 2 == 0;
    if (mode == ShiftMode::UOnly && !u_arrow) continue;
    if (mode == ShiftMode::VOnly && u_arrow) continue;
    if (out[i] >= m) {
      ++out[i];
    } else if (out[i] <= -m) {
      --out[i];
    }
  }
  return out;
}

bool is_symmetric(const Params& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != -p[n - 1 - i]) return false;
  }
  return true;
}

Params negate(const Params& p) {
  Params out = p;
  for (int& a : out) a = -a;
  return out;
}

Params parse_params(std::string_view text) {
  Params out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  std::size_t offset = 0;
  if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') || (text.front() == '(' && text.back() == ')'))) {
    text = text.substr(1, text.size() - 2);
    offset = 1;
  }
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    int value = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      throw ParseError("expected a signed integer parameter", 1, static_cast<int>(pos + offset) + 1);
    }
    if (value == 0) throw ParseError("parameters must be nonzero", 1, static_cast<int>(pos + offset) + 1);
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_params(const Params& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace knotlike
