#include "knotlike/complex_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "knotlike/error.hpp"

namespace knotlike {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '|' || c == '*' || c == '\'';
}

bool is_ident(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto res = std::from_chars(begin, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || begin == s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

RawComplex parse_raw_complex(std::string_view text) {
  RawComplex raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    auto fail = [&](const std::string& msg, int column) -> void { throw ParseError(msg, line_no, column); };
    auto end_column = [&] { return static_cast<int>(line.size()) + 1; };

    if (toks[0].text == "gen") {
      if (toks.size() < 4) fail("expected 'gen NAME GR_U GR_V'", toks.size() > 1 ? end_column() : toks[0].column);
      if (toks.size() > 4) fail("unexpected token after gen line", toks[4].column);
      if (!is_ident(toks[1].text)) fail("invalid generator name", toks[1].column);
      const auto gu = to_int(toks[2].text);
      if (!gu) fail("expected an integer U-grading", toks[2].column);
      const auto gv = to_int(toks[3].text);
      if (!gv) fail("expected an integer V-grading", toks[3].column);
      raw.generators.push_back({std::string(toks[1].text), {*gu, *gv}, line_no});
    } else if (toks[0].text == "d") {
      if (toks.size() < 2) fail("expected a generator name", end_column());
      if (!is_ident(toks[1].text)) fail("invalid generator name", toks[1].column);
      if (toks.size() < 3 || toks[2].text != "=") fail("expected '='", toks.size() < 3 ? end_column() : toks[2].column);
      RawComplex::RawDifferential d{std::string(toks[1].text), {}, line_no};
      if (toks.size() == 4 && toks[3].text == "0") {
        raw.differentials.push_back(std::move(d));
        continue;
      }
      std::size_t k = 3;
      while (true) {
        if (k >= toks.size()) fail("expected a term", end_column());
        const Token coeff = toks[k];
        Monomial m;
        if (coeff.text == "1") {
          m = Monomial::unit();
        } else if (coeff.text.size() > 2 && (coeff.text[0] == 'U' || coeff.text[0] == 'V') && coeff.text[1] == '^') {
          const auto e = to_int(coeff.text.substr(2));
          if (!e || *e < 1 || coeff.text[2] == '+' || coeff.text[2] == '-') {
            fail("expected a positive exponent", coeff.column + 2);
          }
          m = coeff.text[0] == 'U' ? Monomial::u(*e) : Monomial::v(*e);
        } else {
          fail("expected U^K, V^K or 1", coeff.column);
        }
        if (k + 1 >= toks.size()) fail("expected a generator name", end_column());
        if (!is_ident(toks[k + 1].text)) fail("invalid generator name", toks[k + 1].column);
        d.terms.push_back({m, std::string(toks[k + 1].text)});
        k += 2;
        if (k == toks.size()) break;
        if (toks[k].text != "+") fail("expected '+'", toks[k].column);
        ++k;
      }
      raw.differentials.push_back(std::move(d));
    } else {
      fail("expected 'gen' or 'd'", toks[0].column);
    }
  }
  return raw;
}

Complex parse_complex_file(std::string_view text) { return validate(parse_raw_complex(text)); }

std::string serialize_complex(const Complex& c) {
  std::ostringstream out;
  for (const auto& g : c.generators()) {
    out << "gen " << g.name << ' ' << g.grading.gr_u << ' ' << g.grading.gr_v << '\n';
  }
  for (std::size_t s = 0; s < c.size(); ++s) {
    const auto& terms = c.differential(s);
    if (terms.empty()) continue;
    out << "d " << c.generator(s).name << " =";
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k > 0) out << " +";
      out << ' ' << terms[k].coefficient.to_string() << ' ' << c.generator(terms[k].target).name;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace knotlike
