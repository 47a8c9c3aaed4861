#include "knotlike/recipe.hpp"

#include <cctype>
#include <cstdlib>

#include "knotlike/error.hpp"

namespace knotlike {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr expr;
    skip();
    bool negated = false;
    if (peek() == '-' || peek() == '+') {
      negated = get() == '-';
    }
    expr.terms.push_back(term(negated));
    while (true) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      expr.terms.push_back(term(c == '-'));
    }
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(at_end() ? msg + " at end of input" : msg, 1, static_cast<int>(pos_) + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int uint() {
    skip();
    if (!is_digit()) fail("expected an unsigned integer");
    long long v = 0;
    while (is_digit()) {
      v = v * 10 + (get() - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  int integer() {
    skip();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    return sign * uint();
  }

  KnotTerm term(bool negated) {
    KnotTerm t;
    t.negated = negated;
    skip();
    if (is_digit()) {
      t.multiplier = uint();
      if (t.multiplier < 1) fail("multiplier must be at least 1");
      expect('*');
    }
    t.atom = atom();
    return t;
  }

  std::string word() {
    skip();
    std::string w;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) w += get();
    return w;
  }

  KnotAtom atom() {
    skip();
    const std::size_t start = pos_;
    const std::string w = word();
    KnotAtom a;
    if (w == "D") {
      a.kind = KnotAtom::Kind::D;
    } else if (w == "T") {
      a.kind = KnotAtom::Kind::Torus;
      expect('(');
      a.p = integer();
      expect(',');
      a.q = integer();
      expect(')');
    } else if (w == "Cable") {
      a.kind = KnotAtom::Kind::Cable;
      expect('(');
      a.inner = std::make_shared<const KnotAtom>(atom());
      expect(';');
      a.p = integer();
      expect(',');
      a.q = integer();
      expect(')');
    } else if (w == "Thin") {
      a.kind = KnotAtom::Kind::Thin;
      expect('(');
      a.t = integer();
      expect(')');
    } else if (w == "Std") {
      a.kind = KnotAtom::Kind::Std;
      expect('(');
      skip();
      if (peek() != ')') {
        while (true) {
          const std::size_t at = pos_;
          const int v = integer();
          if (v == 0) {
            pos_ = at;
            fail("standard parameters must be nonzero");
          }
          a.params.push_back(v);
          skip();
          if (peek() != ',') break;
          get();
        }
      }
      expect(')');
    } else {
      pos_ = start;
      fail("expected T(p,q), Cable(...), Thin(t), Std(...) or D");
    }
    return a;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_knot_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const KnotAtom& atom) {
  switch (atom.kind) {
    case KnotAtom::Kind::D: return "D";
    case KnotAtom::Kind::Torus: return "T(" + std::to_string(atom.p) + "," + std::to_string(atom.q) + ")";
    case KnotAtom::Kind::Cable:
      return "Cable(" + to_string(*atom.inner) + ";" + std::to_string(atom.p) + "," + std::to_string(atom.q) + ")";
    case KnotAtom::Kind::Thin: return "Thin(" + std::to_string(atom.t) + ")";
    case KnotAtom::Kind::Std: return "Std(" + format_params(atom.params) + ")";
  }
  return "?";
}

std::string to_string(const KnotExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    const KnotTerm& t = expr.terms[i];
    if (i > 0) {
      out += t.negated ? " - " : " + ";
    } else if (t.negated) {
      out += "-";
    }
    if (t.multiplier != 1) out += std::to_string(t.multiplier) + "*";
    out += to_string(t.atom);
  }
  return out;
}

LaurentPoly atom_delta(const KnotAtom& atom) {
  switch (atom.kind) {
    case KnotAtom::Kind::D: return torus_delta(2, 3);
    case KnotAtom::Kind::Torus: return torus_delta(atom.p, atom.q);
    case KnotAtom::Kind::Cable: return cable_delta(atom.p, atom.q, atom_delta(*atom.inner));
    case KnotAtom::Kind::Thin:
    case KnotAtom::Kind::Std: break;
  }
  throw Error(to_string(atom) + " has no Alexander polynomial here; cable bodies must be T, Cable or D");
}

Params atom_params(const KnotAtom& atom) {
  switch (atom.kind) {
    case KnotAtom::Kind::Thin: {
      const int s = atom.t > 0 ? 1 : -1;
      Params out;
      for (int i = 0; i < 2 * std::abs(atom.t); ++i) out.push_back(i % 2 == 0 ? s : -s);
      return out;
    }
    case KnotAtom::Kind::Std:
      if (atom.params.size() % 2 != 0) throw Error("Std(...) needs an even number of parameters");
      return atom.params;
    default: return staircase_params(atom_delta(atom));
  }
}

std::vector<Params> summand_params(const KnotExpr& expr) {
  std::vector<Params> out;
  for (const KnotTerm& t : expr.terms) {
    const Params base = atom_params(t.atom);
    const Params signed_params = t.negated ? negate(base) : base;
    for (int i = 0; i < t.multiplier; ++i) out.push_back(signed_params);
  }
  return out;
}

Complex materialize(const KnotExpr& expr) {
  Complex acc;
  for (const Params& p : summand_params(expr)) acc = tensor(acc, build_standard(p));
  return acc;
}

RepResult eval_recipe(const KnotExpr& expr) {
  const std::vector<Params> summands = summand_params(expr);
  if (summands.size() == 1) return standard_rep(build_standard(summands.front()));
  RepResult acc;
  acc.params = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) {
    acc = standard_rep(tensor(build_standard(acc.params), build_standard(summands[i])));
  }
  return acc;
}

RepResult eval_recipe(std::string_view text) { return eval_recipe(parse_knot_expr(text)); }

}  // namespace knotlike
