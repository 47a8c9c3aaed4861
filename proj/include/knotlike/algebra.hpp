#pragma once

// Free bigraded chain complexes over R = F_2[U,V]/(UV = 0).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace knotlike {

struct Bigrading {
  int gr_u = 0;
  int gr_v = 0;

  /// Alexander grading (gr_U - gr_V)/2, defined only when the parities agree.
  std::optional<int> alexander() const;

  friend Bigrading operator+(Bigrading a, Bigrading b) { return {a.gr_u + b.gr_u, a.gr_v + b.gr_v}; }
  friend Bigrading operator-(Bigrading a, Bigrading b) { return {a.gr_u - b.gr_u, a.gr_v - b.gr_v}; }
  friend Bigrading operator-(Bigrading a) { return {-a.gr_u, -a.gr_v}; }
  friend bool operator==(const Bigrading&, const Bigrading&) = default;
};

/// Degree of the differential.
inline constexpr Bigrading kDifferentialDegree{-1, -1};

/// A monomial of R: 1, U^a (a >= 1) or V^b (b >= 1). Products obey UV = 0.
class Monomial {
 public:
  enum class Kind { Unit, U, V };

  constexpr Monomial() = default;
  static constexpr Monomial unit() { return Monomial(); }
  /// U^0 normalizes to the unit.
  static Monomial u(int exponent);
  static Monomial v(int exponent);

  Kind kind() const { return kind_; }
  int exponent() const { return exponent_; }
  bool is_unit() const { return kind_ == Kind::Unit; }

  Bigrading grading() const;
  /// The product, or nullopt when it vanishes in R.
  std::optional<Monomial> times(const Monomial& other) const;

  /// "1", "U^a" or "V^b".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  constexpr Monomial(Kind kind, int exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_ = Kind::Unit;
  int exponent_ = 0;
};

/// The unique monomial m with gr(m) = to - from, if one exists. Because
/// coefficients between two homogeneous elements are grading-forced, this is
/// how every "slot" of a bigraded map is identified.
std::optional<Monomial> monomial_between(Bigrading from, Bigrading to);

struct Generator {
  std::string name;
  Bigrading grading;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One entry m * target of the differential of a generator.
struct Term {
  Monomial coefficient;
  std::size_t target = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Unvalidated description of a complex, as produced by parsers. Lines are
/// optional provenance used to decorate validation errors.
struct RawComplex {
  struct RawGenerator {
    std::string name;
    Bigrading grading;
    std::optional<int> line;
  };
  struct RawTerm {
    Monomial coefficient;
    std::string target;
  };
  struct RawDifferential {
    std::string source;
    std::vector<RawTerm> terms;
    std::optional<int> line;
  };

  std::vector<RawGenerator> generators;
  std::vector<RawDifferential> differentials;
};

/// Immutable, validated complex. Generators keep declaration order and each
/// differential lists its terms in increasing target order.
class Complex {
 public:
  /// The identity complex R: one generator in grading (0, 0).
  Complex();
  /// Validates; throws ValidationError.
  Complex(std::vector<Generator> generators, std::vector<std::vector<Term>> differential);

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_[i]; }
  const std::vector<Term>& differential(std::size_t source) const { return differential_[source]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// No differential entry has unit coefficient.
  bool is_reduced() const;
  std::size_t num_entries() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<std::vector<Term>> differential_;
};

/// Builds a Complex from a raw description, checking unique and declared
/// names, the (-1,-1) degree of every entry and d^2 = 0.
Complex validate(const RawComplex& raw);

/// Cancels unit arrows in declaration order until the complex is reduced.
/// The result is homotopy equivalent to the input.
Complex reduce(const Complex& c);

/// C1 (x) C2 over R. Generator (x, y) is named "x|y" and ordered
/// lexicographically by (index of x, index of y).
Complex tensor(const Complex& c1, const Complex& c2);

/// Hom_R(C, R). Generator x becomes "x*" in grading -gr(x).
Complex dual(const Complex& c);

/// Same complex with every grading moved by (shift_u, shift_v).
Complex apply_shift(const Complex& c, int shift_u, int shift_v);

/// True when the i-th generators agree in grading and the differentials agree
/// entry for entry; names are ignored.
bool same_up_to_renaming(const Complex& a, const Complex& b);

}  // namespace knotlike
