#pragma once

// Packed linear algebra over F_2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace knotlike::f2 {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other);
  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  /// Index of the lowest set bit at or after `from`, or size().
  std::size_t next_set(std::size_t from) const;

  /// Parity of the bitwise AND with `other`.
  bool dot(const BitVector& other) const;

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  const std::vector<Word>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Incrementally built row-echelon basis of a subspace of F_2^n. Each stored
/// row has a distinct pivot (its lowest set bit) that is cleared in every
/// other row, so reduction is a single pass.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of `v` after clearing every stored pivot.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  /// Adds `v`; returns false when it was already in the span.
  bool insert(const BitVector& v);

 private:
  std::size_t dim_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the span of `vectors`.
std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim);

/// Basis of the kernel of the linear map sending the i-th input basis vector
/// to `images[i]` (each of length `out_dim`). Kernel vectors have length
/// images.size().
std::vector<BitVector> kernel(const std::vector<BitVector>& images, std::size_t out_dim);

/// Affine system A x = b over F_2 with rows stored packed. The right-hand
/// side lives in an extra trailing bit of each row so that elimination is one
/// XOR per row operation.
class AffineSystem {
 public:
  explicit AffineSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_equations() const { return rows_.size(); }

  /// Adds the equation sum_{i in vars} x_i = rhs. Repeated indices cancel.
  void add_equation(const std::vector<std::size_t>& vars, bool rhs);
  void add_equation(const BitVector& coefficients, bool rhs);

  /// Some solution with every free variable set to zero, or nullopt when the
  /// system is inconsistent. Deterministic for a fixed equation order.
  std::optional<BitVector> solve() const;

 private:
  std::size_t num_vars_;
  std::vector<BitVector> rows_;
};

}  // namespace knotlike::f2
