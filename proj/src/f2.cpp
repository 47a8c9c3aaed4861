#include "knotlike/f2.hpp"

#include <bit>
#include <stdexcept>

namespace knotlike::f2 {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const { return next_set(0); }

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word word = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (word != 0) {
      const std::size_t idx = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
      return idx < size_ ? idx : size_;
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

bool BitVector::dot(const BitVector& other) const {
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (v.get(pivots_[r])) v ^= rows_[r];
  }
  return v;
}

bool EchelonBasis::insert(const BitVector& v) {
  BitVector rem = reduce(v);
  const std::size_t pivot = rem.first_set();
  if (pivot == rem.size()) return false;
  for (auto& row : rows_) {
    if (row.get(pivot)) row ^= rem;
  }
  rows_.push_back(std::move(rem));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim) {
  EchelonBasis basis(dim);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<BitVector> kernel(const std::vector<BitVector>& images, std::size_t out_dim) {
  // Row-reduce [image | identity]; rows whose image part vanishes carry
  // kernel vectors in their identity part.
  const std::size_t n = images.size();
  std::vector<BitVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector row(out_dim + n);
    for (std::size_t b = images[i].first_set(); b < out_dim; b = images[i].next_set(b + 1)) row.set(b);
    row.set(out_dim + i);
    rows.push_back(std::move(row));
  }
  std::size_t next = 0;
  for (std::size_t col = 0; col < out_dim && next < n; ++col) {
    std::size_t pivot = next;
    while (pivot < n && !rows[pivot].get(col)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = next + 1; r < n; ++r) {
      if (rows[r].get(col)) rows[r] ^= rows[next];
    }
    ++next;
  }
  std::vector<BitVector> out;
  for (std::size_t r = next; r < n; ++r) {
    BitVector k(n);
    for (std::size_t b = rows[r].next_set(out_dim); b < out_dim + n; b = rows[r].next_set(b + 1)) {
      k.set(b - out_dim);
    }
    out.push_back(std::move(k));
  }
  return out;
}

void AffineSystem::add_equation(const std::vector<std::size_t>& vars, bool rhs) {
  BitVector row(num_vars_ + 1);
  for (std::size_t v : vars) row.flip(v);
  if (rhs) row.set(num_vars_);
  rows_.push_back(std::move(row));
}

void AffineSystem::add_equation(const BitVector& coefficients, bool rhs) {
  if (coefficients.size() != num_vars_) throw std::invalid_argument("equation width mismatch");
  BitVector row(num_vars_ + 1);
  for (std::size_t b = coefficients.first_set(); b < num_vars_; b = coefficients.next_set(b + 1)) {
    row.set(b);
  }
  if (rhs) row.set(num_vars_);
  rows_.push_back(std::move(row));
}

std::optional<BitVector> AffineSystem::solve() const {
  std::vector<BitVector> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) {
    if (r.any()) rows.push_back(r);
  }
  // Forward elimination keyed on each row's lowest coefficient bit.
  std::vector<std::size_t> pivot_col;
  std::size_t next = 0;
  for (std::size_t col = 0; col < num_vars_ && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivot_col.push_back(col);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r) {
    if (rows[r].get(num_vars_)) return std::nullopt;
  }
  BitVector x(num_vars_);
  for (std::size_t r = next; r-- > 0;) {
    const std::size_t col = pivot_col[r];
    bool value = rows[r].get(num_vars_);
    for (std::size_t b = rows[r].next_set(col + 1); b < num_vars_; b = rows[r].next_set(b + 1)) {
      if (x.get(b)) value = !value;
    }
    x.set(col, value);
  }
  return x;
}

}  // namespace knotlike::f2
