#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace coprime {

// Row-major matrix of bits, one fixed-width row per node. Rows are padded to
// whole 64-bit words; padding bits are always zero, so whole-row popcounts
// and word-wise row combinations need no masking.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows),
        cols_(cols),
        words_per_row_((cols + 63) / 64),
        bits_(static_cast<std::size_t>(rows) * words_per_row_, 0) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t words_per_row() const { return words_per_row_; }

  void set(std::int64_t r, std::int64_t c) {
    bits_[r * words_per_row_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }
  void reset(std::int64_t r, std::int64_t c) {
    bits_[r * words_per_row_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
  }
  bool test(std::int64_t r, std::int64_t c) const {
    return (bits_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
  }

  std::span<const std::uint64_t> row(std::int64_t r) const {
    return {bits_.data() + r * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
  }
  std::span<std::uint64_t> row_mut(std::int64_t r) {
    return {bits_.data() + r * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
  }

  std::int64_t row_popcount(std::int64_t r) const {
    return popcount(row(r));
  }

  bool operator==(const BitMatrix& other) const = default;

  static std::int64_t popcount(std::span<const std::uint64_t> w) {
    std::int64_t s = 0;
    for (std::uint64_t x : w) s += std::popcount(x);
    return s;
  }

  static std::int64_t and_popcount(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b) {
    std::int64_t s = 0;
    const std::size_t m = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < m; ++i) s += std::popcount(a[i] & b[i]);
    return s;
  }

  static bool and_any(std::span<const std::uint64_t> a,
                      std::span<const std::uint64_t> b) {
    const std::size_t m = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] & b[i]) return true;
    return false;
  }

  // Calls fn(column) for every set bit of word span w, ascending.
  template <typename Fn>
  static void for_each_bit(std::span<const std::uint64_t> w, Fn&& fn) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        fn(static_cast<std::int64_t>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::int64_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Single bit row used as BFS frontier / visited set.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::int64_t cols)
      : cols_(cols), words_(static_cast<std::size_t>((cols + 63) / 64), 0) {}

  void clear() { std::memset(words_.data(), 0, words_.size() * 8); }
  void set(std::int64_t c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  bool test(std::int64_t c) const {
    return (words_[c >> 6] >> (c & 63)) & 1;
  }
  std::int64_t count() const { return BitMatrix::popcount(words_); }
  std::int64_t size() const { return cols_; }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  void or_with(std::span<const std::uint64_t> other) {
    const std::size_t m =
        other.size() < words_.size() ? other.size() : words_.size();
    for (std::size_t i = 0; i < m; ++i) words_[i] |= other[i];
  }

  // this |= other & ~mask
  void or_with_andnot(std::span<const std::uint64_t> other,
                      std::span<const std::uint64_t> mask) {
    const std::size_t m =
        other.size() < words_.size() ? other.size() : words_.size();
    for (std::size_t i = 0; i < m; ++i) words_[i] |= other[i] & ~mask[i];
  }

 private:
  std::int64_t cols_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace coprime
