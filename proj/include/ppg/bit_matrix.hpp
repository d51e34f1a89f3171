#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppg {

/// Dense square boolean matrix, one packed row per element.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(std::size_t row, std::size_t col) {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }

  /// row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w)
      bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

  const std::uint64_t* row(std::size_t r) const { return &bits_[r * words_]; }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w)
      c += static_cast<std::size_t>(std::popcount(bits_[r * words_ + w]));
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ppg
