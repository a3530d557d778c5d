#ifndef LOCDELTA_GF2_HPP
#define LOCDELTA_GF2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locdelta {

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Bits at positions >= size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitVector from_string(std::string_view bits);
  /// Low `length` bits of `value`, bit i of the integer at position i.
  static BitVector from_u64(std::uint64_t value, std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const noexcept;
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;
  bool intersects(const BitVector& other) const;

  /// Requires size() <= 64.
  std::uint64_t to_u64() const;
  std::string to_string() const;
  std::vector<std::size_t> support() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Dense matrix over GF(2), stored as rows of equal length.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Every row must have length `cols`.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  std::span<const BitVector> row_span() const noexcept { return data_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

  void append_row(BitVector row);
  BitVector column(std::size_t c) const;
  BitMatrix transposed() const;
  /// Matrix-vector product M·v, length rows().
  BitVector multiply(const BitVector& v) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Reduced row echelon form together with its pivot columns.
class EchelonForm {
 public:
  explicit EchelonForm(const BitMatrix& m);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return reduced_.cols(); }
  const BitMatrix& reduced() const noexcept { return reduced_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  /// True iff v lies in the row space. Throws std::invalid_argument on length mismatch.
  bool contains(const BitVector& v) const;
  /// Reduces v against the pivot rows; the result is zero iff v is in the row space.
  BitVector reduce(BitVector v) const;

 private:
  BitMatrix reduced_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);

/// Basis of {c : c·r = 0 for every row r of m}, one vector per non-pivot column,
/// ordered by that column.
BitMatrix kernel_basis(const BitMatrix& m);

/// `reduced` must be a reduced echelon form (see EchelonForm).
bool in_row_space(const EchelonForm& reduced, const BitVector& v);

}  // namespace locdelta

template <>
struct std::hash<locdelta::BitVector> {
  std::size_t operator()(const locdelta::BitVector& v) const noexcept;
};

#endif  // LOCDELTA_GF2_HPP
