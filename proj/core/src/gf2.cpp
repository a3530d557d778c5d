#include "locdelta/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace locdelta {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("BitVector length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: unexpected character");
    }
  }
  return v;
}

BitVector BitVector::from_u64(std::uint64_t value, std::size_t length) {
  if (length > kWordBits) {
    throw std::invalid_argument("BitVector::from_u64: length exceeds 64");
  }
  BitVector v(length);
  if (length > 0) {
    const Word mask = length == kWordBits ? ~Word{0} : ((Word{1} << length) - 1);
    v.words_[0] = value & mask;
  }
  return v;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return length_;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_length(*this, other);
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

bool BitVector::intersects(const BitVector& other) const {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::uint64_t BitVector::to_u64() const {
  if (length_ > kWordBits) throw std::invalid_argument("BitVector::to_u64: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  // Most significant word first, so vectors of length <= 64 order like their integer codes.
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.cols_ = cols;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
  }
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: length mismatch");
  data_.push_back(std::move(row));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (data_[r].get(c)) v.set(r);
  }
  return v;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : data_[r].support()) t.set(c, r);
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (data_[r].dot(v)) out.set(r);
  }
  return out;
}

EchelonForm::EchelonForm(const BitMatrix& m) {
  std::vector<BitVector> rows(m.row_span().begin(), m.row_span().end());
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivots_.push_back(col);
    ++next;
  }
  rows.resize(next);
  reduced_ = BitMatrix::from_rows(std::move(rows), m.cols());
}

BitVector EchelonForm::reduce(BitVector v) const {
  if (v.size() != cols()) {
    throw std::invalid_argument("EchelonForm: vector length " + std::to_string(v.size()) +
                                " does not match " + std::to_string(cols()) + " columns");
  }
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= reduced_.row(i);
  }
  return v;
}

bool EchelonForm::contains(const BitVector& v) const { return reduce(v).is_zero(); }

std::size_t rank(const BitMatrix& m) { return EchelonForm(m).rank(); }

BitMatrix kernel_basis(const BitMatrix& m) {
  const EchelonForm ef(m);
  const auto pivots = ef.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  BitMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector c(m.cols());
    c.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (ef.reduced().get(i, free)) c.set(pivots[i]);
    }
    basis.append_row(std::move(c));
  }
  return basis;
}

bool in_row_space(const EchelonForm& reduced, const BitVector& v) { return reduced.contains(v); }

}  // namespace locdelta

std::size_t std::hash<locdelta::BitVector>::operator()(const locdelta::BitVector& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ull;
  for (auto w : v.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}
