#ifndef LOCDELTA_SUBSETS_HPP
#define LOCDELTA_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace locdelta {

using SubsetMask = std::uint32_t;

std::uint64_t binomial(unsigned n, unsigned k);

/// Colex ranking of d-subsets of {0..n-1} (n <= 31). The rank of {c_1 < ... < c_d}
/// is sum C(c_i, i); masks in increasing integer order have increasing rank.
class SubsetRanker {
 public:
  SubsetRanker(unsigned n, unsigned d);

  unsigned n() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }
  std::uint64_t count() const noexcept { return count_; }

  std::uint64_t rank(SubsetMask mask) const;
  SubsetMask unrank(std::uint64_t r) const;
  /// All d-subsets in rank order.
  std::vector<SubsetMask> all() const;

 private:
  unsigned n_;
  unsigned d_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint64_t>> table_;  // table_[c][i] = C(c, i)
};

/// Next mask with the same popcount (Gosper's hack); mask must be nonzero.
inline SubsetMask next_same_popcount(SubsetMask mask) {
  const SubsetMask low = mask & (~mask + 1);
  const SubsetMask ripple = mask + low;
  return ripple | (((ripple ^ mask) >> 2) / low);
}

}  // namespace locdelta

#endif  // LOCDELTA_SUBSETS_HPP
