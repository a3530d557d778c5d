#ifndef LOCDELTA_COSETENUM_HPP
#define LOCDELTA_COSETENUM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locdelta/quotient.hpp"
#include "locdelta/spaces.hpp"

namespace locdelta {

using Generator = std::uint32_t;
using Word = std::vector<Generator>;

/// <X | x^2 = 1, xyz = 1 for each line {x,y,z}>. Every generator is an involution.
struct Presentation {
  std::uint32_t generators = 0;
  std::vector<Word> relators;  // x x for each generator, then x y z per line

  static Presentation from_space(const PartialLinearSpace& space);
};

enum class Strategy {
  /// Relator-driven: scan every relator from each coset in turn, defining as needed.
  Hlt,
  /// Define the first open table entry, then scan the relators it touches.
  Felsch,
};

struct EnumerationOptions {
  /// Upper bound on coset rows ever defined (dead rows are not reclaimed).
  std::size_t coset_cap = 1'000'000;
  Strategy strategy = Strategy::Hlt;
};

struct EnumerationResult {
  bool closed = false;
  /// Group order when closed.
  std::size_t order = 0;
  /// Largest number of simultaneously live cosets.
  std::size_t high_water = 0;
  /// Coset rows defined in total.
  std::size_t defined = 0;
  /// Hash of the live-coset count after every definition and coincidence.
  std::uint64_t trace_hash = 0;
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup. The x^2 relators
/// are enforced by storing one self-inverse column per generator.
EnumerationResult enumerate(const Presentation& p, const EnumerationOptions& options = {});

/// |G/G'| = 2^dim V.
std::uint64_t abelian_order(const QuotientData& q);

struct OrderReport {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t order = 0;
  std::size_t cosets_used = 0;
  std::optional<std::pair<HyperplaneComplement, HyperplaneComplement>> witness;
};

struct OrderOptions {
  EnumerationOptions enumeration;
  std::size_t witness_budget = kDefaultWitnessBudget;
};

/// Disjoint hyperplane complements map G onto the infinite dihedral group, so they
/// certify |G| infinite; the table is only run when no such pair exists.
OrderReport order_report(const QuotientData& q, const OrderOptions& options = {});

/// {order: n | "infinite" | "unknown", cosets_used, witness?}.
nlohmann::json to_json(const OrderReport& report);

}  // namespace locdelta

#endif  // LOCDELTA_COSETENUM_HPP
