#include "locdelta/cosetenum.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace locdelta {

Presentation Presentation::from_space(const PartialLinearSpace& space) {
  Presentation p;
  p.generators = space.n_points;
  for (Generator x = 0; x < space.n_points; ++x) p.relators.push_back({x, x});
  for (const Line& l : space.lines) p.relators.push_back({l[0], l[1], l[2]});
  return p;
}

namespace {

using Coset = std::int32_t;
constexpr Coset kUndefined = -1;

class CosetTable {
 public:
  CosetTable(const Presentation& p, const EnumerationOptions& options) : gens_(p.generators), options_(options) {
    for (const Word& w : p.relators) {
      if (w.size() == 2 && w[0] == w[1]) continue;  // involution columns enforce these
      for (Generator g : w) {
        if (g >= gens_) throw std::invalid_argument("enumerate: relator uses an unknown generator");
      }
      relators_.push_back(w);
    }
    // Cyclic conjugates of each relator and its inverse, indexed by first letter.
    starting_with_.resize(gens_);
    for (const Word& w : relators_) {
      Word inverse(w.rbegin(), w.rend());
      for (const Word* base : std::array<const Word*, 2>{&w, &inverse}) {
        for (std::size_t shift = 0; shift < base->size(); ++shift) {
          Word rotated;
          for (std::size_t i = 0; i < base->size(); ++i) rotated.push_back((*base)[(shift + i) % base->size()]);
          auto& bucket = starting_with_[rotated.front()];
          if (std::find(bucket.begin(), bucket.end(), rotated) == bucket.end()) bucket.push_back(rotated);
        }
      }
    }
    new_coset();
  }

  EnumerationResult run() {
    try {
      if (options_.strategy == Strategy::Hlt) {
        run_hlt();
      } else {
        run_felsch();
      }
    } catch (const CapReached&) {
      result_.closed = false;
      result_.defined = parent_.size();
      return result_;
    }
    result_.closed = true;
    result_.order = live_;
    result_.defined = parent_.size();
    verify_closed();
    return result_;
  }

 private:
  struct CapReached {};

  Coset& entry(Coset c, Generator x) { return table_[static_cast<std::size_t>(c) * gens_ + x]; }
  bool alive(Coset c) const { return parent_[c] == c; }

  void record(std::uint64_t value) {
    result_.trace_hash = (result_.trace_hash ^ value) * 0x100000001b3ull;
  }

  Coset new_coset() {
    if (parent_.size() >= options_.coset_cap) throw CapReached{};
    const auto c = static_cast<Coset>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + gens_, kUndefined);
    ++live_;
    result_.high_water = std::max(result_.high_water, live_);
    record(live_);
    return c;
  }

  void define(Coset c, Generator x) {
    const Coset d = new_coset();
    entry(c, x) = d;
    entry(d, x) = c;
    deductions_.emplace_back(c, x);
  }

  void set_pair(Coset a, Generator x, Coset b) {
    entry(a, x) = b;
    entry(b, x) = a;
    deductions_.emplace_back(a, x);
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const Coset next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(Coset a, Coset b, std::vector<Coset>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Coset e = queue[i];
      for (Generator x = 0; x < gens_; ++x) {
        const Coset f = entry(e, x);
        if (f == kUndefined) continue;
        entry(e, x) = kUndefined;
        if (entry(f, x) == e) entry(f, x) = kUndefined;
        const Coset e1 = rep(e);
        const Coset f1 = rep(f);
        if (entry(e1, x) != kUndefined) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x) != kUndefined) {
          merge(e1, entry(f1, x), queue);
        } else {
          set_pair(e1, x, f1);
        }
      }
    }
    record(live_ | (std::uint64_t{1} << 63));
  }

  // Scans w from c. With `fill`, open positions are filled by new definitions.
  void scan(Coset c, const Word& w, bool fill) {
    Coset f = c;
    Coset b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && entry(f, w[i]) != kUndefined) f = entry(f, w[i++]);
      if (i == j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j > i && entry(b, w[j - 1]) != kUndefined) b = entry(b, w[--j]);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // One letter left: the scan closes by deduction.
        set_pair(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      const Coset d = entry(c, x);
      for (const Word& w : starting_with_[x]) {
        if (!alive(c)) break;
        scan(c, w, false);
      }
      if (d != kUndefined && alive(d)) {
        for (const Word& w : starting_with_[x]) {
          if (!alive(d)) break;
          scan(d, w, false);
        }
      }
    }
  }

  void run_felsch() {
    for (Coset c = 0; static_cast<std::size_t>(c) < parent_.size(); ++c) {
      for (Generator x = 0; x < gens_ && alive(c); ++x) {
        if (entry(c, x) != kUndefined) continue;
        define(c, x);
        process_deductions();
      }
    }
  }

  void run_hlt() {
    for (Coset c = 0; static_cast<std::size_t>(c) < parent_.size(); ++c) {
      for (const Word& w : relators_) {
        if (!alive(c)) break;
        scan(c, w, true);
      }
      for (Generator x = 0; x < gens_ && alive(c); ++x) {
        if (entry(c, x) == kUndefined) define(c, x);
      }
      deductions_.clear();
    }
  }

  void verify_closed() {
    for (Coset c = 0; static_cast<std::size_t>(c) < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (Generator x = 0; x < gens_; ++x) {
        const Coset d = entry(c, x);
        if (d == kUndefined || !alive(d) || entry(d, x) != c) {
          throw std::logic_error("enumerate: table did not close consistently");
        }
      }
      for (const Word& w : relators_) {
        Coset f = c;
        for (Generator x : w) f = entry(f, x);
        if (f != c) throw std::logic_error("enumerate: relator fails in the final table");
      }
    }
  }

  std::uint32_t gens_;
  EnumerationOptions options_;
  std::vector<Word> relators_;
  std::vector<std::vector<Word>> starting_with_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<std::pair<Coset, Generator>> deductions_;
  std::size_t live_ = 0;
  EnumerationResult result_;
};

}  // namespace

EnumerationResult enumerate(const Presentation& p, const EnumerationOptions& options) {
  if (p.generators == 0) {
    EnumerationResult trivial;
    trivial.closed = true;
    trivial.order = 1;
    trivial.high_water = 1;
    trivial.defined = 1;
    return trivial;
  }
  return CosetTable(p, options).run();
}

std::uint64_t abelian_order(const QuotientData& q) {
  if (q.dimension() >= 64) throw std::overflow_error("abelian_order: 2^dim V does not fit in 64 bits");
  return std::uint64_t{1} << q.dimension();
}

OrderReport order_report(const QuotientData& q, const OrderOptions& options) {
  OrderReport report;
  if (auto witness = infinitude_witness(q, options.witness_budget)) {
    report.kind = OrderReport::Kind::Infinite;
    report.witness = std::move(witness);
    return report;
  }
  const auto result = enumerate(Presentation::from_space(q.space()), options.enumeration);
  report.cosets_used = result.defined;
  if (result.closed) {
    report.kind = OrderReport::Kind::Finite;
    report.order = result.order;
  }
  return report;
}

nlohmann::json to_json(const OrderReport& report) {
  nlohmann::json j;
  switch (report.kind) {
    case OrderReport::Kind::Finite:
      j["order"] = report.order;
      break;
    case OrderReport::Kind::Infinite:
      j["order"] = "infinite";
      break;
    case OrderReport::Kind::Unknown:
      j["order"] = "unknown";
      break;
  }
  j["cosets_used"] = report.cosets_used;
  if (report.witness) {
    j["witness"] = nlohmann::json::array({report.witness->first.support.support(), report.witness->second.support.support()});
  }
  return j;
}

}  // namespace locdelta
