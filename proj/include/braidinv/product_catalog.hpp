#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/combinatorics.hpp"
#include "braidinv/cycles.hpp"

namespace braidinv {

/// A partition with a weight d_i (number of 1-strands) on every part,
/// 1-parts included. Within a run of equal parts the weights are weakly
/// decreasing.
struct MarkedPartition {
  Partition partition;
  std::vector<unsigned> marks;

  unsigned total_weight() const;
  friend bool operator==(const MarkedPartition&, const MarkedPartition&) = default;
  friend auto operator<=>(const MarkedPartition&, const MarkedPartition&) = default;
};

/// One generator of the invariant cohomology: a partition and one invariant
/// cycle per part. Within each run of equal parts the cycles are ordered by
/// weight descending, then gap word ascending.
struct GeneratorLabel {
  Partition partition;
  std::vector<InvariantCycle> cycles;

  unsigned degree() const { return partition.degree(); }
  unsigned total_weight() const;
  std::string to_string() const;

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
  friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Graded dimensions, degree -> dimension. Absent degrees are zero.
class PoincareTable {
public:
  PoincareTable() = default;
  explicit PoincareTable(unsigned n) : n_(n) {}

  unsigned n() const { return n_; }
  void add(unsigned degree, const BigInt& amount);
  BigInt at(unsigned degree) const;
  BigInt total() const;
  /// Non-zero entries only.
  const std::map<unsigned, BigInt>& entries() const { return entries_; }

  friend bool operator==(const PoincareTable& a, const PoincareTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  unsigned n_ = 0;
  std::map<unsigned, BigInt> entries_;
};

/// Canonical in-block order: weight descending, then cycle ascending.
bool cycle_precedes(const InvariantCycle& a, const InvariantCycle& b);

/// Sorts each run of equal parts into canonical order.
void canonicalize(GeneratorLabel& label);

/// Checks per-cycle admissibility, in-block ordering, and strictness for
/// runs of equal even parts.
bool label_is_valid(const GeneratorLabel& label);

std::vector<MarkedPartition> enumerate_marked(unsigned n, unsigned q);

/// Every generator of H^*(P_n) invariant under S_{n-q} x S_q.
std::vector<GeneratorLabel> enumerate_generators(unsigned n, unsigned q);

/// Degree-wise count of enumerate_generators.
PoincareTable product_dimension(unsigned n, unsigned q);

/// Same table computed from the sizes of the admissible-cycle sets alone
/// (set/multiset counting per run of equal parts), without listing labels.
PoincareTable product_dimension_counted(unsigned n, unsigned q);

}  // namespace braidinv
