#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "braidinv/bigint.hpp"

namespace braidinv {

using Word = std::vector<std::uint32_t>;

/// A maximal run of equal parts in a partition.
struct Block {
  unsigned value = 0;
  unsigned multiplicity = 0;
  unsigned first = 0;  // index of the first part of the run

  friend bool operator==(const Block&, const Block&) = default;
};

/// Integer partition, parts weakly decreasing. A partition with j parts
/// labels a summand living in cohomological degree n - j.
class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  unsigned n() const { return n_; }
  unsigned part_count() const { return static_cast<unsigned>(parts_.size()); }
  unsigned degree() const { return n_ - part_count(); }

  /// Runs of equal parts, in descending value order.
  std::vector<Block> blocks() const;

  /// Index of the first position of part i inside [0, n).
  unsigned offset(std::size_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// All partitions of n into exactly part_count parts, descending lex order.
std::vector<Partition> enumerate_partitions(unsigned n, unsigned part_count);

/// Every partition of n, descending lex order.
std::vector<Partition> enumerate_partitions(unsigned n);

/// C(a, b); zero outside 0 <= b <= a.
BigInt binomial(unsigned long a, long b);

/// Ordered b-tuples of positive integers summing to m, i.e. C(m-1, b-1).
BigInt compositions_count(unsigned m, unsigned b);

struct Rotation {
  Word word;
  unsigned multiplicity = 0;  // rotation offsets attaining the minimum

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Lexicographically least rotation of a non-empty word.
Rotation min_rotation(const Word& w);

/// Distinct odd primes dividing d, ascending.
std::vector<unsigned> odd_prime_factors(unsigned d);

/// Unsigned Stirling numbers of the first kind c(n, k), k = 0..n, counted
/// by walking every permutation of [n] (n <= 10).
std::vector<BigInt> permutation_cycle_counts(unsigned n);

}  // namespace braidinv
