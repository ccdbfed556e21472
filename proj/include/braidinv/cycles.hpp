#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/combinatorics.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

/// Binary labelling of the strands: 1 marks strands sent into the last q
/// points by s, 0 the rest.
struct DeltaMap {
  std::vector<std::uint8_t> bits;

  unsigned size() const { return static_cast<unsigned>(bits.size()); }
  unsigned weight() const;
  DeltaMap complement() const;

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};

/// Rotation class of the zero-gaps between consecutive 1-strands on one
/// cycle of length `length`. The word is stored in its least rotation; an
/// empty word means the cycle carries no 1-strand.
///
/// For a non-empty word with d entries, 1 <= d <= length and the entries sum
/// to length - d.
class InvariantCycle {
public:
  InvariantCycle() = default;
  /// Canonicalizes `gaps`; throws DomainError on an inconsistent gap sum.
  InvariantCycle(unsigned length, Word gaps);

  static InvariantCycle empty(unsigned length);

  unsigned length() const { return length_; }
  const Word& gaps() const { return gaps_; }
  bool is_empty() const { return gaps_.empty(); }
  /// Number of 1-strands on the cycle.
  unsigned weight() const { return static_cast<unsigned>(gaps_.size()); }
  /// Rotation offsets of the gap word attaining the minimum; for the empty
  /// cycle this is the length (every rotation of 00..0 fixes it).
  unsigned symmetry() const { return symmetry_; }

  std::string to_string() const;

  friend bool operator==(const InvariantCycle& a, const InvariantCycle& b) {
    return a.length_ == b.length_ && a.gaps_ == b.gaps_;
  }
  /// Empty first, then prefix-lexicographic on the gap words. Only meaningful
  /// between cycles of the same length.
  friend std::strong_ordering operator<=>(const InvariantCycle& a, const InvariantCycle& b) {
    if (auto c = a.gaps_ <=> b.gaps_; c != 0) return c;
    return a.length_ <=> b.length_;
  }

private:
  unsigned length_ = 0;
  Word gaps_;
  unsigned symmetry_ = 0;
};

/// How the wrap-around coordinate of the gap word is formed. `Cyclic` counts
/// the zeros between the last and the first 1-strand; `Printed` keeps one
/// extra unit there. Only `Cyclic` is self-consistent; `Printed` exists so a
/// test can show that.
enum class GapConvention { Cyclic, Printed };

DeltaMap delta_from_permutation(const Permutation& s, unsigned q);

/// 1-based positions in the i-th part interval (0-based part index) where
/// delta is 1, ascending.
std::vector<unsigned> block_support(const DeltaMap& delta, const Partition& lam, unsigned i);

InvariantCycle invariant_cycle(const DeltaMap& delta, const Partition& lam, unsigned i);

/// Gap word for a support on a single cycle, before canonicalization.
Word gap_word(const std::vector<unsigned>& support, unsigned length,
              GapConvention convention = GapConvention::Cyclic);

/// Run-structure rewrite of a gap word under complementation; the word must
/// contain a positive entry. Not canonicalized.
Word dual_gap_word(const Word& gaps);

/// Invariant cycle of the complemented labelling on the same cycle, computed
/// from the run structure of the gap word alone.
InvariantCycle dual_cycle(const InvariantCycle& chi);

/// Admissibility of a single cycle: weight range for length >= 3, and the
/// rotation-symmetry bound (exactly 1 when length = 0,1,3 mod 4, at most 2
/// when length = 2 mod 4).
bool cycle_admissible(const InvariantCycle& chi);

/// All admissible invariant cycles of the given length and weight, ascending.
std::vector<InvariantCycle> enumerate_pi(unsigned length, unsigned weight);

/// Self-dual cycles of length 2d and weight d, by seed enumeration with the
/// anti-period exclusion rule.
std::vector<InvariantCycle> enumerate_selfdual(unsigned d);

/// Inclusion-exclusion count of self-dual cycles over the odd primes of d.
BigInt selfdual_count_closed_form(unsigned d);

/// Binary pattern (one representative) for a canonical cycle: a 1 followed
/// by gaps[0] zeros, a 1, gaps[1] zeros, ...
std::vector<std::uint8_t> pattern_of(const InvariantCycle& chi);

}  // namespace braidinv
