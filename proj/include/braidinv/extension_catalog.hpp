#pragma once

#include <optional>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/product_catalog.hpp"

namespace braidinv {

/// A weight assignment on a partition of n = 2q whose weights can be matched
/// up under d <-> lambda_i - d. Inside each run of equal parts the marks are
/// laid out as
///
///   d_1 >= ... >= d_k,  v - d_k, ..., v - d_1,  v/2, ..., v/2
///
/// where k = pair_counts[block] counts every dual pair (including pairs of
/// weight v/2 whose two cycles differ) and d_j >= v/2.
struct PairedMarkedPartition {
  MarkedPartition marked;
  std::vector<unsigned> pair_counts;  // one per block

  /// Pairs in the block whose two weights are both v/2.
  unsigned half_weight_pairs(std::size_t block) const;
  /// Marks sorted into the usual weakly-decreasing order.
  MarkedPartition to_marked() const;

  friend bool operator==(const PairedMarkedPartition&, const PairedMarkedPartition&) = default;
  friend auto operator<=>(const PairedMarkedPartition&, const PairedMarkedPartition&) = default;
};

struct SignedGenerator {
  GeneratorLabel label;
  int sign = 1;  // action of sigma on the generator, +1 or -1
  PairedMarkedPartition paired;
};

/// Dualizes every cycle and restores canonical order. Throws
/// ConsistencyError if the image is not a valid generator label.
GeneratorLabel sigma_dual_label(const GeneratorLabel& label);

std::vector<PairedMarkedPartition> enumerate_E(unsigned n);

/// The sigma-fixed generators with their sign, one per label.
std::vector<SignedGenerator> enumerate_signed_EP(unsigned n);
std::vector<GeneratorLabel> enumerate_EP(unsigned n);
std::vector<GeneratorLabel> enumerate_KP(unsigned n);

/// Product over runs of (-1)^{m(v-1)(v-2)/2 + (v-1)^2 k(2k-1)}.
int epsilon_sign(const PairedMarkedPartition& pmp);

/// Parity-of-clauses rule listing when a run flips the sign (lambda taken
/// mod 4 in every clause). Cross-check for epsilon_sign.
bool kernel_condition(const PairedMarkedPartition& pmp);

/// Pairing structure of a sigma-fixed label; nullopt when the label is not
/// fixed by sigma.
std::optional<PairedMarkedPartition> paired_structure(const GeneratorLabel& label);

struct FixedPointCounts {
  PoincareTable ep;
  PoincareTable kp;
};

/// |E^P| and |K^P| per degree from binomial products over E, with the
/// self-dual counts taken from the inclusion-exclusion closed form.
FixedPointCounts fixed_point_counts_closed_form(unsigned n);
BigInt count_EP_closed_form(unsigned n);
BigInt count_KP_closed_form(unsigned n);

struct ExtensionDimension {
  BigInt total;
  PoincareTable graded;
};

/// (dim of S_q x S_q invariants + |E^P|) / 2 - |K^P|, in total and per degree.
ExtensionDimension ext_dimension(unsigned n);

/// The same dimension obtained by walking the generator list, pairing each
/// label with its sigma image and keeping fixed labels of sign +1.
PoincareTable ext_dimension_by_orbits(unsigned n);

}  // namespace braidinv
