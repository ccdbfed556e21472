#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/combinatorics.hpp"
#include "braidinv/cyclotomic.hpp"
#include "braidinv/permutation.hpp"
#include "braidinv/product_catalog.hpp"

namespace braidinv {

enum class GroupKind { Product, Extension, Full };

/// The subgroups of S_n the oracle can restrict to:
///   Product   S_{n-q} x S_q, the first n-q points and the last q points
///   Extension S_q x S_q together with the block flip i <-> n+1-i, n = 2q
///   Full      S_n
class GroupSpec {
public:
  static GroupSpec product(unsigned n, unsigned q);
  static GroupSpec extension(unsigned q);
  static GroupSpec full(unsigned n);

  GroupKind kind() const { return kind_; }
  unsigned n() const { return n_; }
  /// Size of the marked block; 0 for the full group.
  unsigned q() const { return q_; }

  bool contains(const Permutation& g) const;
  BigInt order() const;
  std::vector<Permutation> generators() const;
  /// Every element, by filtering S_n (n <= 8).
  std::vector<Permutation> elements() const;
  std::string name() const;

private:
  GroupSpec(GroupKind kind, unsigned n, unsigned q) : kind_(kind), n_(n), q_(q) {}
  GroupKind kind_;
  unsigned n_;
  unsigned q_;
};

/// An element of the centralizer Z_lambda written as nu * c: first rotate
/// cycle i by exponents[i] steps, then move cycle i onto cycle
/// cycle_image[i] (a permutation of equal-length cycles).
struct CentralizerElement {
  Permutation perm;
  std::vector<unsigned> cycle_image;
  std::vector<unsigned> exponents;
};

/// Centralizer of the standard permutation of cycle type lambda (consecutive
/// cycles), as the semidirect product of block swaps and cycle rotations.
struct CentralizerPresentation {
  Partition lam;
  std::vector<Permutation> nu_generators;     // swap adjacent equal cycles
  std::vector<Permutation> cycle_generators;  // one rotation per part

  BigInt order() const;
  std::vector<Permutation> generators() const;
  /// Streams every element together with its nu * c decomposition.
  void for_each_element(const std::function<void(const CentralizerElement&)>& visit) const;
};

CentralizerPresentation build_centralizer(const Partition& lam);

/// Order L of the root-of-unity lattice used for zeta_lambda: lcm of the
/// parts, doubled if odd, so -1 is zeta_L^{L/2}.
unsigned zeta_order(const Partition& lam);

/// nu * c decomposition of z, or nullopt when z does not centralize c_lambda.
std::optional<CentralizerElement> decompose_centralizer(const Partition& lam, const Permutation& z);

/// Exponent k with zeta_lambda(z) = zeta_L^k.
unsigned zeta_exponent(const Partition& lam, const CentralizerElement& z);

/// zeta_lambda(z) = alpha(nu) * prod_i zeta_{lambda_i}^{e_i} * sign(c). Throws
/// DomainError when z is not in Z_lambda.
CyclotomicSum zeta_value(const Partition& lam, const Permutation& z);

enum class CosetMode { Auto, Generic, DeltaClass };

/// Representatives of G \ S_n / Z_lambda. Generic mode partitions S_n into
/// orbits of (g, s, z) -> g s z and is limited to n <= 10; delta-class mode
/// enumerates Z_lambda-orbits of 0/1 labellings. Auto picks generic up to
/// n = 8.
std::vector<Permutation> double_cosets(const GroupSpec& group, const Partition& lam,
                                       CosetMode mode = CosetMode::Auto);

struct Isotropy {
  BigInt order;        // |s Z_lambda s^-1 cap G|
  CyclotomicSum sum;   // sum of zeta over the isotropy group
};

Isotropy isotropy(const Permutation& s, const Partition& lam, const GroupSpec& group);

/// (s (x) zeta_lambda, 1) on the isotropy group: 0 or 1. Throws
/// ConsistencyError if the character sum is not 0 or the group order.
int isotropy_inner_product(const Permutation& s, const Partition& lam, const GroupSpec& group);

struct OracleOptions {
  CosetMode mode = CosetMode::Auto;
  unsigned workers = 1;
  bool long_running = false;
  std::function<void(const std::string&)> progress;  // diagnostic stream only
};

/// Dimension of the G-invariants of H^*(P_n), degree by degree, straight from
/// the induced-character decomposition. n <= 8, or n <= 10 when long_running.
PoincareTable oracle_dimension(unsigned n, const GroupSpec& group, const OracleOptions& opts = {});

struct RankCheck {
  bool ok = true;
  std::string report;
};

/// Checks sum over lambda and cosets of [G : isotropy] against the number of
/// permutations of [n] with n - i cycles, for every product group and, for
/// even n, the extension group.
RankCheck total_rank_check(unsigned n);

}  // namespace braidinv
