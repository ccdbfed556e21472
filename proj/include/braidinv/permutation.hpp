#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace braidinv {

/// Permutation of {0, ..., n-1} stored as its image table. Composition is
/// right-to-left: (a * b)(i) == a(b(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(unsigned n);  // identity
  /// Throws DomainError if the table is not a bijection of [0, n).
  explicit Permutation(std::vector<std::uint8_t> images);

  /// 1-based one-line notation.
  static Permutation from_one_line(const std::vector<unsigned>& one_based);
  /// Product of disjoint 1-based cycles on [1, n].
  static Permutation from_cycles(unsigned n, std::initializer_list<std::vector<unsigned>> cycles);

  unsigned size() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  /// Position in lexicographic order of S_n (n <= 12).
  std::uint32_t rank() const;
  static Permutation unrank(unsigned n, std::uint32_t rank);

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint8_t> images_;
};

/// n! for n <= 12.
std::uint32_t factorial32(unsigned n);

}  // namespace braidinv
