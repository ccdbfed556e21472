#pragma once

#include <optional>
#include <vector>

#include "braidinv/bigint.hpp"

namespace braidinv {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<BigInt>;

/// Quotient and remainder of a by a monic divisor.
struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PolyDivision divide_monic(const IntPoly& a, const IntPoly& divisor);

/// The L-th cyclotomic polynomial, obtained by dividing x^L - 1 by every
/// Phi_d with d a proper divisor of L. Results are cached process-wide.
const IntPoly& cyclotomic_polynomial(unsigned order);

/// Element of Z[zeta_L] written as sum_k c_k zeta_L^k, k in [0, L). Two sums
/// are equal when their remainders modulo Phi_L agree.
class CyclotomicSum {
public:
  explicit CyclotomicSum(unsigned order);

  static CyclotomicSum root_power(unsigned order, long exponent);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  void add_power(long exponent, const BigInt& count = 1);

  /// Remainder modulo Phi_L, trailing zeros trimmed.
  IntPoly reduced() const;
  /// The integer value when the sum reduces to a constant.
  std::optional<BigInt> as_integer() const;

  CyclotomicSum& operator+=(const CyclotomicSum& other);
  friend CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b);
  friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);

private:
  std::vector<BigInt> coeffs_;
};

}  // namespace braidinv
