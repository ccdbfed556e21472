#include "braidinv/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

PolyDivision divide_monic(const IntPoly& a, const IntPoly& divisor) {
  IntPoly b = divisor;
  trim(b);
  if (b.empty() || b.back() != 1) throw DomainError("divide_monic: divisor must be monic");
  IntPoly r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  if (r.size() <= db) return {{}, r};
  IntPoly q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const BigInt c = r[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  trim(r);
  trim(q);
  return {q, r};
}

const IntPoly& cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<IntPoly>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }
  IntPoly p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    auto div = divide_monic(p, cyclotomic_polynomial(d));
    if (!div.remainder.empty())
      throw ConsistencyError("x^L - 1 not divisible by a lower cyclotomic factor");
    p = std::move(div.quotient);
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(order, std::make_unique<IntPoly>(std::move(p)));
  return *it->second;
}

CyclotomicSum::CyclotomicSum(unsigned order) : coeffs_(order, 0) {
  if (order == 0) throw DomainError("CyclotomicSum: order must be positive");
}

CyclotomicSum CyclotomicSum::root_power(unsigned order, long exponent) {
  CyclotomicSum s(order);
  s.add_power(exponent);
  return s;
}

void CyclotomicSum::add_power(long exponent, const BigInt& count) {
  const long L = static_cast<long>(order());
  long k = exponent % L;
  if (k < 0) k += L;
  coeffs_[static_cast<std::size_t>(k)] += count;
}

IntPoly CyclotomicSum::reduced() const {
  return divide_monic(coeffs_, cyclotomic_polynomial(order())).remainder;
}

std::optional<BigInt> CyclotomicSum::as_integer() const {
  auto r = reduced();
  if (r.empty()) return BigInt(0);
  if (r.size() == 1) return r[0];
  return std::nullopt;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
  if (other.order() != order()) throw DomainError("adding cyclotomic sums of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
  if (a.order() != b.order()) throw DomainError("multiplying cyclotomic sums of different order");
  const std::size_t L = a.order();
  CyclotomicSum out(a.order());
  for (std::size_t i = 0; i < L; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < L; ++j)
      if (b.coeffs_[j] != 0) out.coeffs_[(i + j) % L] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
  return a.order() == b.order() && a.reduced() == b.reduced();
}

}  // namespace braidinv
