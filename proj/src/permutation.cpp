#include "braidinv/permutation.hpp"

#include <numeric>

#include "braidinv/errors.hpp"

namespace braidinv {

Permutation::Permutation(unsigned n) : images_(n) {
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw DomainError("not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::from_one_line(const std::vector<unsigned>& one_based) {
  std::vector<std::uint8_t> img;
  img.reserve(one_based.size());
  for (auto v : one_based) {
    if (v == 0) throw DomainError("one-line notation is 1-based");
    img.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(unsigned n, std::initializer_list<std::vector<unsigned>> cycles) {
  Permutation p(n);
  std::vector<char> used(n, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      unsigned a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a == 0 || a > n || b == 0 || b > n || used[a - 1])
        throw DomainError("bad cycle notation");
      used[a - 1] = 1;
      p.images_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint32_t factorial32(unsigned n) {
  if (n > 12) throw CapabilityError("factorial32 overflows beyond 12");
  std::uint32_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint32_t Permutation::rank() const {
  const unsigned n = size();
  std::uint32_t r = 0;
  std::uint32_t used = 0;  // bitmask of consumed values
  for (unsigned i = 0; i < n; ++i) {
    unsigned v = images_[i];
    unsigned smaller = static_cast<unsigned>(__builtin_popcount(~used & ((1u << v) - 1)));
    r += smaller * factorial32(n - 1 - i);
    used |= 1u << v;
  }
  return r;
}

Permutation Permutation::unrank(unsigned n, std::uint32_t rank) {
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  std::vector<std::uint8_t> img;
  img.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::uint32_t f = factorial32(n - 1 - i);
    unsigned idx = rank / f;
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different degree");
  Permutation p;
  p.images_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

}  // namespace braidinv
