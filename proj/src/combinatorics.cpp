#include "braidinv/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "braidinv/errors.hpp"

namespace braidinv {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<Block> Partition::blocks() const {
  std::vector<Block> out;
  for (unsigned i = 0; i < parts_.size(); ++i) {
    if (!out.empty() && out.back().value == parts_[i]) {
      ++out.back().multiplicity;
    } else {
      out.push_back({parts_[i], 1, i});
    }
  }
  return out;
}

unsigned Partition::offset(std::size_t i) const {
  return std::accumulate(parts_.begin(), parts_.begin() + static_cast<long>(i), 0u);
}

namespace {

void partitions_rec(unsigned remaining, unsigned slots, unsigned cap,
                    std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  // each remaining slot needs at least 1
  unsigned hi = std::min(cap, remaining - (slots - 1));
  for (unsigned v = hi; v >= 1; --v) {
    if (v * slots < remaining) break;
    cur.push_back(v);
    partitions_rec(remaining - v, slots - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned n, unsigned part_count) {
  if (n == 0 || part_count == 0 || part_count > n)
    throw DomainError("enumerate_partitions: need 1 <= part_count <= n, got n=" +
                      std::to_string(n) + " part_count=" + std::to_string(part_count));
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(n, part_count, n, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  for (unsigned j = 1; j <= n; ++j) {
    auto part = enumerate_partitions(n, j);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BigInt binomial(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
  unsigned long k = std::min<unsigned long>(static_cast<unsigned long>(b),
                                            a - static_cast<unsigned long>(b));
  BigInt r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= a - k + i;
    r /= i;
  }
  return r;
}

BigInt compositions_count(unsigned m, unsigned b) {
  if (m == 0 || b == 0) throw DomainError("compositions_count: m and b must be positive");
  return binomial(m - 1, static_cast<long>(b) - 1);
}

Rotation min_rotation(const Word& w) {
  if (w.empty()) throw DomainError("min_rotation of an empty word");
  const std::size_t len = w.size();
  auto less_rot = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < len; ++i) {
      auto x = w[(a + i) % len], y = w[(b + i) % len];
      if (x != y) return x < y;
    }
    return false;
  };
  std::size_t best = 0;
  for (std::size_t r = 1; r < len; ++r)
    if (less_rot(r, best)) best = r;
  unsigned mult = 0;
  for (std::size_t r = 0; r < len; ++r)
    if (!less_rot(r, best) && !less_rot(best, r)) ++mult;
  Rotation out;
  out.word.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.word.push_back(w[(best + i) % len]);
  out.multiplicity = mult;
  return out;
}

std::vector<unsigned> odd_prime_factors(unsigned d) {
  if (d == 0) throw DomainError("odd_prime_factors: d must be positive");
  while (d % 2 == 0) d /= 2;
  std::vector<unsigned> out;
  for (unsigned p = 3; p * p <= d; p += 2) {
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

std::vector<BigInt> permutation_cycle_counts(unsigned n) {
  if (n > 10) throw CapabilityError("permutation_cycle_counts: n > 10");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    ++counts[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<BigInt> out(counts.begin(), counts.end());
  return out;
}

}  // namespace braidinv
