#include "braidinv/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "braidinv/errors.hpp"

namespace braidinv {

unsigned DeltaMap::weight() const {
  return static_cast<unsigned>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

DeltaMap DeltaMap::complement() const {
  DeltaMap out{bits};
  for (auto& b : out.bits) b = static_cast<std::uint8_t>(1 - b);
  return out;
}

InvariantCycle::InvariantCycle(unsigned length, Word gaps) : length_(length) {
  if (length == 0) throw DomainError("invariant cycle on a cycle of length 0");
  if (gaps.empty()) {
    symmetry_ = length;
    return;
  }
  if (gaps.size() > length) throw DomainError("more 1-strands than cycle positions");
  const auto sum = std::accumulate(gaps.begin(), gaps.end(), std::uint64_t{0});
  if (sum + gaps.size() != length)
    throw DomainError("gap word of " + std::to_string(gaps.size()) + " entries summing to " +
                      std::to_string(sum) + " does not close up on a cycle of length " +
                      std::to_string(length));
  auto rot = min_rotation(gaps);
  gaps_ = std::move(rot.word);
  symmetry_ = rot.multiplicity;
}

InvariantCycle InvariantCycle::empty(unsigned length) { return InvariantCycle(length, {}); }

std::string InvariantCycle::to_string() const {
  if (gaps_.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gaps_.size(); ++i) os << (i ? "," : "") << gaps_[i];
  os << ')';
  return os.str();
}

DeltaMap delta_from_permutation(const Permutation& s, unsigned q) {
  const unsigned n = s.size();
  if (q > n) throw DomainError("delta_from_permutation: q > n");
  DeltaMap d;
  d.bits.resize(n);
  for (unsigned i = 0; i < n; ++i) d.bits[i] = s(i) >= n - q ? 1 : 0;
  return d;
}

std::vector<unsigned> block_support(const DeltaMap& delta, const Partition& lam, unsigned i) {
  if (delta.size() != lam.n()) throw DomainError("delta length differs from partition total");
  if (i >= lam.part_count()) throw DomainError("block index out of range");
  std::vector<unsigned> out;
  const unsigned start = lam.offset(i);
  for (unsigned p = start; p < start + lam[i]; ++p)
    if (delta.bits[p]) out.push_back(p + 1);
  return out;
}

Word gap_word(const std::vector<unsigned>& support, unsigned length, GapConvention convention) {
  Word w;
  const std::size_t d = support.size();
  if (d == 0) return w;
  if (d == 1) return Word{length - 1};
  for (std::size_t k = 1; k < d; ++k) w.push_back(support[k] - support[k - 1] - 1);
  unsigned wrap = length - support.back() + support.front();
  if (convention == GapConvention::Cyclic) wrap -= 1;
  w.push_back(wrap);
  return w;
}

InvariantCycle invariant_cycle(const DeltaMap& delta, const Partition& lam, unsigned i) {
  auto support = block_support(delta, lam, i);
  const unsigned start = lam.offset(i);
  for (auto& p : support) p -= start;  // relative, still 1-based
  return InvariantCycle(lam[i], gap_word(support, lam[i]));
}

Word dual_gap_word(const Word& gaps) {
  const std::size_t len = gaps.size();
  std::size_t last = len;
  for (std::size_t i = len; i-- > 0;)
    if (gaps[i] > 0) {
      last = i;
      break;
    }
  if (last == len) throw DomainError("dual_gap_word needs a positive entry");
  // Read the word as runs 0^{b_1} a_1 0^{b_2} a_2 ... ending on a positive
  // entry; the dual is (b_1+1) 0^{a_1-1} (b_2+1) 0^{a_2-1} ...
  Word out;
  std::uint32_t zeros = 0;
  for (std::size_t k = 0; k < len; ++k) {
    auto g = gaps[(last + 1 + k) % len];
    if (g == 0) {
      ++zeros;
      continue;
    }
    out.push_back(zeros + 1);
    out.insert(out.end(), g - 1, 0u);
    zeros = 0;
  }
  return out;
}

InvariantCycle dual_cycle(const InvariantCycle& chi) {
  const unsigned len = chi.length();
  if (chi.is_empty()) return InvariantCycle(len, Word(len, 0u));
  if (chi.weight() == len) return InvariantCycle::empty(len);
  return InvariantCycle(len, dual_gap_word(chi.gaps()));
}

bool cycle_admissible(const InvariantCycle& chi) {
  const unsigned len = chi.length();
  const unsigned d = chi.weight();
  const unsigned sym = chi.symmetry();
  if (len >= 3 && (d < 1 || d > len - 1)) return false;
  const unsigned r = len % 4;
  if (len >= 3 && r != 2 && sym != 1) return false;
  if (len >= 2 && r == 2 && sym > 2) return false;
  return true;
}

namespace {

void weak_compositions(unsigned total, unsigned slots, Word& cur, std::vector<Word>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned v = 0; v <= total; ++v) {
    cur.push_back(v);
    weak_compositions(total - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<InvariantCycle> enumerate_pi(unsigned length, unsigned weight) {
  if (length == 0) throw DomainError("enumerate_pi: length must be positive");
  if (weight > length) throw DomainError("enumerate_pi: weight exceeds cycle length");
  std::vector<InvariantCycle> out;
  if (weight == 0) {
    auto e = InvariantCycle::empty(length);
    if (cycle_admissible(e)) out.push_back(e);
    return out;
  }
  std::vector<Word> words;
  Word cur;
  weak_compositions(length - weight, weight, cur, words);
  for (auto& w : words) {
    if (min_rotation(w).word != w) continue;
    InvariantCycle chi(length, w);
    if (cycle_admissible(chi)) out.push_back(std::move(chi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InvariantCycle> enumerate_selfdual(unsigned d) {
  if (d == 0) throw DomainError("enumerate_selfdual: d must be positive");
  if (d > 24) throw CapabilityError("enumerate_selfdual: 2^d seeds beyond d = 24");
  const unsigned len = 2 * d;
  std::vector<unsigned> shifts;
  for (unsigned k = 2; k <= d; ++k)
    if (d % k == 0) shifts.push_back(d / k);

  std::set<InvariantCycle> found;
  std::vector<std::uint8_t> bits(len);
  std::vector<unsigned> support;
  for (std::uint32_t seed = 0; seed < (1u << d); ++seed) {
    for (unsigned j = 0; j < d; ++j) {
      bits[j] = (seed >> j) & 1u;
      bits[j + d] = static_cast<std::uint8_t>(1 - bits[j]);
    }
    bool excluded = false;
    for (unsigned sh : shifts) {
      bool anti = true;
      for (unsigned j = 0; j < len && anti; ++j) anti = bits[j] != bits[(j + sh) % len];
      if (anti) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    support.clear();
    for (unsigned j = 0; j < len; ++j)
      if (bits[j]) support.push_back(j + 1);
    found.insert(InvariantCycle(len, gap_word(support, len)));
  }
  return {found.begin(), found.end()};
}

BigInt selfdual_count_closed_form(unsigned d) {
  if (d == 0) throw DomainError("selfdual_count_closed_form: d must be positive");
  const auto primes = odd_prime_factors(d);
  BigInt sum = 0;
  const std::size_t m = primes.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    unsigned prod = 1;
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        prod *= primes[i];
        sign = -sign;
      }
    BigInt term = BigInt(1) << (d / prod);
    sum += sign > 0 ? term : BigInt(-term);
  }
  const BigInt denom = 2 * BigInt(d);
  if (sum < 0 || sum % denom != 0)
    throw ConsistencyError("self-dual count for d=" + std::to_string(d) + " is not a natural number");
  return sum / denom;
}

std::vector<std::uint8_t> pattern_of(const InvariantCycle& chi) {
  std::vector<std::uint8_t> out;
  out.reserve(chi.length());
  if (chi.is_empty()) {
    out.assign(chi.length(), 0);
    return out;
  }
  for (auto g : chi.gaps()) {
    out.push_back(1);
    out.insert(out.end(), g, std::uint8_t{0});
  }
  return out;
}

}  // namespace braidinv
