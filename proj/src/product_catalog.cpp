#include "braidinv/product_catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidinv/errors.hpp"

namespace braidinv {

unsigned MarkedPartition::total_weight() const {
  return std::accumulate(marks.begin(), marks.end(), 0u);
}

unsigned GeneratorLabel::total_weight() const {
  unsigned w = 0;
  for (const auto& c : cycles) w += c.weight();
  return w;
}

std::string GeneratorLabel::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) os << ' ';
    os << partition[i] << ':' << cycles[i].to_string();
  }
  os << ']';
  return os.str();
}

void PoincareTable::add(unsigned degree, const BigInt& amount) {
  if (n_ > 0 && degree >= n_) throw DomainError("degree outside [0, n-1]");
  if (amount == 0) return;
  auto& slot = entries_[degree];
  slot += amount;
  if (slot == 0) entries_.erase(degree);
}

BigInt PoincareTable::at(unsigned degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt PoincareTable::total() const {
  BigInt t = 0;
  for (const auto& [deg, dim] : entries_) t += dim;
  return t;
}

bool cycle_precedes(const InvariantCycle& a, const InvariantCycle& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a < b;
}

void canonicalize(GeneratorLabel& label) {
  for (const auto& blk : label.partition.blocks()) {
    auto first = label.cycles.begin() + blk.first;
    std::sort(first, first + blk.multiplicity, cycle_precedes);
  }
}

bool label_is_valid(const GeneratorLabel& label) {
  const auto& lam = label.partition;
  if (label.cycles.size() != lam.part_count()) return false;
  for (unsigned i = 0; i < lam.part_count(); ++i) {
    const auto& c = label.cycles[i];
    if (c.length() != lam[i] || !cycle_admissible(c)) return false;
    if (i > 0 && lam[i] == lam[i - 1]) {
      const auto& prev = label.cycles[i - 1];
      if (cycle_precedes(c, prev)) return false;
      if (lam[i] % 2 == 0 && c == prev) return false;
    }
  }
  return true;
}

namespace {

void marks_rec(const std::vector<Block>& blocks, std::size_t bi, unsigned slot, unsigned cap,
               unsigned remaining, std::vector<unsigned>& cur, const Partition& lam,
               std::vector<MarkedPartition>& out) {
  if (bi == blocks.size()) {
    if (remaining == 0) out.push_back({lam, cur});
    return;
  }
  const auto& blk = blocks[bi];
  if (slot == blk.multiplicity) {
    unsigned next_cap = bi + 1 < blocks.size() ? blocks[bi + 1].value : 0;
    marks_rec(blocks, bi + 1, 0, next_cap, remaining, cur, lam, out);
    return;
  }
  for (unsigned d = std::min(cap, remaining) + 1; d-- > 0;) {
    cur.push_back(d);
    marks_rec(blocks, bi, slot + 1, d, remaining - d, cur, lam, out);
    cur.pop_back();
  }
}

// Options for one cycle of a given length, in canonical order.
std::vector<InvariantCycle> cycle_options(unsigned length) {
  std::vector<InvariantCycle> opts;
  for (unsigned d = length + 1; d-- > 0;) {
    auto pi = enumerate_pi(length, d);
    opts.insert(opts.end(), pi.begin(), pi.end());
  }
  return opts;
}

struct GeneratorBuilder {
  const Partition& lam;
  std::vector<Block> blocks;
  std::vector<std::vector<InvariantCycle>> options;  // per block
  std::vector<InvariantCycle> cur;
  std::vector<GeneratorLabel>& out;

  void run(std::size_t bi, unsigned slot, std::size_t min_opt, unsigned remaining) {
    if (bi == blocks.size()) {
      if (remaining == 0) out.push_back({lam, cur});
      return;
    }
    const auto& blk = blocks[bi];
    if (slot == blk.multiplicity) {
      run(bi + 1, 0, 0, remaining);
      return;
    }
    const bool strict = blk.value % 2 == 0;
    const auto& opts = options[bi];
    for (std::size_t o = min_opt; o < opts.size(); ++o) {
      if (opts[o].weight() > remaining) continue;
      cur.push_back(opts[o]);
      run(bi, slot + 1, strict ? o + 1 : o, remaining - opts[o].weight());
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<MarkedPartition> enumerate_marked(unsigned n, unsigned q) {
  if (n == 0 || q > n) throw DomainError("enumerate_marked: need n >= 1 and q <= n");
  std::vector<MarkedPartition> out;
  for (const auto& lam : enumerate_partitions(n)) {
    auto blocks = lam.blocks();
    std::vector<unsigned> cur;
    marks_rec(blocks, 0, 0, blocks.front().value, q, cur, lam, out);
  }
  return out;
}

std::vector<GeneratorLabel> enumerate_generators(unsigned n, unsigned q) {
  if (n == 0 || q > n) throw DomainError("enumerate_generators: need n >= 1 and q <= n");
  std::vector<GeneratorLabel> out;
  for (const auto& lam : enumerate_partitions(n)) {
    GeneratorBuilder b{lam, lam.blocks(), {}, {}, out};
    for (const auto& blk : b.blocks) b.options.push_back(cycle_options(blk.value));
    b.run(0, 0, 0, q);
  }
  return out;
}

PoincareTable product_dimension(unsigned n, unsigned q) {
  PoincareTable t(n);
  for (const auto& g : enumerate_generators(n, q)) t.add(g.degree(), 1);
  return t;
}

namespace {

using WeightPoly = std::vector<BigInt>;  // coefficient of t^w

WeightPoly block_polynomial(const Block& blk) {
  const unsigned v = blk.value, m = blk.multiplicity;
  const bool strict = v % 2 == 0;
  // dp[j][w]: ways to fill j slots with total weight w
  std::vector<WeightPoly> dp(m + 1, WeightPoly(m * v + 1, 0));
  dp[0][0] = 1;
  for (unsigned d = 0; d <= v; ++d) {
    const auto c = enumerate_pi(v, d).size();
    if (c == 0) continue;
    std::vector<WeightPoly> next = dp;
    for (unsigned j = 0; j <= m; ++j)
      for (unsigned w = 0; w <= m * v; ++w) {
        if (dp[j][w] == 0) continue;
        for (unsigned k = 1; j + k <= m; ++k) {
          BigInt ways = strict ? binomial(c, k) : binomial(c + k - 1, k);
          if (ways == 0) break;
          next[j + k][w + k * d] += dp[j][w] * ways;
        }
      }
    dp = std::move(next);
  }
  return dp[m];
}

}  // namespace

PoincareTable product_dimension_counted(unsigned n, unsigned q) {
  if (n == 0 || q > n) throw DomainError("product_dimension_counted: need n >= 1 and q <= n");
  PoincareTable t(n);
  for (const auto& lam : enumerate_partitions(n)) {
    WeightPoly acc{1};
    for (const auto& blk : lam.blocks()) {
      auto bp = block_polynomial(blk);
      WeightPoly prod(acc.size() + bp.size() - 1, 0);
      for (std::size_t a = 0; a < acc.size(); ++a)
        if (acc[a] != 0)
          for (std::size_t b = 0; b < bp.size(); ++b) prod[a + b] += acc[a] * bp[b];
      acc = std::move(prod);
    }
    if (q < acc.size()) t.add(lam.degree(), acc[q]);
  }
  return t;
}

}  // namespace braidinv
