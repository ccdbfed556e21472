#include "braidinv/extension_catalog.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

void require_even(unsigned n, const char* who) {
  if (n == 0 || n % 2 != 0)
    throw DomainError(std::string(who) + ": n must be a positive even number, got " +
                      std::to_string(n));
}

}  // namespace

unsigned PairedMarkedPartition::half_weight_pairs(std::size_t block) const {
  const auto blocks = marked.partition.blocks();
  const auto& blk = blocks.at(block);
  const unsigned k = pair_counts.at(block);
  if (blk.value % 2 != 0) return 0;
  unsigned h = 0;
  for (unsigned j = 0; j < k; ++j)
    if (2 * marked.marks[blk.first + j] == blk.value) ++h;
  return h;
}

MarkedPartition PairedMarkedPartition::to_marked() const {
  MarkedPartition out = marked;
  for (const auto& blk : marked.partition.blocks()) {
    auto first = out.marks.begin() + blk.first;
    std::sort(first, first + blk.multiplicity, std::greater<>());
  }
  return out;
}

GeneratorLabel sigma_dual_label(const GeneratorLabel& label) {
  GeneratorLabel out{label.partition, {}};
  out.cycles.reserve(label.cycles.size());
  for (const auto& c : label.cycles) out.cycles.push_back(dual_cycle(c));
  canonicalize(out);
  if (!label_is_valid(out))
    throw ConsistencyError("sigma image of " + label.to_string() + " is not a generator");
  return out;
}

// ---------------------------------------------------------------------------
// E

namespace {

struct BlockLayout {
  unsigned k = 0;
  std::vector<unsigned> marks;  // E arrangement for this block
};

std::vector<BlockLayout> block_layouts(const Block& blk) {
  const unsigned v = blk.value, m = blk.multiplicity;
  std::vector<BlockLayout> out;
  const unsigned lo = (v + 1) / 2;  // smallest top weight; v/2 only for even v
  for (unsigned k = 0; 2 * k <= m; ++k) {
    const unsigned tail = m - 2 * k;
    if (tail > 0 && v % 2 != 0) continue;
    // weakly decreasing top weights in [lo, v]
    std::vector<unsigned> tops(k, v);
    while (true) {
      BlockLayout lay{k, {}};
      lay.marks = tops;
      for (unsigned j = k; j-- > 0;) lay.marks.push_back(v - tops[j]);
      lay.marks.insert(lay.marks.end(), tail, v / 2);
      out.push_back(std::move(lay));
      // next weakly decreasing sequence, descending lex
      int pos = static_cast<int>(k) - 1;
      while (pos >= 0 && tops[static_cast<unsigned>(pos)] == lo) --pos;
      if (pos < 0) break;
      unsigned nv = tops[static_cast<unsigned>(pos)] - 1;
      for (unsigned j = static_cast<unsigned>(pos); j < k; ++j) tops[j] = nv;
    }
  }
  return out;
}

}  // namespace

std::vector<PairedMarkedPartition> enumerate_E(unsigned n) {
  require_even(n, "enumerate_E");
  std::vector<PairedMarkedPartition> out;
  for (const auto& lam : enumerate_partitions(n)) {
    const auto blocks = lam.blocks();
    std::vector<std::vector<BlockLayout>> per_block;
    bool feasible = true;
    for (const auto& blk : blocks) {
      per_block.push_back(block_layouts(blk));
      if (per_block.back().empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(blocks.size(), 0);
    while (true) {
      PairedMarkedPartition pmp{{lam, {}}, {}};
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& lay = per_block[b][idx[b]];
        pmp.marked.marks.insert(pmp.marked.marks.end(), lay.marks.begin(), lay.marks.end());
        pmp.pair_counts.push_back(lay.k);
      }
      out.push_back(std::move(pmp));
      std::size_t b = blocks.size();
      while (b-- > 0) {
        if (++idx[b] < per_block[b].size()) break;
        idx[b] = 0;
      }
      if (b == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

int epsilon_sign(const PairedMarkedPartition& pmp) {
  const auto blocks = pmp.marked.partition.blocks();
  unsigned parity = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const long v = blocks[b].value, m = blocks[b].multiplicity, k = pmp.pair_counts[b];
    const long e = m * (v - 1) * (v - 2) / 2 + (v - 1) * (v - 1) * k * (2 * k - 1);
    parity ^= static_cast<unsigned>(e & 1u);
  }
  return parity ? -1 : 1;
}

bool kernel_condition(const PairedMarkedPartition& pmp) {
  const auto blocks = pmp.marked.partition.blocks();
  unsigned hits = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const unsigned v4 = blocks[b].value % 4, m4 = blocks[b].multiplicity % 4;
    const bool k_odd = pmp.pair_counts[b] % 2 == 1;
    const bool m_odd = m4 == 1 || m4 == 3;
    bool hit = false;
    if (!k_odd && (v4 == 0 || v4 == 3) && m_odd) hit = true;
    if (k_odd && v4 == 2) hit = true;
    if (k_odd && v4 == 0 && !m_odd) hit = true;
    if (k_odd && v4 == 3 && m_odd) hit = true;
    if (hit) ++hits;
  }
  return hits % 2 == 1;
}

// ---------------------------------------------------------------------------
// E^P by enumeration

namespace {

using Seq = std::vector<InvariantCycle>;

void choose_rec(const std::vector<InvariantCycle>& pool, unsigned count, bool strict,
                std::size_t from, Seq& cur, std::vector<Seq>& out) {
  if (cur.size() == count) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    choose_rec(pool, count, strict, strict ? i + 1 : i, cur, out);
    cur.pop_back();
  }
}

std::vector<Seq> choose(const std::vector<InvariantCycle>& pool, unsigned count, bool strict) {
  std::vector<Seq> out;
  Seq cur;
  choose_rec(pool, count, strict, 0, cur, out);
  return out;
}

// All cycle fillings of one run of equal parts in E arrangement.
std::vector<Seq> block_fillings(unsigned v, const std::vector<unsigned>& marks, unsigned k) {
  const unsigned m = static_cast<unsigned>(marks.size());
  const bool strict = v % 2 == 0;
  std::map<unsigned, unsigned, std::greater<>> top_groups;  // weight -> count
  for (unsigned j = 0; j < k; ++j) ++top_groups[marks[j]];

  std::vector<std::vector<Seq>> parts;
  for (const auto& [d, c] : top_groups) {
    auto pool = enumerate_pi(v, d);
    if (2 * d == v) {
      std::erase_if(pool, [](const InvariantCycle& x) { return !(x < dual_cycle(x)); });
    }
    parts.push_back(choose(pool, c, strict));
  }
  const unsigned tail = m - 2 * k;
  if (tail > 0) parts.push_back(choose(enumerate_selfdual(v / 2), tail, true));

  std::vector<Seq> out{Seq{}};
  for (const auto& options : parts) {
    std::vector<Seq> next;
    for (const auto& prefix : out)
      for (const auto& opt : options) {
        Seq s = prefix;
        s.insert(s.end(), opt.begin(), opt.end());
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  // out holds k tops followed by the tail; expand tops into pairs
  for (auto& s : out) {
    Seq full(s.begin(), s.begin() + k);
    for (unsigned j = k; j-- > 0;) full.push_back(dual_cycle(s[j]));
    full.insert(full.end(), s.begin() + k, s.end());
    std::sort(full.begin(), full.end(), cycle_precedes);
    s = std::move(full);
  }
  return out;
}

}  // namespace

std::vector<SignedGenerator> enumerate_signed_EP(unsigned n) {
  require_even(n, "enumerate_EP");
  std::vector<SignedGenerator> out;
  for (const auto& pmp : enumerate_E(n)) {
    const auto& lam = pmp.marked.partition;
    const auto blocks = lam.blocks();
    const int sign = epsilon_sign(pmp);
    std::vector<Seq> labels{Seq{}};
    for (std::size_t b = 0; b < blocks.size() && !labels.empty(); ++b) {
      const auto& blk = blocks[b];
      std::vector<unsigned> marks(pmp.marked.marks.begin() + blk.first,
                                  pmp.marked.marks.begin() + blk.first + blk.multiplicity);
      auto fills = block_fillings(blk.value, marks, pmp.pair_counts[b]);
      std::vector<Seq> next;
      for (const auto& prefix : labels)
        for (const auto& f : fills) {
          Seq s = prefix;
          s.insert(s.end(), f.begin(), f.end());
          next.push_back(std::move(s));
        }
      labels = std::move(next);
    }
    for (auto& cycles : labels) {
      GeneratorLabel g{lam, std::move(cycles)};
      if (!label_is_valid(g))
        throw ConsistencyError("E^P construction produced invalid label " + g.to_string());
      out.push_back({std::move(g), sign, pmp});
    }
  }
  return out;
}

std::vector<GeneratorLabel> enumerate_EP(unsigned n) {
  std::vector<GeneratorLabel> out;
  for (auto& s : enumerate_signed_EP(n)) out.push_back(std::move(s.label));
  return out;
}

std::vector<GeneratorLabel> enumerate_KP(unsigned n) {
  std::vector<GeneratorLabel> out;
  for (auto& s : enumerate_signed_EP(n))
    if (s.sign < 0) out.push_back(std::move(s.label));
  return out;
}

std::optional<PairedMarkedPartition> paired_structure(const GeneratorLabel& label) {
  PairedMarkedPartition pmp{{label.partition, {}}, {}};
  for (const auto& blk : label.partition.blocks()) {
    const unsigned v = blk.value;
    std::vector<InvariantCycle> cyc(label.cycles.begin() + blk.first,
                                    label.cycles.begin() + blk.first + blk.multiplicity);
    std::vector<InvariantCycle> duals;
    for (const auto& c : cyc) duals.push_back(dual_cycle(c));
    std::sort(duals.begin(), duals.end(), cycle_precedes);
    if (duals != cyc) return std::nullopt;
    std::vector<unsigned> tops;
    unsigned self = 0;
    for (const auto& c : cyc) {
      const unsigned d = c.weight();
      if (2 * d > v || (2 * d == v && c < dual_cycle(c))) tops.push_back(d);
      else if (2 * d == v && c == dual_cycle(c)) ++self;
    }
    std::sort(tops.begin(), tops.end(), std::greater<>());
    const auto k = static_cast<unsigned>(tops.size());
    for (auto d : tops) pmp.marked.marks.push_back(d);
    for (unsigned j = k; j-- > 0;) pmp.marked.marks.push_back(v - tops[j]);
    pmp.marked.marks.insert(pmp.marked.marks.end(), self, v / 2);
    pmp.pair_counts.push_back(k);
  }
  return pmp;
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

BigInt block_factor(unsigned v, const std::vector<unsigned>& marks, unsigned k) {
  const unsigned m = static_cast<unsigned>(marks.size());
  std::map<unsigned, unsigned> strict_tops;  // weight > v/2 -> count
  unsigned half = 0;
  for (unsigned j = 0; j < k; ++j) {
    if (2 * marks[j] > v) ++strict_tops[marks[j]];
    else ++half;
  }
  BigInt f = 1;
  for (const auto& [d, c] : strict_tops) {
    const auto pi = enumerate_pi(v, d).size();
    if (v % 2 == 1) {
      BigInt s = 0;
      for (unsigned b = 1; b <= c; ++b) s += compositions_count(c, b) * binomial(pi, b);
      f *= s;
    } else {
      f *= binomial(pi, c);
    }
  }
  if (v % 2 == 0) {
    const BigInt pi_half = enumerate_pi(v, v / 2).size();
    const BigInt bar = selfdual_count_closed_form(v / 2);
    const BigInt non_self = pi_half - bar;
    if (non_self < 0 || non_self % 2 != 0)
      throw ConsistencyError("odd number of non-self-dual half-weight cycles at length " +
                             std::to_string(v));
    f *= binomial(static_cast<unsigned long>(non_self / 2), half);
    f *= binomial(static_cast<unsigned long>(bar), static_cast<long>(m - 2 * k));
  }
  return f;
}

}  // namespace

FixedPointCounts fixed_point_counts_closed_form(unsigned n) {
  require_even(n, "fixed_point_counts_closed_form");
  FixedPointCounts out{PoincareTable(n), PoincareTable(n)};
  for (const auto& pmp : enumerate_E(n)) {
    const auto& lam = pmp.marked.partition;
    const auto blocks = lam.blocks();
    BigInt term = 1;
    for (std::size_t b = 0; b < blocks.size() && term != 0; ++b) {
      const auto& blk = blocks[b];
      std::vector<unsigned> marks(pmp.marked.marks.begin() + blk.first,
                                  pmp.marked.marks.begin() + blk.first + blk.multiplicity);
      term *= block_factor(blk.value, marks, pmp.pair_counts[b]);
    }
    out.ep.add(lam.degree(), term);
    if (epsilon_sign(pmp) < 0) out.kp.add(lam.degree(), term);
  }
  return out;
}

BigInt count_EP_closed_form(unsigned n) { return fixed_point_counts_closed_form(n).ep.total(); }
BigInt count_KP_closed_form(unsigned n) { return fixed_point_counts_closed_form(n).kp.total(); }

ExtensionDimension ext_dimension(unsigned n) {
  require_even(n, "ext_dimension");
  const auto prod = product_dimension(n, n / 2);
  const auto fp = fixed_point_counts_closed_form(n);
  auto orbit_formula = [](const BigInt& dim, const BigInt& ep, const BigInt& kp) {
    const BigInt num = dim + ep;
    if (num % 2 != 0)
      throw ConsistencyError("generator count plus fixed-point count is odd");
    return num / 2 - kp;
  };
  ExtensionDimension out{0, PoincareTable(n)};
  for (unsigned deg = 0; deg < n; ++deg)
    out.graded.add(deg, orbit_formula(prod.at(deg), fp.ep.at(deg), fp.kp.at(deg)));
  out.total = orbit_formula(prod.total(), fp.ep.total(), fp.kp.total());
  if (out.total != out.graded.total())
    throw ConsistencyError("graded extension dimensions do not add up to the total");
  return out;
}

PoincareTable ext_dimension_by_orbits(unsigned n) {
  require_even(n, "ext_dimension_by_orbits");
  PoincareTable t(n);
  for (const auto& g : enumerate_generators(n, n / 2)) {
    const auto h = sigma_dual_label(g);
    if (h == g) {
      const auto pmp = paired_structure(g);
      if (!pmp) throw ConsistencyError("fixed label without pairing structure");
      if (epsilon_sign(*pmp) > 0) t.add(g.degree(), 1);
    } else if (g < h) {
      t.add(g.degree(), 1);
    }
  }
  return t;
}

}  // namespace braidinv
