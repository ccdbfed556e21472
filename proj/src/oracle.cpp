#include "braidinv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "braidinv/errors.hpp"

namespace braidinv {

// ---------------------------------------------------------------------------
// groups

namespace {

bool member(GroupKind kind, unsigned n, unsigned q, const std::uint8_t* img) {
  switch (kind) {
    case GroupKind::Full:
      return true;
    case GroupKind::Product: {
      const unsigned cut = n - q;
      for (unsigned i = 0; i < cut; ++i)
        if (img[i] >= cut) return false;
      return true;
    }
    case GroupKind::Extension: {
      if (q == 0) return true;
      const bool low = img[0] < q;
      for (unsigned i = 1; i < q; ++i)
        if ((img[i] < q) != low) return false;
      return true;
    }
  }
  return false;
}

Permutation transposition(unsigned n, unsigned a, unsigned b) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

BigInt big_factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

GroupSpec GroupSpec::product(unsigned n, unsigned q) {
  if (n == 0 || q > n) throw DomainError("product group needs n >= 1 and q <= n");
  return GroupSpec(GroupKind::Product, n, q);
}

GroupSpec GroupSpec::extension(unsigned q) {
  if (q == 0) throw DomainError("extension group needs q >= 1");
  return GroupSpec(GroupKind::Extension, 2 * q, q);
}

GroupSpec GroupSpec::full(unsigned n) {
  if (n == 0) throw DomainError("full group needs n >= 1");
  return GroupSpec(GroupKind::Full, n, 0);
}

bool GroupSpec::contains(const Permutation& g) const {
  if (g.size() != n_) return false;
  return member(kind_, n_, q_, g.images().data());
}

BigInt GroupSpec::order() const {
  switch (kind_) {
    case GroupKind::Full:
      return big_factorial(n_);
    case GroupKind::Product:
      return big_factorial(n_ - q_) * big_factorial(q_);
    case GroupKind::Extension:
      return 2 * big_factorial(q_) * big_factorial(q_);
  }
  return 0;
}

std::vector<Permutation> GroupSpec::generators() const {
  std::vector<Permutation> gens;
  const unsigned cut = kind_ == GroupKind::Full ? n_ : n_ - q_;
  for (unsigned i = 0; i + 1 < cut; ++i) gens.push_back(transposition(n_, i, i + 1));
  for (unsigned i = cut; i + 1 < n_; ++i) gens.push_back(transposition(n_, i, i + 1));
  if (kind_ == GroupKind::Extension) {
    std::vector<std::uint8_t> img(n_);
    for (unsigned i = 0; i < n_; ++i) img[i] = static_cast<std::uint8_t>(n_ - 1 - i);
    gens.emplace_back(std::move(img));
  }
  return gens;
}

std::vector<Permutation> GroupSpec::elements() const {
  if (n_ > 8) throw CapabilityError("GroupSpec::elements: n > 8");
  std::vector<std::uint8_t> img(n_);
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    if (member(kind_, n_, q_, img.data())) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::Full:
      return "S_" + std::to_string(n_);
    case GroupKind::Product:
      return "S_" + std::to_string(n_ - q_) + " x S_" + std::to_string(q_);
    case GroupKind::Extension:
      return "S_" + std::to_string(q_) + " x| S_" + std::to_string(q_) + " (Z/2 ext)";
  }
  return {};
}

// ---------------------------------------------------------------------------
// centralizer and zeta

BigInt CentralizerPresentation::order() const {
  BigInt o = 1;
  for (const auto& blk : lam.blocks()) {
    o *= big_factorial(blk.multiplicity);
    for (unsigned i = 0; i < blk.multiplicity; ++i) o *= blk.value;
  }
  return o;
}

std::vector<Permutation> CentralizerPresentation::generators() const {
  std::vector<Permutation> g = nu_generators;
  g.insert(g.end(), cycle_generators.begin(), cycle_generators.end());
  return g;
}

CentralizerPresentation build_centralizer(const Partition& lam) {
  CentralizerPresentation cp{lam, {}, {}};
  const unsigned n = lam.n();
  for (unsigned i = 0; i < lam.part_count(); ++i) {
    const unsigned o = lam.offset(i), len = lam[i];
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    for (unsigned k = 0; k < len; ++k) img[o + k] = static_cast<std::uint8_t>(o + (k + 1) % len);
    cp.cycle_generators.emplace_back(std::move(img));
    if (i + 1 < lam.part_count() && lam[i + 1] == len) {
      std::vector<std::uint8_t> sw(n);
      std::iota(sw.begin(), sw.end(), std::uint8_t{0});
      const unsigned o2 = lam.offset(i + 1);
      for (unsigned k = 0; k < len; ++k) std::swap(sw[o + k], sw[o2 + k]);
      cp.nu_generators.emplace_back(std::move(sw));
    }
  }
  return cp;
}

void CentralizerPresentation::for_each_element(
    const std::function<void(const CentralizerElement&)>& visit) const {
  const auto blocks = lam.blocks();
  const unsigned j = lam.part_count(), n = lam.n();
  std::vector<unsigned> offsets(j);
  for (unsigned i = 0; i < j; ++i) offsets[i] = lam.offset(i);

  std::vector<std::vector<unsigned>> block_perm;
  for (const auto& blk : blocks) {
    std::vector<unsigned> p(blk.multiplicity);
    std::iota(p.begin(), p.end(), 0u);
    block_perm.push_back(std::move(p));
  }
  CentralizerElement el{Permutation(n), std::vector<unsigned>(j), std::vector<unsigned>(j, 0)};
  std::vector<std::uint8_t> img(n);

  std::function<void(unsigned)> exps = [&](unsigned i) {
    if (i == j) {
      for (unsigned c = 0; c < j; ++c) {
        const unsigned len = lam[c], src = offsets[c], dst = offsets[el.cycle_image[c]];
        for (unsigned k = 0; k < len; ++k)
          img[src + k] = static_cast<std::uint8_t>(dst + (k + el.exponents[c]) % len);
      }
      el.perm = Permutation(img);
      visit(el);
      return;
    }
    for (unsigned e = 0; e < lam[i]; ++e) {
      el.exponents[i] = e;
      exps(i + 1);
    }
  };
  std::function<void(std::size_t)> perms = [&](std::size_t b) {
    if (b == blocks.size()) {
      exps(0);
      return;
    }
    auto& p = block_perm[b];
    std::sort(p.begin(), p.end());
    do {
      for (unsigned t = 0; t < p.size(); ++t) el.cycle_image[blocks[b].first + t] = blocks[b].first + p[t];
      perms(b + 1);
    } while (std::next_permutation(p.begin(), p.end()));
  };
  perms(0);
}

unsigned zeta_order(const Partition& lam) {
  unsigned L = 1;
  for (auto v : lam.parts()) L = std::lcm(L, v);
  return L % 2 == 0 ? L : 2 * L;
}

std::optional<CentralizerElement> decompose_centralizer(const Partition& lam, const Permutation& z) {
  const unsigned n = lam.n(), j = lam.part_count();
  if (z.size() != n) return std::nullopt;
  std::vector<unsigned> part_of(n), offsets(j);
  for (unsigned i = 0; i < j; ++i) {
    offsets[i] = lam.offset(i);
    for (unsigned k = 0; k < lam[i]; ++k) part_of[offsets[i] + k] = i;
  }
  CentralizerElement el{z, std::vector<unsigned>(j), std::vector<unsigned>(j)};
  for (unsigned i = 0; i < j; ++i) {
    const unsigned len = lam[i];
    const unsigned p = z(offsets[i]);
    const unsigned t = part_of[p];
    if (lam[t] != len) return std::nullopt;
    const unsigned e = p - offsets[t];
    for (unsigned k = 0; k < len; ++k)
      if (z(offsets[i] + k) != offsets[t] + (k + e) % len) return std::nullopt;
    el.cycle_image[i] = t;
    el.exponents[i] = e;
  }
  return el;
}

unsigned zeta_exponent(const Partition& lam, const CentralizerElement& z) {
  const unsigned L = zeta_order(lam);
  unsigned long exp = 0;
  unsigned parity = 0;
  for (unsigned i = 0; i < lam.part_count(); ++i) {
    exp += static_cast<unsigned long>(z.exponents[i]) * (L / lam[i]);
    parity ^= ((lam[i] - 1) * z.exponents[i]) & 1u;
  }
  // alpha: sign of the block permutation, raised to v + 1
  for (const auto& blk : lam.blocks()) {
    if (blk.value % 2 == 1) continue;
    unsigned inv = 0;
    for (unsigned a = 0; a < blk.multiplicity; ++a)
      for (unsigned b = a + 1; b < blk.multiplicity; ++b)
        if (z.cycle_image[blk.first + a] > z.cycle_image[blk.first + b]) ++inv;
    parity ^= inv & 1u;
  }
  if (parity) exp += L / 2;
  return static_cast<unsigned>(exp % L);
}

CyclotomicSum zeta_value(const Partition& lam, const Permutation& z) {
  auto el = decompose_centralizer(lam, z);
  if (!el) throw DomainError("zeta_value: permutation does not centralize c_lambda");
  return CyclotomicSum::root_power(zeta_order(lam), zeta_exponent(lam, *el));
}

// ---------------------------------------------------------------------------
// double cosets

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

std::uint32_t rank_images(const std::uint8_t* img, unsigned n, const std::uint32_t* fact) {
  std::uint32_t r = 0, used = 0;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned v = img[i];
    r += static_cast<std::uint32_t>(__builtin_popcount(~used & ((1u << v) - 1))) * fact[n - 1 - i];
    used |= 1u << v;
  }
  return r;
}

std::vector<Permutation> generic_cosets(const GroupSpec& group, const Partition& lam) {
  const unsigned n = lam.n();
  if (n > 10)
    throw CapabilityError("generic double-coset enumeration walks all of S_n and stops at n = 10; "
                          "use delta-class mode");
  std::uint32_t fact[13];
  for (unsigned i = 0; i <= 12; ++i) fact[i] = factorial32(i);
  const auto left = group.generators();
  const auto right = build_centralizer(lam).generators();
  UnionFind uf(fact[n]);
  std::vector<std::uint8_t> p(n), img(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::uint32_t r = 0;
  do {
    for (const auto& g : left) {
      for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(g(p[i]));
      uf.unite(r, rank_images(img.data(), n, fact));
    }
    for (const auto& z : right) {
      for (unsigned i = 0; i < n; ++i) img[i] = p[z(i)];
      uf.unite(r, rank_images(img.data(), n, fact));
    }
    ++r;
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<Permutation> reps;
  for (std::uint32_t x = 0; x < fact[n]; ++x)
    if (uf.find(x) == x) reps.push_back(Permutation::unrank(n, x));
  return reps;
}

Permutation permutation_for_word(std::uint32_t word, unsigned n, unsigned q) {
  std::vector<std::uint8_t> img(n);
  unsigned zero = 0, one = n - q;
  for (unsigned i = 0; i < n; ++i)
    img[i] = static_cast<std::uint8_t>((word >> i & 1u) ? one++ : zero++);
  return Permutation(std::move(img));
}

std::vector<Permutation> delta_class_cosets(const GroupSpec& group, const Partition& lam) {
  const unsigned n = lam.n();
  if (n > 20) throw CapabilityError("delta-class enumeration limited to n <= 20");
  const unsigned q = group.q();
  const auto zgens = build_centralizer(lam).generators();
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  UnionFind uf(std::size_t{1} << n);
  auto act = [&](std::uint32_t w, const Permutation& z) {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < n; ++i)
      if (w >> z(i) & 1u) out |= 1u << i;
    return out;
  };
  for (std::uint32_t w = 0; w <= full; ++w) {
    if (static_cast<unsigned>(__builtin_popcount(w)) != q) continue;
    for (const auto& z : zgens) uf.unite(w, act(w, z));
    if (group.kind() == GroupKind::Extension) uf.unite(w, ~w & full);
  }
  std::vector<Permutation> reps;
  for (std::uint32_t w = 0; w <= full; ++w)
    if (static_cast<unsigned>(__builtin_popcount(w)) == q && uf.find(w) == w)
      reps.push_back(permutation_for_word(w, n, q));
  return reps;
}

}  // namespace

std::vector<Permutation> double_cosets(const GroupSpec& group, const Partition& lam, CosetMode mode) {
  if (group.n() != lam.n()) throw DomainError("double_cosets: group and partition differ in n");
  if (mode == CosetMode::Auto) mode = lam.n() <= 8 ? CosetMode::Generic : CosetMode::DeltaClass;
  return mode == CosetMode::Generic ? generic_cosets(group, lam) : delta_class_cosets(group, lam);
}

// ---------------------------------------------------------------------------
// inner products

Isotropy isotropy(const Permutation& s, const Partition& lam, const GroupSpec& group) {
  if (s.size() != lam.n() || group.n() != lam.n()) throw DomainError("isotropy: size mismatch");
  const unsigned n = lam.n();
  const unsigned L = zeta_order(lam);
  const Permutation sinv = s.inverse();
  std::vector<std::uint64_t> hist(L, 0);
  std::uint64_t count = 0;
  std::vector<std::uint8_t> g(n);
  build_centralizer(lam).for_each_element([&](const CentralizerElement& z) {
    for (unsigned i = 0; i < n; ++i) g[i] = static_cast<std::uint8_t>(s(z.perm(sinv(i))));
    if (!member(group.kind(), n, group.q(), g.data())) return;
    ++count;
    ++hist[zeta_exponent(lam, z)];
  });
  Isotropy out{count, CyclotomicSum(L)};
  for (unsigned k = 0; k < L; ++k)
    if (hist[k]) out.sum.add_power(k, hist[k]);
  return out;
}

int isotropy_inner_product(const Permutation& s, const Partition& lam, const GroupSpec& group) {
  const auto iso = isotropy(s, lam, group);
  const auto value = iso.sum.as_integer();
  if (value && *value == 0) return 0;
  if (value && *value == iso.order) return 1;
  std::ostringstream os;
  os << "character sum over isotropy of order " << iso.order << " for lambda of degree "
     << lam.degree() << " is neither 0 nor the group order";
  throw ConsistencyError(os.str());
}

namespace {

void check_capability(unsigned n, bool long_running) {
  if (n > 10) throw CapabilityError("oracle supports n <= 10 only");
  if (n > 8 && !long_running)
    throw CapabilityError("oracle beyond n = 8 needs the long-running mode");
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

PoincareTable oracle_dimension(unsigned n, const GroupSpec& group, const OracleOptions& opts) {
  if (group.n() != n) throw DomainError("oracle_dimension: group acts on a different n");
  check_capability(n, opts.long_running);
  const auto parts = enumerate_partitions(n);
  std::vector<std::uint64_t> contrib(parts.size(), 0);
  parallel_for(parts.size(), opts.workers, [&](std::size_t i) {
    std::uint64_t c = 0;
    for (const auto& s : double_cosets(group, parts[i], opts.mode))
      c += static_cast<std::uint64_t>(isotropy_inner_product(s, parts[i], group));
    contrib[i] = c;
  });
  PoincareTable t(n);
  for (std::size_t i = 0; i < parts.size(); ++i) t.add(parts[i].degree(), contrib[i]);
  if (opts.progress) opts.progress("oracle n=" + std::to_string(n) + " " + group.name() + " done");
  return t;
}

RankCheck total_rank_check(unsigned n) {
  if (n > 8) throw CapabilityError("total_rank_check supports n <= 8");
  const auto stirling = permutation_cycle_counts(n);
  std::vector<GroupSpec> groups;
  for (unsigned q = 0; q <= n; ++q) groups.push_back(GroupSpec::product(n, q));
  if (n % 2 == 0) groups.push_back(GroupSpec::extension(n / 2));
  RankCheck out;
  std::ostringstream rep;
  for (const auto& group : groups) {
    std::vector<BigInt> by_degree(n, 0);
    const BigInt gorder = group.order();
    for (const auto& lam : enumerate_partitions(n))
      for (const auto& s : double_cosets(group, lam)) {
        const auto iso = isotropy(s, lam, group);
        if (gorder % iso.order != 0) {
          out.ok = false;
          rep << group.name() << ": isotropy order does not divide |G|\n";
        }
        by_degree[lam.degree()] += gorder / iso.order;
      }
    for (unsigned i = 0; i < n; ++i) {
      const BigInt& expected = stirling[n - i];
      if (by_degree[i] != expected) {
        out.ok = false;
        rep << group.name() << " degree " << i << ": cosets give " << by_degree[i]
            << ", permutations with " << n - i << " cycles: " << expected << '\n';
      }
    }
  }
  out.report = rep.str();
  return out;
}

}  // namespace braidinv
