#include <gtest/gtest.h>

#include <set>

#include "braidinv/cycles.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/product_catalog.hpp"

using namespace braidinv;

namespace {

PoincareTable table(unsigned n, std::initializer_list<std::pair<unsigned, int>> rows) {
  PoincareTable t(n);
  for (auto [d, v] : rows) t.add(d, v);
  return t;
}

// Labels read off every 0/1 labelling of weight q on the standard cycles of
// every lambda, kept when valid.
std::set<GeneratorLabel> labels_by_brute_force(unsigned n, unsigned q) {
  std::set<GeneratorLabel> out;
  for (const auto& lam : enumerate_partitions(n))
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != q) continue;
      DeltaMap delta;
      for (unsigned i = 0; i < n; ++i) delta.bits.push_back((mask >> i) & 1u);
      GeneratorLabel label{lam, {}};
      for (unsigned i = 0; i < lam.part_count(); ++i) label.cycles.push_back(invariant_cycle(delta, lam, i));
      canonicalize(label);
      if (label_is_valid(label)) out.insert(label);
    }
  return out;
}

}  // namespace

TEST(PoincareTable, Basics) {
  PoincareTable t(3);
  t.add(1, 2);
  t.add(1, -2);
  t.add(2, 5);
  EXPECT_EQ(t.at(1), 0);
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.total(), 5);
  EXPECT_THROW(t.add(3, 1), DomainError);
}

TEST(Marked, Examples) {
  using M = std::vector<MarkedPartition>;
  EXPECT_EQ(enumerate_marked(2, 1), (M{{Partition({2}), {1}}, {Partition({1, 1}), {1, 0}}}));
  EXPECT_EQ(enumerate_marked(2, 0), (M{{Partition({2}), {0}}, {Partition({1, 1}), {0, 0}}}));
  std::set<std::vector<unsigned>> marks22;
  for (const auto& mp : enumerate_marked(4, 2))
    if (mp.partition == Partition({2, 2})) marks22.insert(mp.marks);
  EXPECT_EQ(marks22, (std::set<std::vector<unsigned>>{{2, 0}, {1, 1}}));
}

TEST(Generators, Examples) {
  const auto g21 = enumerate_generators(2, 1);
  ASSERT_EQ(g21.size(), 2u);
  std::set<std::string> names;
  for (const auto& g : g21) names.insert(g.to_string());
  EXPECT_EQ(names, (std::set<std::string>{"[1:(0) 1:()]", "[2:(1)]"}));

  std::set<std::vector<unsigned>> lambdas;
  for (const auto& g : enumerate_generators(4, 0)) lambdas.insert(g.partition.parts());
  EXPECT_EQ(lambdas, (std::set<std::vector<unsigned>>{{1, 1, 1, 1}, {2, 1, 1}}));

  std::set<std::string> g20;
  for (const auto& g : enumerate_generators(2, 0)) g20.insert(g.to_string());
  EXPECT_EQ(g20, (std::set<std::string>{"[1:() 1:()]", "[2:()]"}));
}

TEST(Generators, EqualEvenCyclesMustDiffer) {
  GeneratorLabel twin{Partition({2, 2}), {InvariantCycle::empty(2), InvariantCycle::empty(2)}};
  EXPECT_FALSE(label_is_valid(twin));
  GeneratorLabel odd_twin{Partition({1, 1}), {InvariantCycle::empty(1), InvariantCycle::empty(1)}};
  EXPECT_TRUE(label_is_valid(odd_twin));
}

TEST(Generators, MatchBruteForceLabelling) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned q = 0; q <= n; ++q) {
      const auto gens = enumerate_generators(n, q);
      std::set<GeneratorLabel> set(gens.begin(), gens.end());
      EXPECT_EQ(set.size(), gens.size());
      EXPECT_EQ(set, labels_by_brute_force(n, q)) << n << " " << q;
      for (const auto& g : gens) {
        EXPECT_EQ(g.total_weight(), q);
        auto copy = g;
        canonicalize(copy);
        EXPECT_EQ(copy, g);
      }
    }
}

TEST(ProductDimension, Examples) {
  EXPECT_EQ(product_dimension(2, 1), table(2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(product_dimension(4, 0), table(4, {{0, 1}, {1, 1}}));
  EXPECT_EQ(product_dimension(2, 0), table(2, {{0, 1}, {1, 1}}));
  EXPECT_THROW(product_dimension(3, 5), DomainError);
}

TEST(ProductDimension, CountingRouteAgrees) {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned q = 0; q <= n; ++q)
      EXPECT_EQ(product_dimension(n, q), product_dimension_counted(n, q)) << n << " " << q;
}

TEST(ProductDimension, SymmetricInQ) {
  for (unsigned n = 1; n <= 14; ++n)
    for (unsigned q = 0; q <= n; ++q)
      EXPECT_EQ(product_dimension_counted(n, q), product_dimension_counted(n, n - q)) << n << " " << q;
}

TEST(ProductDimension, DegreeZeroIsOne) {
  for (unsigned n = 1; n <= 14; ++n)
    for (unsigned q = 0; q <= n; ++q) EXPECT_EQ(product_dimension_counted(n, q).at(0), 1);
}

TEST(ProductDimension, ClassicalAnchor) {
  for (unsigned n = 2; n <= 12; ++n) EXPECT_EQ(product_dimension_counted(n, 0), table(n, {{0, 1}, {1, 1}}));
}
