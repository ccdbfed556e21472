#include <gtest/gtest.h>

#include <set>

#include "braidinv/cycles.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/extension_catalog.hpp"

using namespace braidinv;

namespace {

InvariantCycle cyc(unsigned length, Word gaps) { return InvariantCycle(length, std::move(gaps)); }

PairedMarkedPartition pmp(std::vector<unsigned> parts, std::vector<unsigned> marks, std::vector<unsigned> pairs) {
  return {{Partition(std::move(parts)), std::move(marks)}, std::move(pairs)};
}

std::set<std::string> names(const std::vector<GeneratorLabel>& labels) {
  std::set<std::string> out;
  for (const auto& l : labels) out.insert(l.to_string());
  return out;
}

}  // namespace

TEST(SigmaDual, Examples) {
  GeneratorLabel two{Partition({2}), {cyc(2, {1})}};
  EXPECT_EQ(sigma_dual_label(two), two);
  GeneratorLabel ones{Partition({1, 1}), {cyc(1, {0}), InvariantCycle::empty(1)}};
  EXPECT_EQ(sigma_dual_label(ones), ones);
  GeneratorLabel six{Partition({6}), {cyc(6, {0, 1, 2})}};
  EXPECT_EQ(sigma_dual_label(six), (GeneratorLabel{Partition({6}), {cyc(6, {0, 2, 1})}}));
}

TEST(SigmaDual, InvolutionOnGenerators) {
  for (unsigned q = 1; q <= 5; ++q) {
    const auto gens = enumerate_generators(2 * q, q);
    const std::set<GeneratorLabel> all(gens.begin(), gens.end());
    for (const auto& g : gens) {
      const auto h = sigma_dual_label(g);
      EXPECT_TRUE(all.count(h)) << g.to_string();
      EXPECT_EQ(sigma_dual_label(h), g);
    }
  }
}

TEST(E, Examples) {
  const auto e2 = enumerate_E(2);
  ASSERT_EQ(e2.size(), 2u);
  EXPECT_NE(std::find(e2.begin(), e2.end(), pmp({2}, {1}, {0})), e2.end());
  EXPECT_NE(std::find(e2.begin(), e2.end(), pmp({1, 1}, {1, 0}, {1})), e2.end());
  for (const auto& p : enumerate_E(4)) EXPECT_NE(p.marked.partition, Partition({3, 1}));
  const auto e6 = enumerate_E(6);
  EXPECT_NE(std::find(e6.begin(), e6.end(), pmp({3, 3}, {2, 1}, {1})), e6.end());
  EXPECT_THROW(enumerate_E(3), DomainError);
}

TEST(EP, Examples) {
  EXPECT_EQ(names(enumerate_EP(2)), (std::set<std::string>{"[2:(1)]", "[1:(0) 1:()]"}));
  std::vector<GeneratorLabel> six;
  for (const auto& g : enumerate_EP(6))
    if (g.partition == Partition({6})) six.push_back(g);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].cycles[0], cyc(6, {0, 0, 3}));
  const auto ep6 = names(enumerate_EP(6));
  EXPECT_TRUE(ep6.count("[4:(0,2) 2:(1)]"));
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_sign(pmp({2}, {1}, {0})), 1);
  EXPECT_EQ(epsilon_sign(pmp({4, 1, 1}, {2, 1, 0}, {0, 1})), -1);
  EXPECT_EQ(epsilon_sign(pmp({3, 3}, {2, 1}, {1})), 1);
}

TEST(KP, Examples) {
  EXPECT_TRUE(enumerate_KP(2).empty());
  const auto kp6 = names(enumerate_KP(6));
  EXPECT_TRUE(kp6.count("[4:(0,2) 2:(1)]"));
  EXPECT_TRUE(kp6.count("[4:(0,2) 1:(0) 1:()]"));
  EXPECT_FALSE(kp6.count("[6:(0,0,3)]"));
}

TEST(EP, EqualsSigmaFixedGenerators) {
  for (unsigned q = 1; q <= 6; ++q) {
    std::set<GeneratorLabel> fixed;
    const auto gens = enumerate_generators(2 * q, q);
    for (const auto& g : gens)
      if (sigma_dual_label(g) == g) fixed.insert(g);
    const auto ep = enumerate_EP(2 * q);
    EXPECT_EQ(std::set<GeneratorLabel>(ep.begin(), ep.end()), fixed) << 2 * q;
    EXPECT_EQ(ep.size(), fixed.size());
    EXPECT_EQ((gens.size() + ep.size()) % 2, 0u);
  }
}

TEST(EP, PairedStructureAndSigns) {
  for (unsigned q = 1; q <= 6; ++q) {
    const unsigned n = 2 * q;
    for (const auto& sg : enumerate_signed_EP(n)) {
      EXPECT_EQ(sg.sign, epsilon_sign(sg.paired));
      EXPECT_EQ(sg.paired.to_marked().partition, sg.label.partition);
      const auto back = paired_structure(sg.label);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, sg.paired);
    }
    for (const auto& g : enumerate_generators(n, q))
      if (sigma_dual_label(g) != g) EXPECT_FALSE(paired_structure(g).has_value());
  }
}

TEST(KP, ClauseRuleMatchesSign) {
  for (unsigned n = 2; n <= 16; n += 2)
    for (const auto& p : enumerate_E(n)) EXPECT_EQ(kernel_condition(p), epsilon_sign(p) == -1);
}

TEST(ClosedForms, MatchEnumeration) {
  for (unsigned n = 2; n <= 12; n += 2) {
    const auto ep = enumerate_EP(n);
    const auto kp = enumerate_KP(n);
    EXPECT_EQ(count_EP_closed_form(n), BigInt(ep.size())) << n;
    EXPECT_EQ(count_KP_closed_form(n), BigInt(kp.size())) << n;
    PoincareTable ep_by_degree(n), kp_by_degree(n);
    for (const auto& g : ep) ep_by_degree.add(g.degree(), 1);
    for (const auto& g : kp) kp_by_degree.add(g.degree(), 1);
    const auto cf = fixed_point_counts_closed_form(n);
    EXPECT_EQ(cf.ep, ep_by_degree);
    EXPECT_EQ(cf.kp, kp_by_degree);
  }
}

TEST(ExtDimension, Examples) {
  const auto d2 = ext_dimension(2);
  EXPECT_EQ(d2.total, 2);
  EXPECT_EQ(d2.graded.at(0), 1);
  EXPECT_EQ(d2.graded.at(1), 1);
  EXPECT_THROW(ext_dimension(5), DomainError);
}

TEST(ExtDimension, MatchesOrbitWalk) {
  for (unsigned n = 2; n <= 12; n += 2) {
    const auto d = ext_dimension(n);
    EXPECT_EQ(d.graded, ext_dimension_by_orbits(n)) << n;
    EXPECT_EQ(d.total, d.graded.total());
    EXPECT_EQ(d.graded.at(0), 1);
  }
}
