// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "braidinv/cycles.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/extension_catalog.hpp"
#include "braidinv/oracle.hpp"

using namespace braidinv;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) why << msg;
    ok = ok && cond;
  }
};

PoincareTable table(unsigned n, std::initializer_list<std::pair<unsigned, int>> rows) {
  PoincareTable t(n);
  for (auto [d, v] : rows) t.add(d, v);
  return t;
}

std::string show(const PoincareTable& t) {
  std::ostringstream os;
  os << "{";
  for (const auto& [d, v] : t.entries()) os << " " << d << ":" << v;
  os << " }";
  return os.str();
}

void criterion1(Check& c) {
  const auto two = table(2, {{0, 1}, {1, 1}});
  c.expect(product_dimension(2, 1) == two, "product_dimension(2,1) = " + show(product_dimension(2, 1)));
  const auto ext = ext_dimension(2);
  c.expect(ext.total == 2 && ext.graded == two, "ext_dimension(2) = " + show(ext.graded));
  c.expect(enumerate_EP(2).size() == 2 && count_EP_closed_form(2) == 2, "|E^P| at n=2");
  c.expect(enumerate_KP(2).empty() && count_KP_closed_form(2) == 0, "|K^P| at n=2");
}

void criterion2(Check& c) {
  for (unsigned n : {2u, 4u, 6u, 8u}) {
    const auto formula = ext_dimension(n);
    const auto oracle = oracle_dimension(n, GroupSpec::extension(n / 2));
    c.expect(formula.graded == oracle && formula.total == oracle.total(),
             "n=" + std::to_string(n) + ": formula " + show(formula.graded) + " oracle " + show(oracle));
  }
  OracleOptions lr;
  lr.long_running = true;
  const auto ten = oracle_dimension(10, GroupSpec::extension(5), lr);
  c.expect(ext_dimension(10).graded == ten, "n=10 long-running: oracle " + show(ten));
}

void criterion3(Check& c) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned q = 0; 2 * q <= n; ++q) {
      const auto formula = product_dimension(n, q);
      const auto oracle = oracle_dimension(n, GroupSpec::product(n, q));
      c.expect(formula == oracle, "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": formula " +
                                      show(formula) + " oracle " + show(oracle));
    }
}

void criterion4(Check& c) {
  for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
    const BigInt ep = enumerate_EP(n).size(), kp = enumerate_KP(n).size();
    c.expect(count_EP_closed_form(n) == ep, "|E^P| n=" + std::to_string(n));
    c.expect(count_KP_closed_form(n) == kp, "|K^P| n=" + std::to_string(n));
  }
}

void criterion5(Check& c) {
  for (unsigned n = 2; n <= 10; n += 2) {
    std::set<GeneratorLabel> fixed;
    for (const auto& g : enumerate_generators(n, n / 2))
      if (sigma_dual_label(g) == g) fixed.insert(g);
    const auto ep = enumerate_EP(n);
    c.expect(std::set<GeneratorLabel>(ep.begin(), ep.end()) == fixed && ep.size() == fixed.size(),
             "fixed set differs at n=" + std::to_string(n));
  }
}

void criterion6(Check& c) {
  for (unsigned d = 1; d <= 18; ++d)
    c.expect(selfdual_count_closed_form(d) == enumerate_selfdual(d).size(), "d=" + std::to_string(d));
  c.expect(selfdual_count_closed_form(1) == 1 && selfdual_count_closed_form(6) == 5 &&
               selfdual_count_closed_form(15) == 1091,
           "spot values");
}

void criterion7(Check& c) {
  for (unsigned len = 1; len <= 12; ++len)
    for (unsigned d = 0; d <= len; ++d) {
      const auto pi = enumerate_pi(len, d), co = enumerate_pi(len, len - d);
      std::set<InvariantCycle> image;
      for (const auto& chi : pi) {
        const auto dual = dual_cycle(chi);
        c.expect(dual_cycle(dual) == chi, "involution fails at " + chi.to_string());
        image.insert(dual);
      }
      c.expect(image.size() == pi.size() && image == std::set<InvariantCycle>(co.begin(), co.end()),
               "bijection fails for lambda=" + std::to_string(len) + " d=" + std::to_string(d));
    }
}

void criterion8(Check& c) {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned q = 0; q <= n; ++q) {
      c.expect(product_dimension(n, q).at(0) == 1, "product degree 0");
      c.expect(oracle_dimension(n, GroupSpec::product(n, q)).at(0) == 1, "oracle product degree 0");
    }
    if (n % 2 == 0) c.expect(ext_dimension(n).graded.at(0) == 1, "ext degree 0");
    c.expect(oracle_dimension(n, GroupSpec::full(n)).at(0) == 1, "full degree 0");
    const auto rank = total_rank_check(n);
    c.expect(rank.ok, rank.report);
    if (n >= 2) {
      const auto anchor = table(n, {{0, 1}, {1, 1}});
      c.expect(product_dimension(n, 0) == anchor && oracle_dimension(n, GroupSpec::product(n, 0)) == anchor,
               "classical anchor at n=" + std::to_string(n));
    }
  }
  c.expect(permutation_cycle_counts(4) == std::vector<BigInt>{0, 6, 11, 6, 1}, "Stirling row n=4");
}

void criterion9(Check& c) {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      std::vector<Permutation> els;
      build_centralizer(lam).for_each_element([&](const CentralizerElement& z) { els.push_back(z.perm); });
      for (const auto& a : els)
        for (const auto& b : els)
          if (!(zeta_value(lam, a * b) == zeta_value(lam, a) * zeta_value(lam, b))) {
            c.expect(false, "zeta not multiplicative");
            return;
          }
    }
  try {
    for (unsigned n = 1; n <= 8; ++n) {
      std::vector<GroupSpec> groups;
      for (unsigned q = 0; q <= n; ++q) groups.push_back(GroupSpec::product(n, q));
      if (n % 2 == 0) groups.push_back(GroupSpec::extension(n / 2));
      groups.push_back(GroupSpec::full(n));
      for (const auto& g : groups)
        for (const auto& lam : enumerate_partitions(n))
          for (const auto& s : double_cosets(g, lam)) {
            const auto iso = isotropy(s, lam, g);
            const auto v = iso.sum.as_integer();
            c.expect(v && (*v == 0 || *v == iso.order), "isotropy sum outside {0, |H|}");
          }
    }
  } catch (const ConsistencyError& e) {
    c.expect(false, e.what());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"n=2 exact values", criterion1},
      {"extension dimension vs oracle, n = 2..8 (and 10 long-running)", criterion2},
      {"product dimension vs oracle, n <= 8, q <= n/2", criterion3},
      {"E^P / K^P closed forms vs enumeration, n <= 10", criterion4},
      {"E^P equals the sigma-fixed generators, n <= 10", criterion5},
      {"self-dual closed form vs enumeration, d <= 18", criterion6},
      {"duality involution and bijection, lambda <= 12", criterion7},
      {"degree-0, rank and classical anchors, n <= 8", criterion8},
      {"character axioms, n <= 8", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << secs << " s)";
    if (!c.ok) std::cout << " -- " << c.why.str();
    std::cout << std::endl;
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
