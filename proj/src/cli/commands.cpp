#include "braidinv/cli/commands.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidinv/cli/report.hpp"
#include "braidinv/cycles.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/extension_catalog.hpp"
#include "braidinv/oracle.hpp"
#include "braidinv/product_catalog.hpp"

namespace braidinv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned n = 0;
  int q = -1;
  std::string group = "prod";
  int degree = -1;
  std::string format = "table";
  std::string method = "formula";
  bool verbose = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool long_running = false;
  unsigned lambda = 0;
  unsigned d = 0;
  int genus = 0;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Table;
}

/// Validated (n, q) for the selected group.
unsigned resolve_q(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.group == "ext") {
    if (c.n % 2 != 0) throw UsageError("the extension group needs even n");
    if (c.q >= 0 && static_cast<unsigned>(c.q) * 2 != c.n) throw UsageError("the extension group needs n = 2q");
    return c.n / 2;
  }
  if (c.q < 0) throw UsageError("--q is required for --group prod");
  if (static_cast<unsigned>(c.q) > c.n) throw UsageError("--q must not exceed --n");
  return static_cast<unsigned>(c.q);
}

std::optional<unsigned> resolve_degree(const RunConfig& c, unsigned n) {
  if (c.degree < 0) return std::nullopt;
  if (static_cast<unsigned>(c.degree) >= n) throw UsageError("--degree must be below n");
  return static_cast<unsigned>(c.degree);
}

OracleOptions oracle_options(const RunConfig& c, std::ostream& err) {
  OracleOptions o;
  o.workers = c.workers;
  o.long_running = c.long_running;
  if (c.verbose) o.progress = [&err](const std::string& msg) { err << msg << '\n'; };
  return o;
}

PoincareTable compute(const RunConfig& c, unsigned n, unsigned q, const std::string& group,
                      const std::string& method, std::ostream& err) {
  if (c.verbose) err << "computing " << group << " n=" << n << " q=" << q << " via " << method << '\n';
  if (group == "ext") {
    if (method == "formula") return ext_dimension(n).graded;
    if (method == "catalog") return ext_dimension_by_orbits(n);
    return oracle_dimension(n, GroupSpec::extension(q), oracle_options(c, err));
  }
  if (method == "formula") return product_dimension_counted(n, q);
  if (method == "catalog") return product_dimension(n, q);
  return oracle_dimension(n, GroupSpec::product(n, q), oracle_options(c, err));
}

int cmd_dim(const RunConfig& c, std::ostream& out, std::ostream& err, const std::string& annotation = {}) {
  const unsigned q = resolve_q(c);
  const auto degree = resolve_degree(c, c.n);
  auto report = make_report(c.n, q, c.group, c.method, compute(c, c.n, q, c.group, c.method, err), degree);
  report.annotation = annotation;
  out << render(report, parse_format(c.format));
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const unsigned q = resolve_q(c);
  // oracle first: it is the one that refuses large n
  const auto oracle = compute(c, c.n, q, c.group, "oracle", err);
  const auto formula = compute(c, c.n, q, c.group, "formula", err);
  const auto catalog = compute(c, c.n, q, c.group, "catalog", err);
  bool ok = true;
  std::vector<std::vector<std::string>> rows;
  auto row = [&](const std::string& label, const BigInt& f, const BigInt& k, const BigInt& o) {
    const bool same = f == k && k == o;
    ok = ok && same;
    rows.push_back({label, f.str(), k.str(), o.str(), same ? "OK" : "MISMATCH"});
  };
  for (unsigned i = 0; i < c.n; ++i) row(std::to_string(i), formula.at(i), catalog.at(i), oracle.at(i));
  row("total", formula.total(), catalog.total(), oracle.total());
  out << "group=" << c.group << " n=" << c.n << " q=" << q << '\n';
  out << aligned({"degree", "formula", "catalog", "oracle", "status"}, rows);
  out << (ok ? "OK" : "MISMATCH") << '\n';
  return ok ? kOk : kMismatch;
}

std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

int cmd_necklace_pi(const RunConfig& c, std::ostream& out) {
  if (c.lambda < 1) throw UsageError("--lambda must be at least 1");
  if (c.d > c.lambda) throw UsageError("--d must not exceed --lambda");
  const auto cycles = enumerate_pi(c.lambda, c.d);
  if (parse_format(c.format) == Format::Json) {
    Json j;
    j["lambda"] = c.lambda;
    j["d"] = c.d;
    Json list = Json::array();
    for (const auto& chi : cycles) list.push_back(chi.gaps());
    j["cycles"] = std::move(list);
    j["count"] = cycles.size();
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& chi : cycles)
    rows.push_back({chi.to_string(), std::to_string(chi.symmetry()), dual_cycle(chi).to_string()});
  if (parse_format(c.format) == Format::Csv) {
    out << csv({"cycle", "symmetry", "dual"}, rows);
    return kOk;
  }
  out << "Pi(" << c.lambda << "," << c.d << ")\n" << aligned({"cycle", "symmetry", "dual"}, rows);
  out << "count=" << cycles.size() << '\n';
  return kOk;
}

int cmd_necklace_selfdual(const RunConfig& c, std::ostream& out) {
  if (c.d < 1) throw UsageError("--d must be at least 1");
  const BigInt formula = selfdual_count_closed_form(c.d);
  const BigInt counted = enumerate_selfdual(c.d).size();
  if (parse_format(c.format) == Format::Json) {
    Json j;
    j["d"] = c.d;
    j["enum"] = counted.str();
    j["formula"] = formula.str();
    out << j.dump(2) << '\n';
  } else if (parse_format(c.format) == Format::Csv) {
    out << csv({"d", "enum", "formula"}, {{std::to_string(c.d), counted.str(), formula.str()}});
  } else {
    out << "enum=" << counted << " formula=" << formula << '\n';
  }
  return counted == formula ? kOk : kMismatch;
}

int cmd_ep(const RunConfig& c, std::ostream& out) {
  if (c.n < 2 || c.n % 2 != 0) throw UsageError("ep needs an even n >= 2");
  const auto gens = enumerate_signed_EP(c.n);
  const BigInt ep_cf = count_EP_closed_form(c.n), kp_cf = count_KP_closed_form(c.n);
  BigInt kp = 0;
  std::vector<std::vector<std::string>> rows;
  for (const auto& g : gens) {
    std::string pairs = "(";
    for (std::size_t b = 0; b < g.paired.pair_counts.size(); ++b)
      pairs += (b ? "," : "") + std::to_string(g.paired.pair_counts[b]);
    pairs += ")";
    if (g.sign < 0) ++kp;
    rows.push_back({std::to_string(g.label.degree()), partition_string(g.label.partition), g.label.to_string(),
                    pairs, g.sign > 0 ? "+1" : "-1", g.sign < 0 ? "true" : "false"});
  }
  const BigInt ep = gens.size();
  const bool ok = ep == ep_cf && kp == kp_cf;
  const std::vector<std::string> header{"degree", "lambda", "label", "pairs", "sign", "kp"};
  switch (parse_format(c.format)) {
    case Format::Json: {
      Json j;
      j["n"] = c.n;
      Json list = Json::array();
      for (const auto& r : rows)
        list.push_back({{"degree", std::stoul(r[0])},
                        {"lambda", r[1]},
                        {"label", r[2]},
                        {"pairs", r[3]},
                        {"sign", r[4] == "+1" ? 1 : -1},
                        {"kp", r[5] == "true"}});
      j["rows"] = std::move(list);
      j["ep"] = ep.str();
      j["kp"] = kp.str();
      j["closed_form"] = {{"ep", ep_cf.str()}, {"kp", kp_cf.str()}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << csv(header, rows);
      break;
    case Format::Table:
      out << aligned(header, rows);
      out << "|E^P|=" << ep << " |K^P|=" << kp << "  closed form: |E^P|=" << ep_cf << " |K^P|=" << kp_cf
          << '\n';
      break;
  }
  return ok ? kOk : kMismatch;
}

int cmd_spin(RunConfig c, std::ostream& out, std::ostream& err) {
  if (c.genus < 0) throw UsageError("--genus must be non-negative");
  c.n = 2 * static_cast<unsigned>(c.genus) + 2;
  c.q = static_cast<int>(c.n / 2);
  c.group = "ext";
  return cmd_dim(c, out, err,
                 "genus " + std::to_string(c.genus) + ": upper container for H*(S(Σ_g;c)), n=" +
                     std::to_string(c.n));
}

void add_format(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_common(CLI::App* sub, RunConfig& c) {
  add_format(sub, c);
  sub->add_option("--workers", c.workers, "worker threads for the oracle")->check(CLI::PositiveNumber);
  sub->add_flag("--verbose", c.verbose, "progress on stderr");
  sub->add_flag("--long", c.long_running, "allow long oracle runs (n <= 10)");
}

void add_group(CLI::App* sub, RunConfig& c, bool need_n) {
  auto* n = sub->add_option("--n", c.n, "number of strands");
  if (need_n) n->required();
  sub->add_option("--group", c.group, "prod or ext")->check(CLI::IsMember({"prod", "ext"}));
  sub->add_option("--q", c.q, "size of the marked block");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Invariant cohomology of pure braid groups"};
  app.require_subcommand(1);

  auto* dim = app.add_subcommand("dim", "graded dimension table");
  add_group(dim, c, true);
  add_common(dim, c);
  dim->add_option("--degree", c.degree, "print a single degree");
  dim->add_option("--method", c.method, "formula, catalog or oracle")
      ->check(CLI::IsMember({"formula", "catalog", "oracle"}));

  auto* verify = app.add_subcommand("verify", "compare formula, catalog and oracle");
  add_group(verify, c, true);
  add_common(verify, c);

  auto* necklace = app.add_subcommand("necklace", "necklace listings");
  necklace->require_subcommand(1);
  auto* pi = necklace->add_subcommand("pi", "list Pi(lambda, d)");
  pi->add_option("--lambda", c.lambda, "cycle length")->required();
  pi->add_option("--d", c.d, "weight")->required();
  add_format(pi, c);
  auto* selfdual = necklace->add_subcommand("selfdual", "count self-dual necklaces of length 2d");
  selfdual->add_option("--d", c.d, "half length")->required();
  add_format(selfdual, c);

  auto* ep = app.add_subcommand("ep", "list the sigma-fixed generators");
  ep->add_option("--n", c.n, "number of strands")->required();
  add_format(ep, c);

  auto* spin = app.add_subcommand("spin", "extension table for n = 2g + 2");
  spin->add_option("--genus", c.genus, "genus g")->required();
  spin->add_option("--degree", c.degree, "print a single degree");
  spin->add_option("--method", c.method, "formula, catalog or oracle")
      ->check(CLI::IsMember({"formula", "catalog", "oracle"}));
  add_common(spin, c);

  auto deepest = [&]() {
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    return target;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest()->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << deepest()->help();
    return kUsage;
  }

  try {
    if (dim->parsed()) return cmd_dim(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (pi->parsed()) return cmd_necklace_pi(c, out);
    if (selfdual->parsed()) return cmd_necklace_selfdual(c, out);
    if (ep->parsed()) return cmd_ep(c, out);
    if (spin->parsed()) return cmd_spin(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << deepest()->help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapabilityError& e) {
    err << "capability: " << e.what() << '\n';
    return kCapability;
  } catch (const std::exception& e) {
    err << "internal consistency: " << e.what() << '\n';
    return kConsistency;
  }
  return kUsage;
}

}  // namespace braidinv::cli
