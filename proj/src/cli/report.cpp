#include "braidinv/cli/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "braidinv/errors.hpp"

namespace braidinv::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const BigInt& v) { return v.str(); }

Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer");
}

}  // namespace

DimensionReport make_report(unsigned n, unsigned q, std::string group, std::string method,
                            const PoincareTable& table, std::optional<unsigned> degree) {
  DimensionReport r;
  r.n = n;
  r.q = q;
  r.group = std::move(group);
  r.method = std::move(method);
  for (unsigned i = 0; i < n; ++i)
    if (!degree || *degree == i) r.graded.emplace_back(i, table.at(i));
  r.total = table.total();
  return r;
}

std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cell(cells[c]);
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string render_table(const DimensionReport& r) {
  std::ostringstream os;
  if (!r.annotation.empty()) os << r.annotation << '\n';
  os << "group=" << r.group << " n=" << r.n << " q=" << r.q << " method=" << r.method << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& [deg, dim] : r.graded) rows.push_back({std::to_string(deg), str(dim)});
  rows.push_back({"total", str(r.total)});
  os << aligned({"degree", "dim"}, rows);
  return os.str();
}

std::string render_csv(const DimensionReport& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [deg, dim] : r.graded) rows.push_back({std::to_string(deg), str(dim)});
  return csv({"degree", "dim"}, rows);
}

std::string render_json(const DimensionReport& r) {
  Json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["group"] = r.group;
  Json graded = Json::array();
  for (const auto& [deg, dim] : r.graded) graded.push_back({{"degree", deg}, {"dim", big_to_json(dim)}});
  j["graded"] = std::move(graded);
  j["total"] = big_to_json(r.total);
  j["provenance"] = {{"method", r.method}};
  if (!r.annotation.empty()) j["annotation"] = r.annotation;
  return j.dump(2) + "\n";
}

std::string render(const DimensionReport& report, Format format) {
  switch (format) {
    case Format::Json:
      return render_json(report);
    case Format::Csv:
      return render_csv(report);
    case Format::Table:
      break;
  }
  return render_table(report);
}

DimensionReport parse_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    DimensionReport r;
    r.n = j.at("n").get<unsigned>();
    r.q = j.at("q").get<unsigned>();
    r.group = j.at("group").get<std::string>();
    for (const auto& row : j.at("graded"))
      r.graded.emplace_back(row.at("degree").get<unsigned>(), big_from_json(row.at("dim")));
    r.total = big_from_json(j.at("total"));
    r.method = j.at("provenance").at("method").get<std::string>();
    if (j.contains("annotation")) r.annotation = j["annotation"].get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace braidinv::cli
