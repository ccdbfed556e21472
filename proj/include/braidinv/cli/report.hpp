#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidinv/bigint.hpp"
#include "braidinv/product_catalog.hpp"

namespace braidinv::cli {

enum class Format { Table, Json, Csv };

/// A graded dimension table as printed by `dim`, `spin` and `verify`.
struct DimensionReport {
  unsigned n = 0;
  unsigned q = 0;
  std::string group;   // "prod" or "ext"
  std::string method;  // "formula", "catalog" or "oracle"
  std::vector<std::pair<unsigned, BigInt>> graded;
  BigInt total;
  std::string annotation;  // optional free text, empty when absent

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// Rows for every degree 0..n-1, or only `degree` when given. The total is
/// always the full sum.
DimensionReport make_report(unsigned n, unsigned q, std::string group, std::string method,
                            const PoincareTable& table, std::optional<unsigned> degree = {});

std::string render(const DimensionReport& report, Format format);
std::string render_table(const DimensionReport& report);
std::string render_json(const DimensionReport& report);
std::string render_csv(const DimensionReport& report);

/// Inverse of render_json. Throws DomainError on malformed input.
DimensionReport parse_json(const std::string& text);

/// Right-aligned fixed-width columns separated by two spaces.
std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace braidinv::cli
