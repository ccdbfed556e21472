#pragma once

#include <stdexcept>
#include <string>

namespace braidinv {

// Precondition violated by the caller (bad n, q, index, empty word, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal cross-check failed: a formula produced a non-integer, a
// character sum did not collapse, sigma broke admissibility. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// The request is well-formed but beyond what the brute-force oracle can
// enumerate in the selected mode.
class CapabilityError : public std::runtime_error {
public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidinv
