#pragma once

#include <stdexcept>
#include <string>

namespace qpascal {

// Base p is not a prime >= 2. Lucas/Kummer style digit arguments are false
// for composite bases, so those are rejected instead of silently accepted.
class InvalidBase : public std::invalid_argument {
 public:
  explicit InvalidBase(const std::string& what) : std::invalid_argument(what) {}
};

// An argument is outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// nu_p(0) is undefined at the library level; renderers treat it as an
// "infinite" sentinel instead of calling nu_p.
class ValuationOfZero : public std::domain_error {
 public:
  ValuationOfZero() : std::domain_error("p-adic valuation of zero is undefined") {}
};

}  // namespace qpascal
