#ifndef EXTREMAL_ERRORS_HPP
#define EXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace extremal {

// Mismatched ambient dimensions, invalid permutations and the like.
struct dimension_error : std::invalid_argument {
  explicit dimension_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Violated value-level preconditions (zero polynomial, non-injective map, ...).
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration guard (factorial bound, census grid bound) was exceeded.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented operation precondition failed. When the precondition is
// extremality, `witness` holds two 1-based lex orders with distinct
// standard monomial sets.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
  precondition_error(const std::string& msg, std::vector<int> order_a, std::vector<int> order_b)
      : std::runtime_error(msg), witness_a(std::move(order_a)), witness_b(std::move(order_b)) {}
  std::vector<int> witness_a;
  std::vector<int> witness_b;
  bool has_witness() const { return !witness_a.empty(); }
};

// An internal contract broke (e.g. a singular interpolation system where the
// standard monomial basis guarantees regularity). Signals a bug, not bad input.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace extremal

#endif
