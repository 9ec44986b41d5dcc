#pragma once

// Closed-form sizes, upper bounds and number-theoretic admissibility tests.
// Every value carries the formula branch it came from.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ooc {

enum class BoundKind { exact, upper_bound, unknown };

std::string to_string(BoundKind kind);

struct Dependency {
  std::string name;
  std::int64_t value = 0;
  friend bool operator==(const Dependency&, const Dependency&) = default;
};

/// For kind == unknown, `value` is the best upper bound known and the
/// dependencies carry an "upper_bound" entry.
struct BoundReport {
  std::int64_t value = 0;
  BoundKind kind = BoundKind::unknown;
  std::string branch;
  std::vector<Dependency> dependencies;
};

struct PrimeClause {
  std::int64_t prime = 0;
  int exponent = 0;
  std::optional<std::int64_t> order_of_two;  // absent for p = 2
  bool satisfied = false;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<PrimeClause> factors;
  std::optional<std::int64_t> tight_size;
};

// -- number theory ---------------------------------------------------------

std::int64_t gcd(std::int64_t a, std::int64_t b);
/// Trial division; (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t x);
bool is_prime(std::int64_t x);
/// ord_m(a); throws DomainError unless gcd(a, m) = 1 and m >= 2.
std::int64_t mult_order(std::int64_t a, std::int64_t m);

/// Every prime p | x has p = 1 mod 4, and 4 | ord_p(2) whenever p = 1 mod 8.
bool prime_clause_holds(std::int64_t x);

// -- sizes and bounds ------------------------------------------------------

/// Optimal CAC(m,3) size for even m; ParameterError for odd m.
BoundReport cac_optimal_size(std::int64_t m);
BoundReport psi_e_upper_bound(std::int64_t m);
BoundReport psi_e_exact(std::int64_t m);
/// M^e(p,3) for primes p >= 5; DomainError otherwise.
BoundReport me_prime(std::int64_t p);
AdmissibilityReport tight_admissible(std::int64_t m);
bool in_S(std::int64_t s);
BoundReport phi_upper_bound(std::int64_t n, std::int64_t m);
BoundReport phi_exact(std::int64_t n, std::int64_t m);
/// m-cyclic 3-GDD of type (vm)^u; DomainError for u <= 2.
bool gdd_exists(std::int64_t v, std::int64_t u, std::int64_t m);

/// Splits m = 4^s * r with 4 not dividing r.
struct PowerOfFour {
  int s = 0;
  std::int64_t r = 0;
};
PowerOfFour split_power_of_four(std::int64_t m);

}  // namespace ooc
