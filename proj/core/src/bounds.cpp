#include "ooc/bounds.hpp"

#include <algorithm>

#include "ooc/errors.hpp"

namespace ooc {
namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0) throw std::logic_error("closed form did not divide exactly");
  return a / b;
}

BoundReport exact(std::int64_t value, std::string branch, std::vector<Dependency> deps = {}) {
  return {value, BoundKind::exact, std::move(branch), std::move(deps)};
}

// (2^{2s-1} - 2) r / 3, the contribution of the s-1 outer quadrupling stages.
std::int64_t tower_term(int s, std::int64_t r) { return exact_div((pow2(2 * s - 1) - 2) * r, 3); }

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::upper_bound: return "upper_bound";
    case BoundKind::unknown: return "unknown";
  }
  return "?";
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t x) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) return false;
  }
  return true;
}

__extension__ typedef __int128 wide_t;

std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (m < 2) throw DomainError("multiplicative order needs m >= 2");
  a %= m;
  if (a < 0) a += m;
  if (gcd(a, m) != 1) throw DomainError("multiplicative order needs a unit");
  std::int64_t x = a;
  std::int64_t order = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<wide_t>(x) * a) % m);
    ++order;
  }
  return order;
}

bool prime_clause_holds(std::int64_t x) {
  for (const auto& [p, e] : factorize(x)) {
    if (p % 4 != 1) return false;
    if (p % 8 == 1 && mult_order(2, p) % 4 != 0) return false;
  }
  return true;
}

PowerOfFour split_power_of_four(std::int64_t m) {
  if (m < 1) throw DomainError("m must be positive");
  PowerOfFour out{0, m};
  while (out.r % 4 == 0) {
    out.r /= 4;
    ++out.s;
  }
  return out;
}

BoundReport cac_optimal_size(std::int64_t m) {
  if (m < 2 || m % 2 != 0) throw ParameterError("optimal CAC(m,3) sizes are known for even m only");
  if (m == 48) return exact(10, "cac/exception-48");
  if (m == 64) return exact(13, "cac/exception-64");
  if (m % 4 == 2) return exact((m - 2) / 4, "cac/2mod4");
  switch (m % 24) {
    case 0: return exact((7 * m + 16) / 32, "cac/0mod24");
    case 4:
    case 20: return exact((7 * m + 4) / 32, "cac/4,20mod24");
    case 8:
    case 16: return exact(7 * m / 32, "cac/8,16mod24");
    default: return exact((7 * m + 20) / 32, "cac/12mod24");
  }
}

BoundReport psi_e_upper_bound(std::int64_t m) {
  if (m < 1) throw DomainError("m must be positive");
  if (m % 4 != 0) {
    return {(m - 1) / 4, BoundKind::upper_bound, "psi_e-ub/not0mod4", {}};
  }
  const BoundReport inner = psi_e_upper_bound(m / 4);
  const std::int64_t ceil8 = (m + 7) / 8;
  return {ceil8 + inner.value,
          BoundKind::upper_bound,
          "psi_e-ub/0mod4",
          {{"ceil(m/8)", ceil8}, {"psi_e_ub(" + std::to_string(m / 4) + ")", inner.value}}};
}

BoundReport me_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw DomainError("M^e(p,3) closed form needs a prime p >= 5");
  const std::int64_t ord = mult_order(2, p);
  const std::int64_t orbits = (p - 1) / (pow2(static_cast<int>(ord % 2)) * ord);
  const std::int64_t per_orbit = ord / pow2(static_cast<int>((ord + 1) % 2)) / 2;
  return exact(orbits * per_orbit, "me/prime", {{"ord_p(2)", ord}});
}

BoundReport psi_e_exact(std::int64_t m) {
  const auto [s, r] = split_power_of_four(m);
  const std::vector<Dependency> shape{{"s", s}, {"r", r}};
  if (r % 4 == 2) {
    return exact(exact_div(pow2(2 * s + 1) * r + r - 6, 12), "psi_e/r2mod4", shape);
  }
  if ((r % 12 == 1 || r % 12 == 5) && prime_clause_holds(r)) {
    const std::int64_t v = s == 0 ? (r - 1) / 4 : tower_term(s, r) + (3 * r + 1) / 4;
    return exact(v, "psi_e/tight-r1,5mod12", shape);
  }
  if (r % 12 == 3 && prime_clause_holds(r / 3)) {
    const std::int64_t v = s == 0 ? (r - 3) / 4 : tower_term(s, r) + (3 * r - 1) / 4;
    return exact(v, "psi_e/tight-r3mod12", shape);
  }
  if (r >= 5 && is_prime(r)) {
    const std::int64_t me = me_prime(r).value;
    const std::int64_t v = s == 0 ? me : tower_term(s, r) + (r + 1) / 2 + me;
    auto deps = shape;
    deps.push_back({"M^e(r,3)", me});
    return exact(v, "psi_e/prime-r", deps);
  }
  const BoundReport ub = psi_e_upper_bound(m);
  auto deps = shape;
  deps.push_back({"upper_bound", ub.value});
  return {ub.value, BoundKind::unknown, "psi_e/open", deps};
}

AdmissibilityReport tight_admissible(std::int64_t m) {
  AdmissibilityReport report;
  if (m == 4) {
    report.admissible = true;
    report.tight_size = 1;
    return report;
  }
  bool all = m >= 3;
  for (const auto& [p, e] : factorize(m)) {
    PrimeClause clause{p, e, std::nullopt, false};
    if (p != 2) clause.order_of_two = mult_order(2, p);
    if (p == 3) {
      clause.satisfied = e <= 1;
    } else {
      clause.satisfied = p % 4 == 1 && (p % 8 != 1 || *clause.order_of_two % 4 == 0);
    }
    all = all && clause.satisfied;
    report.factors.push_back(clause);
  }
  report.admissible = all;
  if (all) report.tight_size = m % 12 == 3 ? (m + 1) / 4 : (m - 1) / 4;
  return report;
}

bool in_S(std::int64_t s) {
  if (s < 1) return false;
  if (s % 12 != 1 && s % 12 != 5) return false;
  for (const auto& [p, e] : factorize(s)) {
    const bool ok = p % 8 == 5 || (p % 8 == 1 && mult_order(2, p) % 4 == 0);
    if (!ok) return false;
  }
  return true;
}

BoundReport phi_upper_bound(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw DomainError("n and m must be positive");
  const BoundReport psi = psi_e_exact(m);
  const std::int64_t psi_value = psi.value;  // exact value or its upper bound
  BoundReport best{floor_div(n * (n * m + 2 * psi_value - (m % 2)), 6),
                   BoundKind::upper_bound,
                   m % 2 == 0 ? "phi-ub/general-even" : "phi-ub/general-odd",
                   {{"psi_e", psi_value}}};
  const auto consider = [&](std::int64_t value, const char* branch) {
    if (value < best.value) {
      best.value = value;
      best.branch = branch;
    }
  };
  if (n == 2) consider(m % 2 == 0 ? 3 * m / 4 : (3 * m - 2) / 4, "phi-ub/n2");
  if (n == 1 && m % 8 == 0) consider(7 * m / 32, "phi-ub/n1-0mod8");
  if (n == 1 && m % 8 == 4) consider((7 * m + 4) / 32, "phi-ub/n1-4mod8");
  if (n == 3 && m == 4) consider(6, "phi-ub/3x4");
  if (n == 2 && m == 4) consider(2, "phi-ub/2x4");
  return best;
}

BoundReport phi_exact(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw DomainError("n and m must be positive");
  if (n == 1 && m == 64) return exact(13, "phi/1x64");
  if (n == 1 && m % 8 == 0) return exact(7 * m / 32, "phi/n1-0mod8");
  if (n == 1 && m % 8 == 4) return exact((7 * m + 4) / 32, "phi/n1-4mod8");
  if (n == 2 && m == 4) return exact(2, "phi/2x4");
  if (n == 2 && m % 4 == 0) return exact(3 * m / 4, "phi/n2");
  if (n == 3 && m == 4) return exact(6, "phi/3x4");
  if (n % 3 == 0 && n != 6 && n != 9) {
    if (m % 16 == 8) return exact(exact_div(n * (8 * n * m + 3 * m - 8), 48), "phi/n0mod3-m8mod16");
    if (m % 64 == 32) {
      return exact(exact_div(n * (32 * n * m + 11 * m - 32), 192), "phi/n0mod3-m32mod64");
    }
    if (m > 4 && (m % 48 == 4 || m % 48 == 20) && in_S(m / 4)) {
      return exact(exact_div(n * (8 * n * m + 3 * m + 4), 48), "phi/n0mod3-m4,20mod48");
    }
  }
  BoundReport ub = phi_upper_bound(n, m);
  return {ub.value, BoundKind::unknown, "phi/open", {{"upper_bound", ub.value}, {ub.branch, ub.value}}};
}

bool gdd_exists(std::int64_t v, std::int64_t u, std::int64_t m) {
  if (u <= 2) throw DomainError("cyclic 3-GDD existence needs u >= 3");
  if (v < 1 || m < 1) throw DomainError("v and m must be positive");
  if (u == 3) return m % 2 == 1 || v % 2 == 0;
  if (((u - 1) * v * m) % 2 != 0) return false;
  if ((u * (u - 1) * v * m) % 3 != 0) return false;
  if ((u % 4 == 2 || u % 4 == 3) && m % 4 == 2 && v % 2 != 0) return false;
  return true;
}

}  // namespace ooc
