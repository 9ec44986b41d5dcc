#include <doctest.h>

#include "oracles.hpp"
#include "ooc/bounds.hpp"
#include "ooc/errors.hpp"

using namespace ooc;

namespace {

// CAC(m,3) sizes for even m, straight from the case table.
std::int64_t cac_table(std::int64_t m) {
  if (m == 48) return 10;
  if (m == 64) return 13;
  if (m % 4 == 2) return (m - 2) / 4;
  switch (m % 24) {
    case 0: return (7 * m + 16) / 32;
    case 4:
    case 20: return (7 * m + 4) / 32;
    case 8:
    case 16: return 7 * m / 32;
    default: return (7 * m + 20) / 32;
  }
}

bool clause(long long x) {
  for (long long p = 2; p <= x; ++p) {
    if (x % p != 0 || !oracle::prime(p)) continue;
    if (p % 4 != 1) return false;
    if (p % 8 == 1 && oracle::mult_order(2, p) % 4 != 0) return false;
  }
  return true;
}

bool admissible(long long m) {
  if (m == 4) return true;
  if (m < 3) return false;
  return m % 3 == 0 ? m % 9 != 0 && clause(m / 3) : clause(m);
}

bool in_s(long long s) {
  if (s % 12 != 1 && s % 12 != 5) return false;
  for (long long p = 2; p <= s; ++p) {
    if (s % p != 0 || !oracle::prime(p)) continue;
    if (!(p % 8 == 5 || (p % 8 == 1 && oracle::mult_order(2, p) % 4 == 0))) return false;
  }
  return true;
}

// The main size table; -1 where it says nothing.
std::int64_t phi_table(std::int64_t n, std::int64_t m) {
  if (n == 1 && m == 64) return 13;
  if (n == 1 && m % 8 == 0) return 7 * m / 32;
  if (n == 1 && m % 8 == 4) return (7 * m + 4) / 32;
  if (n == 2 && m == 4) return 2;
  if (n == 2 && m % 4 == 0) return 3 * m / 4;
  if (n == 3 && m == 4) return 6;
  if (n % 3 == 0 && n != 6 && n != 9) {
    if (m % 16 == 8) return n * (8 * n * m + 3 * m - 8) / 48;
    if (m % 64 == 32) return n * (32 * n * m + 11 * m - 32) / 192;
    if (m > 4 && (m % 48 == 4 || m % 48 == 20) && in_s(m / 4)) return n * (8 * n * m + 3 * m + 4) / 48;
  }
  return -1;
}

}  // namespace

TEST_CASE("multiplicative order") {
  CHECK(mult_order(2, 5) == 4);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(1, 9) == 1);
  CHECK_THROWS_AS(mult_order(2, 8), DomainError);
  for (long long m = 3; m < 400; m += 2) CHECK(mult_order(2, m) == oracle::mult_order(2, m));
}

TEST_CASE("factorization and primality") {
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  for (long long x = 1; x < 2000; ++x) {
    CHECK(is_prime(x) == oracle::prime(x));
    long long prod = 1;
    for (auto [p, e] : factorize(x)) {
      CHECK(oracle::prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == x);
  }
}

TEST_CASE("CAC sizes") {
  CHECK(cac_optimal_size(48).value == 10);
  CHECK(cac_optimal_size(64).value == 13);
  CHECK(cac_optimal_size(6).value == 1);
  CHECK_THROWS_AS(cac_optimal_size(7), ParameterError);
  for (std::int64_t m = 2; m <= 1000; m += 2) {
    const BoundReport r = cac_optimal_size(m);
    CHECK(r.kind == BoundKind::exact);
    CHECK(r.value == cac_table(m));
  }
}

TEST_CASE("Psi^e upper bound") {
  CHECK(psi_e_upper_bound(6).value == 1);
  CHECK(psi_e_upper_bound(8).value == 1);
  CHECK(psi_e_upper_bound(4).value == 1);
}

TEST_CASE("Psi^e exact values") {
  CHECK(psi_e_exact(8).value == 1);
  CHECK(psi_e_exact(20).value == 4);
  CHECK(psi_e_exact(20).kind == BoundKind::exact);
  CHECK(psi_e_exact(52).value == 10);
}

TEST_CASE("Psi^e agrees with subset enumeration where exact") {
  for (int m = 3; m <= 40; ++m) {
    const BoundReport r = psi_e_exact(m);
    CHECK(r.value <= psi_e_upper_bound(m).value);
    if (r.kind != BoundKind::exact) continue;
    INFO("m = " << m);
    CHECK(r.value == oracle::psi_e_by_subsets(m, 2));
    if (r.branch != "psi_e/prime-r") CHECK(r.value == psi_e_upper_bound(m).value);
  }
}

TEST_CASE("M^e for primes") {
  CHECK(me_prime(5).value == 1);
  CHECK(me_prime(7).value == 1);
  CHECK(me_prime(13).value == 3);
  CHECK_THROWS_AS(me_prime(9), DomainError);
  CHECK_THROWS_AS(me_prime(3), DomainError);
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    INFO("p = " << p);
    CHECK(me_prime(p).value == oracle::psi_e_by_subsets(p, 3));
  }
}

TEST_CASE("tight admissibility") {
  const AdmissibilityReport a = tight_admissible(13);
  CHECK(a.admissible);
  CHECK(a.tight_size == 3);
  CHECK(tight_admissible(4).admissible);
  CHECK(tight_admissible(4).tight_size == 1);
  CHECK_FALSE(tight_admissible(7).admissible);
  for (long long m = 3; m <= 2000; ++m) {
    INFO("m = " << m);
    CHECK(tight_admissible(m).admissible == admissible(m));
  }
}

TEST_CASE("the set S") {
  CHECK(in_S(5));
  CHECK(in_S(13));
  CHECK_FALSE(in_S(3));
  for (long long s = 1; s <= 2000; ++s) {
    CHECK(in_S(s) == in_s(s));
    if (in_S(s) && s > 1) CHECK(tight_admissible(s).admissible);
  }
}

TEST_CASE("Phi upper bounds") {
  CHECK(phi_upper_bound(2, 8).value == 6);
  CHECK(phi_upper_bound(1, 64).value == 14);
  CHECK(phi_upper_bound(3, 8).value == 13);
}

TEST_CASE("Phi exact values") {
  CHECK(phi_exact(3, 8).value == 13);
  CHECK(phi_exact(3, 32).value == 53);
  CHECK(phi_exact(12, 8).value == 196);
  CHECK(phi_exact(2, 4).value == 2);
  CHECK(phi_exact(3, 4).value == 6);
  CHECK(phi_exact(1, 64).value == 13);
  const BoundReport open = phi_exact(5, 8);
  CHECK(open.kind == BoundKind::unknown);
  bool has_ub = false;
  for (const Dependency& d : open.dependencies) has_ub = has_ub || d.name == "upper_bound";
  CHECK(has_ub);
  CHECK(phi_exact(6, 8).kind == BoundKind::unknown);
  CHECK(phi_exact(9, 8).kind == BoundKind::unknown);
  CHECK(phi_exact(2, 7).kind == BoundKind::unknown);
}

TEST_CASE("Phi exact matches the size table and respects the upper bound") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t m = 1; m <= 300; ++m) {
      const BoundReport e = phi_exact(n, m);
      const std::int64_t expected = phi_table(n, m);
      INFO("n = " << n << ", m = " << m);
      if (expected < 0) {
        CHECK(e.kind != BoundKind::exact);
      } else {
        CHECK(e.kind == BoundKind::exact);
        CHECK(e.value == expected);
      }
      CHECK(e.value <= phi_upper_bound(n, m).value);
    }
  }
}

TEST_CASE("CAC size dominates the OOC size") {
  for (std::int64_t m = 4; m <= 1000; m += 4) {
    const BoundReport e = phi_exact(1, m);
    if (e.kind == BoundKind::exact) CHECK(cac_optimal_size(m).value >= e.value);
  }
}

TEST_CASE("composition formula for m = 8 mod 16") {
  for (std::int64_t n = 12; n <= 60; n += 3) {
    for (std::int64_t m = 8; m <= 1000; m += 16) {
      const BoundReport psi = psi_e_exact(m);
      REQUIRE(psi.kind == BoundKind::exact);
      CHECK(psi.value == (3 * m - 8) / 16);
      CHECK(phi_exact(n, m).value == n * (n * m + 2 * psi.value) / 6);
    }
  }
}

TEST_CASE("cyclic GDD existence") {
  CHECK(gdd_exists(3, 4, 8));
  CHECK_FALSE(gdd_exists(1, 3, 2));
  CHECK(gdd_exists(6, 4, 4));
  CHECK_THROWS_AS(gdd_exists(3, 2, 4), DomainError);
  for (std::int64_t u = 4; u <= 20; ++u) {
    for (std::int64_t m = 4; m <= 64; m += 4) CHECK(gdd_exists(3, u, m));
  }
}

TEST_CASE("power-of-four split") {
  const PowerOfFour a = split_power_of_four(208);
  CHECK(a.s == 2);
  CHECK(a.r == 13);
  CHECK(split_power_of_four(6).s == 0);
}
