#include <doctest.h>

#include "oracles.hpp"
#include "ooc/bounds.hpp"
#include "ooc/construct.hpp"
#include "ooc/errors.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

namespace {

std::set<int> leave(const ConstructionResult& r) { return oracle::leave(r.code); }

bool holds(const ConstructionResult& r, std::initializer_list<long long> slots) {
  const Codeword want = normalize(Codeword::on_row(0, slots, r.code.params.m), r.code.params.m);
  for (const Codeword& w : r.code.codewords) {
    if (normalize(w, r.code.params.m) == want) return true;
  }
  return false;
}

void check_sound(const ConstructionResult& r) {
  CHECK(r.verified);
  const oracle::Verdict v = oracle::correlation_verdict(r.code);
  CHECK(v.auto_ok);
  CHECK(v.cross_ok);
  CHECK(static_cast<std::int64_t>(r.code.size()) == r.claimed_size);
}

}  // namespace

TEST_CASE("equi_2mod4") {
  const ConstructionResult a = equi_2mod4(6);
  CHECK(a.code.size() == 1);
  CHECK(holds(a, {0, 1, 2}));
  CHECK(leave(a) == std::set<int>{3});
  const ConstructionResult b = equi_2mod4(10);
  CHECK(b.code.size() == 2);
  CHECK(holds(b, {0, 1, 2}));
  CHECK(holds(b, {0, 3, 6}));
  CHECK(leave(b) == std::set<int>{5});
  const ConstructionResult c = equi_2mod4(2);
  CHECK(c.code.size() == 0);
  CHECK(leave(c) == std::set<int>{1});
  CHECK_THROWS_AS(equi_2mod4(8), ParameterError);
  CHECK(a.branch == "equi/2mod4");
}

TEST_CASE("g_regular_4g") {
  const ConstructionResult a = g_regular_4g(2);
  CHECK(a.code.size() == 1);
  CHECK(holds(a, {0, 3, 6}));
  CHECK(leave(a) == std::set<int>{1, 4, 7});
  const ConstructionResult b = g_regular_4g(5);
  CHECK(b.code.params.m == 20);
  CHECK(b.code.size() == 3);
  CHECK(holds(b, {0, 5, 10}));
  CHECK(holds(b, {0, 7, 14}));
  CHECK(holds(b, {0, 9, 18}));
  const ConstructionResult c = g_regular_4g(1);
  CHECK(c.code.params.m == 4);
  CHECK(holds(c, {0, 1, 2}));
  for (int g = 1; g <= 50; ++g) {
    const ConstructionResult r = g_regular_4g(g);
    check_sound(r);
    CHECK(r.code.size() == static_cast<std::size_t>((g + 1) / 2));
    const StructuralFacts f = structural_facts(r.code);
    CHECK(std::find(f.regular_subgroups.begin(), f.regular_subgroups.end(), g) != f.regular_subgroups.end());
  }
}

TEST_CASE("fill_regular") {
  const ConstructionResult empty_inner = equi_2mod4(2);
  const ConstructionResult a = fill_regular(g_regular_4g(2), empty_inner);
  CHECK(a.code.size() == 1);
  CHECK(leave(a) == std::set<int>{1, 4, 7});

  const ConstructionResult b = fill_regular(g_regular_4g(6), equi_2mod4(6));
  CHECK(b.code.size() == 4);
  std::set<int> want = oracle::odd_range(1, 5);
  oracle::add(want, oracle::odd_range(19, 23));
  want.insert(12);
  CHECK(leave(b) == want);

  const ConstructionResult c = fill_regular(g_regular_4g(5), tight_derived(5, 0));
  CHECK(c.code.size() == 4);
  CHECK(c.code.size() == static_cast<std::size_t>(psi_e_exact(20).value));

  CHECK_THROWS_AS(fill_regular(g_regular_4g(5), equi_2mod4(6)), ParameterError);
}

TEST_CASE("quadruple") {
  const ConstructionResult a = quadruple(equi_2mod4(2));
  CHECK(a.code.size() == 1);
  CHECK(leave(a) == std::set<int>{1, 4, 7});
  const ConstructionResult b = quadruple(tight_derived(5, 0));
  CHECK(b.code.size() == 4);
  CHECK(leave(b) == std::set<int>{1, 3, 17, 19});
  const ConstructionResult c = quadruple(equi_2mod4(6));
  CHECK(c.code.size() == 4);
}

TEST_CASE("equi_power4") {
  const ConstructionResult a = equi_power4(1, 2, EquiVariant::standard);
  CHECK(a.code.size() == 1);
  CHECK(holds(a, {0, 3, 6}));
  CHECK(leave(a) == std::set<int>{1, 4, 7});
  const ConstructionResult b = equi_power4(1, 2, EquiVariant::half_free);
  CHECK(b.code.size() == 1);
  CHECK(holds(b, {0, 2, 4}));
  CHECK(leave(b) == std::set<int>{1, 3, 5, 7});
  const ConstructionResult c = equi_power4(2, 2, EquiVariant::standard);
  CHECK(c.code.params.m == 32);
  CHECK(c.code.size() == 5);
  const ConstructionResult d = equi_power4(2, 2, EquiVariant::half_free);
  CHECK(leave(d) == std::set<int>{1, 3, 4, 5, 7, 12, 20, 25, 27, 28, 29, 31});
  CHECK_THROWS_AS(equi_power4(0, 6, EquiVariant::half_free), ParameterError);
  CHECK_THROWS_AS(equi_power4(1, 4, EquiVariant::standard), ParameterError);
}

TEST_CASE("tight_derived") {
  const ConstructionResult a = tight_derived(5, 0);
  CHECK(a.code.size() == 1);
  CHECK(holds(a, {0, 1, 2}));
  CHECK(leave(a).empty());
  const ConstructionResult b = tight_derived(13, 1);
  CHECK(b.code.params.m == 52);
  CHECK(b.code.size() == 10);
  std::set<int> want = oracle::odd_range(1, 11);
  oracle::add(want, oracle::odd_range(41, 51));
  CHECK(leave(b) == want);
  const ConstructionResult c = tight_derived(3, 0);
  CHECK(c.code.size() == 0);
  CHECK(leave(c) == std::set<int>{1, 2});
  CHECK_THROWS_AS(tight_derived(7, 0), DomainError);
}

TEST_CASE("prime_derived") {
  const ConstructionResult a = prime_derived(7, 0);
  CHECK(a.code.size() == 1);
  const ConstructionResult b = prime_derived(7, 1);
  CHECK(b.code.params.m == 28);
  CHECK(b.code.size() == 5);
  const ConstructionResult c = prime_derived(5, 1);
  CHECK(c.code.size() == 4);
  CHECK_THROWS(prime_derived(9, 1));
}

TEST_CASE("explicit codes") {
  const ConstructionResult d48 = explicit_code("1d48");
  CHECK(d48.code.size() == 10);
  CHECK(holds(d48, {0, 1, 17}));
  CHECK(holds(d48, {0, 12, 24}));
  CHECK(explicit_code("3x4").code.size() == 6);
  CHECK(explicit_code("3x8").code.size() == 13);
  CHECK(explicit_code("3x20").code.size() == 34);
  CHECK(explicit_code("3x32").code.size() == 53);
  CHECK(explicit_code("3x52").code.size() == 88);
  for (const std::string& id : explicit_code_ids()) check_sound(explicit_code(id));
  CHECK_THROWS_AS(explicit_code("3x9"), ParameterError);
}

TEST_CASE("ooc_2xm") {
  const ConstructionResult a = ooc_2xm(4);
  CHECK(a.code.size() == 2);
  CHECK(a.code.codewords[0] == Codeword{{0, 0}, {0, 1}, {0, 2}});
  CHECK(a.code.codewords[1] == Codeword{{1, 0}, {1, 1}, {1, 2}});
  CHECK(ooc_2xm(8).code.size() == 6);
  CHECK(ooc_2xm(12).code.size() == 9);
  CHECK_THROWS_AS(ooc_2xm(6), ParameterError);
}

TEST_CASE("ooc_3xm") {
  CHECK(ooc_3xm(24).code.size() == 40);
  CHECK(ooc_3xm(96).code.size() == 160);
  CHECK(ooc_3xm(68).code.size() == 115);
  CHECK_FALSE(ooc_3xm_supported(10));
  CHECK_THROWS_AS(ooc_3xm(10), ParameterError);
}

TEST_CASE("ooc_3xm rows are optimal equi-difference subcodes") {
  for (int m = 4; m <= 200; m += 4) {
    if (!ooc_3xm_supported(m)) continue;
    const ConstructionResult r = ooc_3xm(m);
    check_sound(r);
    if (m == 4) continue;
    const BoundReport psi = psi_e_exact(m);
    for (int row = 0; row < 3; ++row) {
      const Code sub = restrict_to_row(r.code, row);
      INFO("m = " << m << ", row = " << row);
      CHECK(structural_facts(sub).is_equi_difference);
      if (psi.kind == BoundKind::exact) CHECK(static_cast<std::int64_t>(sub.size()) == psi.value);
    }
  }
}

TEST_CASE("expand_gdd") {
  // one group, no blocks: the input comes back unchanged
  GddBaseBlocks trivial;
  trivial.m = 8;
  trivial.group_type = {{3, 1}};
  trivial.groups = GddBaseBlocks::consecutive_groups(trivial.group_type);
  const ConstructionResult input = explicit_code("3x8");
  const std::vector<ConstructionResult> inputs{input};
  const ConstructionResult same = expand_gdd(trivial, inputs);
  CHECK(same.code.size() == input.code.size());
  CHECK(same.code.codewords == input.code.codewords);
}

TEST_CASE("compose_0mod3") {
  CHECK(compose_0mod3(3, 8).code.size() == 13);
  SearchConfig cfg;
  cfg.time_budget_seconds = 60;
  const ConstructionResult r = compose_0mod3(12, 8, cfg);
  CHECK(r.code.size() == 196);
  CHECK(r.code.params.n == 12);
  CHECK(r.verified);
  // every group holds a relabeled copy of the 3 x 8 code
  for (int t = 0; t < 4; ++t) {
    std::size_t inside = 0;
    for (const Codeword& w : r.code.codewords) {
      bool all = true;
      for (const Cell& c : w.cells()) all = all && c.row / 3 == t;
      inside += all;
    }
    CHECK(inside == 13);
  }
  CHECK_THROWS_AS(compose_0mod3(12, 4), DomainError);
  CHECK_THROWS_AS(compose_0mod3(6, 8), DomainError);
  CHECK_THROWS_AS(compose_0mod3(10, 8), ParameterError);
}
