#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ooc/construct.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

TEST_CASE("difference and matrix verdicts agree on random codes") {
  std::mt19937_64 rng(20240601);
  int passing = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Code code = oracle::random_code(rng, 3, 12, 5);
    const VerificationReport diff = verify_code(code);
    const MatrixVerdict matrix = verify_by_matrix(code);
    const oracle::Verdict brute = oracle::correlation_verdict(code);
    CHECK(diff.auto_ok == matrix.auto_ok);
    CHECK(diff.cross_ok == matrix.cross_ok);
    CHECK(diff.auto_ok == brute.auto_ok);
    CHECK(diff.cross_ok == brute.cross_ok);
    passing += diff.ok();
  }
  // both outcomes must actually occur
  CHECK(passing > 100);
  CHECK(passing < 1900);
}

TEST_CASE("census of random verified codes") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Code code = oracle::random_code(rng, 4, 16, 6);
    if (!verify_code(code).ok()) continue;
    ++checked;
    const CompositionCensus c = composition_census(code);
    const oracle::Census o = oracle::census(code);
    CHECK(c.alpha3 == o.alpha[3]);
    CHECK(c.alpha4 == o.alpha[4]);
    CHECK(c.alpha5 == o.alpha[5]);
    CHECK(c.alpha6 == o.alpha[6]);
    CHECK(c.alpha2 == 0);
    CHECK(c.beta1 == o.beta1);
    CHECK(c.beta2 == o.beta2);
    CHECK(c.gamma == o.gamma);
    CHECK(c.alpha + c.beta + c.gamma == code.size());
    CHECK(composition_inequalities_hold(c, code.params.n, code.params.m));
    CHECK(oracle::census_inequalities(o, code.params.n, code.params.m));
    if (code.params.n == 1 && code.params.m % 4 == 0) {
      const ParityCensus p = parity_census(code);
      const std::vector<std::size_t> t = oracle::parity(code);
      CHECK(std::vector<std::size_t>{p.c_o, p.c_e, p.c_d, p.n_oe, p.n_od, p.n_e, p.n_d} == t);
      CHECK(parity_inequalities_hold(p, code.params.m));
      CHECK(oracle::parity_inequalities(t, code.params.m));
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("relabeling rows leaves verdicts unchanged") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Code code = oracle::random_code(rng, 3, 10, 4);
    std::vector<int> perm(static_cast<std::size_t>(code.params.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Code moved = code;
    for (Codeword& w : moved.codewords) w = w.relabeled(perm);
    CHECK(verify_code(moved).auto_ok == verify_code(code).auto_ok);
    CHECK(verify_code(moved).cross_ok == verify_code(code).cross_ok);
    for (std::size_t i = 0; i < code.size(); ++i) {
      CHECK(classify_codeword(moved.codewords[i], code.params).type ==
            classify_codeword(code.codewords[i], code.params).type);
    }
  }
}

TEST_CASE("translating codewords leaves verdicts unchanged") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const Code code = oracle::random_code(rng, 3, 12, 5);
    Code moved = code;
    std::uniform_int_distribution<int> shift(0, code.params.m - 1);
    for (Codeword& w : moved.codewords) w = w.translated(shift(rng), code.params.m);
    CHECK(verify_code(moved).ok() == verify_code(code).ok());
  }
}
