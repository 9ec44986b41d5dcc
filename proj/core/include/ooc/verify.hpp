#pragma once

// Correlation checks by the pure/mixed difference method, a dense-matrix
// correlation oracle, and the census and structural predicates used by the
// upper-bound arguments.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ooc/core.hpp"

namespace ooc {

inline constexpr std::size_t kMaxWitnesses = 100;

/// One violation. Auto violations have first == second and rows == -1 (the
/// multiplicity is taken over the union of all pure differences).
struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
  int row_i = -1;
  int row_j = -1;
  int difference = 0;
  int multiplicity = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  bool auto_ok = true;
  bool cross_ok = true;
  int max_auto_multiplicity = 0;
  std::vector<Witness> witnesses;  // sorted, at most kMaxWitnesses
  std::size_t dropped_witnesses = 0;

  bool ok() const { return auto_ok && cross_ok; }
};

VerificationReport verify_code(const Code& code);

/// Sum over cells of a[i][j] * b[i][j + shift], both given as dense n x m
/// (0,1)-matrices built from the codewords.
int matrix_correlation(const Codeword& a, const Codeword& b, int shift, int n, int m);

struct MatrixVerdict {
  bool auto_ok = true;
  bool cross_ok = true;
};

/// Correlation verdicts straight from the matrix definition, over every shift.
MatrixVerdict verify_by_matrix(const Code& code);

struct CompositionCensus {
  std::size_t alpha = 0, alpha3 = 0, alpha4 = 0, alpha5 = 0, alpha6 = 0;
  std::size_t beta = 0, beta1 = 0, beta2 = 0;
  std::size_t gamma = 0;
  /// Type-1 codewords with |supp| = 2; impossible once lambda_a = 2 holds.
  std::size_t alpha2 = 0;

  friend bool operator==(const CompositionCensus&, const CompositionCensus&) = default;
};

CompositionCensus composition_census(const Code& code);

struct ParityCensus {
  std::size_t c_o = 0, c_e = 0, c_d = 0;
  std::size_t n_oe = 0, n_od = 0, n_e = 0, n_d = 0;

  std::size_t total() const { return c_o + c_e + c_d + n_oe + n_od + n_e + n_d; }
  friend bool operator==(const ParityCensus&, const ParityCensus&) = default;
};

/// Requires m = 0 mod 4 and single-row codewords.
ParityCensus parity_census(const Code& code);

struct StructuralFacts {
  bool is_equi_difference = false;
  std::set<int> difference_leave;
  std::set<int> support;
  std::vector<int> regular_subgroups;  // g | m, g < m, supp avoids the order-g subgroup
  bool is_tight_cac = false;
};

/// For 1-D codes (n = 1).
StructuralFacts structural_facts(const Code& code);

/// Single-row codewords lying in `row`, as a 1-D code on Z_m.
Code restrict_to_row(const Code& code, int row);

/// Census inequalities (1)-(3) for weight-3 codes with lambda_a = 2.
bool composition_inequalities_hold(const CompositionCensus& census, int n, int m);
/// Parity inequalities (10)-(12) for 1-D codes with m = 0 mod 4.
bool parity_inequalities_hold(const ParityCensus& census, int m);

/// Raised by constructors when a built code fails verification or its
/// claimed size or leave.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, VerificationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace ooc
