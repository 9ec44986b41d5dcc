#pragma once

// Cells, codewords and codes over I_n x Z_m, together with the difference
// calculus every check in this library is phrased in.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ooc {

/// Reduces `x` into [0, m).
constexpr int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

struct CodeParams {
  int n = 1;         // rows (wavelengths)
  int m = 1;         // columns (time slots)
  int k = 3;         // weight
  int lambda_a = 2;  // autocorrelation cap
  int lambda_c = 1;  // cross-correlation cap

  /// Throws ParameterError unless n,m >= 1, 1 <= k <= n*m, lambda_a >= 1, lambda_c == 1.
  void validate() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct Cell {
  int row = 0;
  int slot = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A set of distinct cells, kept sorted by (row, slot).
class Codeword {
 public:
  Codeword() = default;
  Codeword(std::initializer_list<Cell> cells);
  explicit Codeword(std::vector<Cell> cells);

  /// Cells given with unreduced slots; each slot is reduced mod m first.
  static Codeword reduced(std::initializer_list<Cell> cells, int m);
  /// The single-row codeword {(row, s) : s in slots}, slots reduced mod m.
  static Codeword on_row(int row, std::initializer_list<long long> slots, int m);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t weight() const { return cells_.size(); }
  bool fits(const CodeParams& p) const;
  bool single_row() const;

  /// Every slot shifted by `shift` mod m.
  Codeword translated(long long shift, int m) const;
  /// Rows renamed through `row_map[old_row]`.
  Codeword relabeled(std::span<const int> row_map) const;

  friend auto operator<=>(const Codeword&, const Codeword&) = default;
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  std::vector<Cell> cells_;
};

struct Code {
  CodeParams params;
  std::vector<Codeword> codewords;

  /// Throws ParameterError if params are invalid or a codeword has the wrong
  /// weight or leaves I_n x Z_m.
  void validate() const;
  std::size_t size() const { return codewords.size(); }
};

/// Multiset of residues as residue -> multiplicity.
using ResidueCounts = std::map<int, int>;

/// Delta_ij(B) for every ordered row pair that occurs in a codeword.
struct DifferenceProfile {
  std::map<std::pair<int, int>, ResidueCounts> by_rows;

  const ResidueCounts* find(int i, int j) const;
  std::set<int> support(int i, int j) const;
  /// Sum of all multiset sizes; k(k-1) for a weight-k codeword.
  std::size_t total() const;
  friend bool operator==(const DifferenceProfile&, const DifferenceProfile&) = default;
};

DifferenceProfile difference_profile(const Codeword& codeword, const CodeParams& params);

/// Multiset of differences x - y (mod m) over ordered pairs of distinct
/// elements of a 1-D slot set.
ResidueCounts slot_differences(std::span<const int> slots, int m);
std::set<int> slot_difference_support(std::span<const int> slots, int m);

/// Slots of a codeword, in cell order.
std::vector<int> slots_of(const Codeword& codeword);

/// Halved difference set {d in Delta(X) : 1 <= d <= m/2} of a single-row codeword.
/// Requires m = 0 mod 4.
std::set<int> halved_difference_set(const Codeword& codeword, int m);

enum class CodewordType { type1, type2, type3 };

/// Type census label of a weight-3 codeword.
/// type1: sub = |supp(Delta X)| (2..6); type2: sub = 1 (pair differs by m/2) or 2;
/// type3: sub = 0.
struct TypeLabel {
  CodewordType type = CodewordType::type3;
  int sub = 0;

  std::string name() const;
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

TypeLabel classify_codeword(const Codeword& codeword, const CodeParams& params);

/// O/E/D classes of halved differences: i-iii for |Delta_2| = 2, iv-vii for |Delta_2| = 3.
enum class ParityClass { i, ii, iii, iv, v, vi, vii };

std::string to_string(ParityClass c);

/// Requires a single-row codeword and m = 0 mod 4.
ParityClass parity_class(const Codeword& codeword, int m);

/// Lexicographically least codeword among all m slot translations.
Codeword normalize(const Codeword& codeword, int m);

/// True iff the 1-D slot set is a translate of {0, a, 2a} for some a.
bool is_equi_difference(std::span<const int> slots, int m);

}  // namespace ooc
