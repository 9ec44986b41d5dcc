#include "ooc/construct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "ooc/bounds.hpp"
#include "ooc/errors.hpp"
#include "ooc/verify.hpp"

namespace ooc {
namespace {

constexpr long long kMaxM = 1 << 20;

// [a, b]; empty when b < a.
std::vector<int> closed(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

// [a, b]_o
std::vector<int> odd(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) {
    if (i % 2 != 0) out.push_back(i);
  }
  return out;
}

std::vector<int> without(std::vector<int> v, std::initializer_list<int> drop) {
  std::erase_if(v, [&](int x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); });
  return v;
}

std::set<int> odd_set(int a, int b) {
  const std::vector<int> v = odd(a, b);
  return {v.begin(), v.end()};
}

std::set<int> scaled(const std::set<int>& s, long long w) {
  std::set<int> out;
  for (int x : s) out.insert(static_cast<int>(x * w));
  return out;
}

void merge(std::set<int>& into, const std::set<int>& more) { into.insert(more.begin(), more.end()); }

// Exact quotient; the families only ever divide where the residue class
// guarantees it, so a remainder is a programming error.
int ex(long long num, long long den) {
  if (num % den != 0) throw std::logic_error("inexact division in construction index");
  return static_cast<int>(num / den);
}

long long pow4(int s) { return 1LL << (2 * s); }

// Union over i = 1..s of 4^{s-i}([1, 4^{i-1}r - 1]_o u [3 * 4^{i-1}r + 1, 4^i r - 1]_o).
std::set<int> tower_tail(int s, long long r) {
  std::set<int> out;
  for (int i = 1; i <= s; ++i) {
    const long long base = pow4(i - 1) * r;
    std::set<int> part = odd_set(1, static_cast<int>(base - 1));
    merge(part, odd_set(static_cast<int>(3 * base + 1), static_cast<int>(4 * base - 1)));
    merge(out, scaled(part, pow4(s - i)));
  }
  return out;
}

int checked_m(long long m) {
  if (m < 1 || m > kMaxM) throw ParameterError("modulus out of supported range");
  return static_cast<int>(m);
}

class Builder {
 public:
  Builder(int n, int m) : code_{{n, m, 3, 2, 1}, {}} {}

  void add(std::initializer_list<Cell> cells) {
    try {
      code_.codewords.push_back(Codeword::reduced(cells, code_.params.m));
    } catch (const ParameterError& e) {
      throw VerificationFailure(std::string("transcribed codeword is degenerate: ") + e.what(), {});
    }
  }
  // {(row, 0), (row, a), (row, 2a)}
  void equi(int row, long long a) { add({{row, 0}, {row, mod(a, code_.params.m)}, {row, mod(2 * a, code_.params.m)}}); }
  void append(const Code& other, int row) {
    const std::vector<int> to_row(static_cast<std::size_t>(other.params.n), row);
    for (const Codeword& cw : other.codewords) code_.codewords.push_back(cw.relabeled(to_row));
  }

  Code take() { return std::move(code_); }

 private:
  Code code_;
};

ConstructionResult finalize(Code code, std::int64_t claimed_size, std::optional<std::set<int>> claimed_leave,
                            std::string branch) {
  std::sort(code.codewords.begin(), code.codewords.end());
  VerificationReport report = verify_code(code);
  if (!report.ok()) throw VerificationFailure(branch + ": correlation check failed", std::move(report));
  if (static_cast<std::int64_t>(code.size()) != claimed_size) {
    throw VerificationFailure(branch + ": built " + std::to_string(code.size()) + " codewords, claimed " +
                                  std::to_string(claimed_size),
                              std::move(report));
  }
  if (claimed_leave) {
    if (code.params.n != 1) throw std::logic_error("difference leave claimed for a 2-D code");
    if (structural_facts(code).difference_leave != *claimed_leave) {
      throw VerificationFailure(branch + ": difference leave differs from the claimed leave", std::move(report));
    }
  }
  return {std::move(code), claimed_size, std::move(claimed_leave), std::move(branch), true};
}

std::set<int> leave_of(const ConstructionResult& r) {
  return r.claimed_leave ? *r.claimed_leave : structural_facts(r.code).difference_leave;
}

// First part of every 3 x m family: B copied onto each row.
void add_equi_rows(Builder& b, const Code& equi) {
  for (int x = 0; x < 3; ++x) b.append(equi, x);
}

ConstructionResult family_8mod16(int m) {
  Builder b(3, m);
  add_equi_rows(b, equi_power4(1, m / 4, EquiVariant::half_free).code);
  for (int i : closed(0, m / 8 - 1)) b.add({{0, 0}, {0, 1 + 2 * i}, {1, 7 * m / 8 + i}});
  for (int i : closed(0, m / 8 - 1)) b.add({{1, 0}, {1, 1 + 2 * i}, {2, m / 2 + 2 + i}});
  for (int i : closed(0, m / 8 - 2)) b.add({{0, 0}, {2, 7 * m / 8 - 3 - i}, {2, 7 * m / 8 + i}});
  b.add({{0, 0}, {0, 3 * m / 8}, {1, 3 * m / 4 - 1}});
  b.add({{1, 0}, {1, 3 * m / 8}, {2, 3 * m / 4}});
  b.add({{0, 0}, {2, m - 1}, {2, 0}});
  b.add({{0, 0}, {2, 7 * m / 8 - 2}, {2, m / 4 - 2}});
  for (int i : closed(0, 3 * m / 8 - 2)) b.add({{0, 0}, {1, i}, {2, 1 + 2 * i}});
  for (int i : without(closed(0, 3 * m / 8 - 2), {m / 8 - 2})) b.add({{0, 0}, {1, 3 * m / 8 + i}, {2, 2 + 2 * i}});
  b.add({{0, 0}, {1, m / 2 - 2}, {2, 7 * m / 8 - 1}});
  return finalize(b.take(), ex(27LL * m - 8, 16), std::nullopt, "3xm/8mod16");
}

ConstructionResult family_32mod64(int m) {
  Builder b(3, m);
  add_equi_rows(b, equi_power4(2, m / 16, EquiVariant::half_free).code);
  for (int i : closed(0, m / 8 - 1)) b.add({{0, 0}, {0, 1 + 2 * i}, {1, m / 8 + 2 + i}});
  for (int i : closed(0, m / 32 - 1)) b.add({{0, 0}, {0, 4 + 8 * i}, {1, 7 * m / 8 + 3 + 4 * i}});
  for (int i : closed(0, m / 8 - 2)) b.add({{1, 0}, {1, 3 + 2 * i}, {2, 5 * m / 8 + i}});
  for (int i : closed(0, m / 32 - 1)) b.add({{1, 0}, {1, 4 + 8 * i}, {2, 7 * m / 8 + 3 + 4 * i}});
  for (int i : closed(0, m / 8 - 2)) b.add({{0, 0}, {2, m / 4 - 1 - i}, {2, m / 4 + 2 + i}});
  for (int i : closed(0, m / 32 - 1)) b.add({{0, 0}, {2, 3 * m / 4 - 2 - 4 * i}, {2, 3 * m / 4 + 2 + 4 * i}});
  b.add({{0, 0}, {0, 3 * m / 8}, {1, 13 * m / 16 - 1}});
  b.add({{1, 0}, {1, 1}, {2, 7 * m / 16}});
  b.add({{1, 0}, {1, 3 * m / 8}, {2, 3 * m / 4 - 1}});
  b.add({{0, 0}, {2, m / 4 + 1}, {2, 5 * m / 8 + 1}});
  b.add({{0, 0}, {2, m / 16 - 2}, {2, m / 16 - 1}});
  for (int i : without(closed(0, m / 16 - 1), {m / 16 - 2})) {
    b.add({{0, 0}, {1, 3 * m / 4 + 2 * i}, {2, 3 * m / 4 - 3 - 2 * i}});
  }
  for (int i : closed(0, m / 16 - 1)) b.add({{0, 0}, {1, 7 * m / 8 + 2 * i}, {2, 5 * m / 8 + 4 * i}});
  for (int i : without(closed(0, m / 16 - 1), {ex(m - 32, 64)})) {
    b.add({{0, 0}, {1, 3 * m / 4 + 1 + 4 * i}, {2, 3 * m / 4 - 1 + 2 * i}});
  }
  for (int i : closed(0, m / 8 - 2)) b.add({{0, 0}, {1, m / 4 + 2 + 2 * i}, {2, 3 * m / 8 + 1 + i}});
  for (int i : without(closed(0, m / 8 - 3), {3 * m / 32 - 2})) {
    b.add({{0, 0}, {1, m / 4 + 3 + 2 * i}, {2, m / 2 + 1 + i}});
  }
  for (int i : without(closed(0, m / 8 - 3), {m / 16 - 3, m / 16 - 2})) {
    b.add({{0, 0}, {1, m / 2 + 4 + 2 * i}, {2, 1 + i}});
  }
  for (int i : closed(0, m / 8 - 4)) b.add({{0, 0}, {1, m / 2 + 1 + 2 * i}, {2, 7 * m / 8 - 1 + i}});
  const std::array<std::pair<int, int>, 11> mixed{{{0, 0},
                                                  {1, m / 4},
                                                  {m / 2 - 1, m - 3},
                                                  {m / 2, m / 8 - 1},
                                                  {m / 2 + 2, m / 8},
                                                  {3 * m / 4 - 5, m / 2},
                                                  {3 * m / 4 - 3, m - 2},
                                                  {3 * m / 4 - 1, m - 1},
                                                  {7 * m / 8 - 4, m - 4},
                                                  {5 * m / 8 - 2, 25 * m / 32 - 2},
                                                  {5 * m / 8, 19 * m / 32 - 1}}};
  for (const auto& [a, c] : mixed) b.add({{0, 0}, {1, a}, {2, c}});
  return finalize(b.take(), ex(107LL * m - 32, 64), std::nullopt, "3xm/32mod64");
}

ConstructionResult family_4mod48(int m) {
  Builder b(3, m);
  add_equi_rows(b, tight_derived(m / 4, 1).code);
  for (int i : closed(0, ex(m - 20, 8))) b.add({{0, 0}, {0, 1 + 2 * i}, {1, ex(7LL * m + 4, 8) + i}});
  for (int i : closed(0, ex(m - 12, 8))) b.add({{1, 0}, {1, 1 + 2 * i}, {2, m / 2 + i}});
  for (int i : closed(0, ex(m - 12, 8))) b.add({{0, 0}, {2, ex(7LL * m - 12, 8) - i}, {2, ex(7LL * m - 4, 8) + i}});
  b.add({{0, 0}, {0, m / 4 - 2}, {1, ex(11LL * m - 12, 16)}});
  const std::array<std::pair<int, int>, 15> second{{{ex(3LL * m - 4, 8), ex(m - 4, 16)},
                                                   {ex(9LL * m + 12, 16), m / 2 - 1},
                                                   {ex(3LL * m + 4, 8), ex(3LL * m + 4, 16)},
                                                   {3 * m / 4 + 1, 2},
                                                   {m - 1, 3 * m / 4 - 3},
                                                   {m / 4, m - 1},
                                                   {m / 4 - 1, m / 4 - 3},
                                                   {3 * m / 4, 0},
                                                   {ex(3LL * m + 12, 8), ex(m + 12, 8)},
                                                   {ex(5LL * m - 4, 8), m / 4 - 1},
                                                   {ex(5LL * m + 4, 8), m / 4 + 1},
                                                   {3 * m / 4 - 1, ex(5LL * m - 20, 8)},
                                                   {m / 2 + 1, ex(3LL * m + 4, 8)},
                                                   {m / 2, m / 2},
                                                   {m / 2 - 1, m / 2 - 2}}};
  for (const auto& [a, c] : second) b.add({{0, 0}, {1, a}, {2, c}});

  const std::vector<int> t = without(closed(0, ex(3LL * m - 36, 8)),
                                     {ex(m - 20, 16), ex(m - 28, 8), ex(m - 20, 8), ex(m - 12, 8),
                                      ex(3LL * m - 28, 16), m / 4 - 3, m / 4 - 2, ex(5LL * m - 52, 16)});
  const int top = ex(3LL * m - 12, 8);
  std::string branch;
  std::vector<int> t_used;
  if (m % 96 == 4 || m % 96 == 68) {
    branch = "3xm/4,20mod48-a";
    for (int i : without(closed(0, top), {ex(3LL * m - 12, 32), m / 4 - 1, m / 4})) b.add({{0, 0}, {1, i}, {2, 1 + 2 * i}});
    b.add({{0, 0}, {1, ex(3LL * m - 12, 32)}, {2, 3 * m / 4 - 1}});
    b.add({{0, 0}, {1, ex(13LL * m + 12, 32)}, {2, m / 2 + 1}});
    t_used = t;
    std::erase(t_used, ex(m - 68, 32));
  } else {
    branch = "3xm/4,20mod48-b";
    for (int i : without(closed(0, top), {ex(m - 20, 32), m / 4 - 1, m / 4})) b.add({{0, 0}, {1, i}, {2, 1 + 2 * i}});
    b.add({{0, 0}, {1, ex(15LL * m + 20, 32)}, {2, m / 2 + 1}});
    b.add({{0, 0}, {1, ex(m - 20, 32)}, {2, 3 * m / 4 - 1}});
    t_used = t;
    std::erase(t_used, ex(3LL * m - 60, 32));
  }
  for (int i : t_used) b.add({{0, 0}, {1, ex(3LL * m + 20, 8) + i}, {2, 4 + 2 * i}});
  return finalize(b.take(), ex(27LL * m + 4, 16), std::nullopt, branch);
}

bool family_4mod48_applies(int m) {
  return m >= 68 && (m % 48 == 4 || m % 48 == 20) && prime_clause_holds(m / 4) &&
         (m % 96 == 4 || m % 96 == 68 || m >= 116);
}

Code explicit_list(const std::string& id) {
  if (id == "1d48") {
    Builder b(1, 48);
    for (int a : {3, 7, 11, 15, 19, 23}) b.equi(0, a);
    b.add({{0, 0}, {0, 1}, {0, 17}});
    b.add({{0, 0}, {0, 5}, {0, 9}});
    b.add({{0, 0}, {0, 13}, {0, 21}});
    b.add({{0, 0}, {0, 12}, {0, 24}});
    return b.take();
  }
  if (id == "3x4") {
    Builder b(3, 4);
    for (int x = 0; x < 3; ++x) b.add({{x, 0}, {x, 1}, {x, 2}});
    for (const auto& [a, c] : std::array<std::pair<int, int>, 3>{{{0, 0}, {1, 3}, {3, 2}}}) b.add({{0, 0}, {1, a}, {2, c}});
    return b.take();
  }
  if (id == "3x8") {
    Builder b(3, 8);
    for (int x = 0; x < 3; ++x) b.add({{x, 0}, {x, 2}, {x, 4}});
    b.add({{0, 0}, {0, 1}, {1, 6}});
    b.add({{0, 0}, {0, 3}, {1, 7}});
    b.add({{1, 0}, {1, 1}, {2, 5}});
    b.add({{1, 0}, {1, 3}, {2, 3}});
    b.add({{0, 0}, {2, 5}, {2, 6}});
    b.add({{0, 0}, {2, 4}, {2, 7}});
    b.add({{0, 0}, {1, 2}, {2, 0}});
    b.add({{0, 0}, {1, 3}, {2, 2}});
    b.add({{0, 0}, {1, 0}, {2, 1}});
    b.add({{0, 0}, {1, 1}, {2, 3}});
    return b.take();
  }
  if (id == "3x20") {
    Builder b(3, 20);
    for (int x = 0; x < 3; ++x) {
      for (int i : {4, 5, 7, 9}) b.equi(x, i);
    }
    b.add({{0, 0}, {0, 1}, {1, 18}});
    b.add({{0, 0}, {0, 3}, {1, 19}});
    b.add({{1, 0}, {1, 1}, {2, 18}});
    b.add({{1, 0}, {1, 3}, {2, 19}});
    b.add({{0, 0}, {2, 17}, {2, 18}});
    b.add({{0, 0}, {2, 16}, {2, 19}});
    const std::vector<std::pair<int, int>> mixed{{0, 1},  {1, 3},  {2, 2},  {3, 11}, {4, 13}, {5, 10},
                                                 {6, 9},  {7, 14}, {8, 12}, {9, 15}, {10, 0}, {11, 4},
                                                 {12, 7}, {13, 5}, {14, 8}, {15, 6}};
    for (const auto& [a, c] : mixed) b.add({{0, 0}, {1, a}, {2, c}});
    return b.take();
  }
  if (id == "3x32") {
    Builder b(3, 32);
    for (int x = 0; x < 3; ++x) {
      for (int a : {8, 9, 11, 13, 15}) b.equi(x, a);
    }
    const std::vector<std::array<Cell, 3>> listed{
        {{{0, 0}, {0, 12}, {1, 25}}}, {{{0, 0}, {0, 1}, {1, 6}}},   {{{0, 0}, {0, 3}, {1, 7}}},
        {{{0, 0}, {0, 5}, {1, 8}}},   {{{0, 0}, {0, 7}, {1, 9}}},   {{{0, 0}, {0, 4}, {1, 31}}},
        {{{1, 0}, {1, 1}, {2, 14}}},  {{{1, 0}, {1, 12}, {2, 23}}}, {{{1, 0}, {1, 3}, {2, 20}}},
        {{{1, 0}, {1, 5}, {2, 21}}},  {{{1, 0}, {1, 7}, {2, 22}}},  {{{1, 0}, {1, 4}, {2, 31}}},
        {{{0, 0}, {2, 9}, {2, 21}}},  {{{0, 0}, {2, 0}, {2, 1}}},   {{{0, 0}, {2, 7}, {2, 10}}},
        {{{0, 0}, {2, 6}, {2, 11}}},  {{{0, 0}, {2, 5}, {2, 12}}},  {{{0, 0}, {2, 22}, {2, 26}}},
    };
    for (const auto& c : listed) b.add({c[0], c[1], c[2]});
    const std::vector<std::pair<int, int>> mixed{{0, 8},   {1, 4},   {10, 28}, {19, 31}, {21, 30}, {22, 29},
                                                 {12, 14}, {14, 20}, {15, 19}, {16, 16}, {17, 18}, {18, 23},
                                                 {11, 3},  {20, 13}, {23, 17}, {24, 2},  {26, 24}, {28, 15},
                                                 {29, 25}, {30, 27}};
    for (const auto& [a, c] : mixed) b.add({{0, 0}, {1, a}, {2, c}});
    return b.take();
  }
  if (id == "3x52") {
    Builder b(3, 52);
    for (int x = 0; x < 3; ++x) {
      for (int i : {4, 12, 16, 13, 15, 17, 19, 21, 23, 25}) b.equi(x, i);
    }
    for (int i : closed(0, 5)) b.add({{0, 0}, {0, 1 + 2 * i}, {1, 46 + i}});
    for (int i : closed(0, 5)) b.add({{1, 0}, {1, 1 + 2 * i}, {2, 46 + i}});
    for (int i : closed(0, 5)) b.add({{0, 0}, {2, 45 - i}, {2, 46 + i}});
    const std::vector<std::pair<int, int>> mixed{
        {0, 12},  {2, 6},   {3, 8},   {4, 14},  {5, 5},   {6, 7},   {11, 13}, {1, 16},  {14, 22}, {16, 19},
        {18, 24}, {7, 28},  {12, 25}, {13, 27}, {22, 29}, {8, 30},  {9, 32},  {10, 34}, {20, 31}, {24, 33},
        {15, 35}, {17, 36}, {19, 37}, {21, 38}, {23, 39}, {33, 15}, {34, 18}, {27, 0},  {28, 2},  {29, 4},
        {30, 10}, {32, 11}, {25, 1},  {31, 9},  {26, 3},  {35, 21}, {36, 17}, {37, 20}, {38, 23}, {39, 26}};
    for (const auto& [a, c] : mixed) b.add({{0, 0}, {1, a}, {2, c}});
    return b.take();
  }
  throw ParameterError("unknown explicit code id: " + id);
}

const std::map<std::string, std::int64_t>& explicit_sizes() {
  static const std::map<std::string, std::int64_t> sizes{{"1d48", 10}, {"3x4", 6},   {"3x8", 13},
                                                         {"3x20", 34}, {"3x32", 53}, {"3x52", 88}};
  return sizes;
}

}  // namespace

ConstructionResult equi_2mod4(int m) {
  if (m < 2 || m % 4 != 2) throw ParameterError("equi_2mod4 needs m = 2 mod 4");
  Builder b(1, m);
  for (int i : odd(1, m / 2 - 2)) b.equi(0, i);
  return finalize(b.take(), (m - 2) / 4, std::set<int>{m / 2}, "equi/2mod4");
}

ConstructionResult g_regular_4g(int g) {
  if (g < 1 || g > kMaxM / 4) throw ParameterError("g_regular_4g needs g >= 1");
  Builder b(1, 4 * g);
  for (int i : g % 2 == 0 ? odd(g + 1, 2 * g - 1) : odd(g, 2 * g - 1)) b.equi(0, i);
  std::set<int> leave = odd_set(1, g - 1);
  merge(leave, odd_set(3 * g + 1, 4 * g - 1));
  for (int i : closed(1, g - 1)) leave.insert(4 * i);
  return finalize(b.take(), (g + 1) / 2, std::move(leave), "equi/g-regular-4g");
}

ConstructionResult fill_regular(const ConstructionResult& outer, const ConstructionResult& inner) {
  const int m = outer.code.params.m;
  const int g = inner.code.params.m;
  if (outer.code.params.n != 1 || inner.code.params.n != 1) throw ParameterError("fill_regular takes 1-D codes");
  if (!outer.verified || !inner.verified) throw ParameterError("fill_regular inputs must be verified");
  if (m % g != 0) throw ParameterError("inner modulus must divide outer modulus");
  const int step = m / g;
  const StructuralFacts outer_facts = structural_facts(outer.code);
  if (!outer_facts.is_equi_difference || !structural_facts(inner.code).is_equi_difference) {
    throw ParameterError("fill_regular inputs must be equi-difference");
  }
  if (std::any_of(outer_facts.support.begin(), outer_facts.support.end(), [&](int d) { return d % step == 0; })) {
    throw ParameterError("outer code is not g-regular");
  }

  Code code{{1, m, 3, 2, 1}, outer.code.codewords};
  for (const Codeword& cw : inner.code.codewords) {
    std::vector<Cell> cells(cw.cells().begin(), cw.cells().end());
    for (Cell& c : cells) c.slot *= step;
    code.codewords.emplace_back(std::move(cells));
  }
  // The subgroup of order g is not in the outer leave once filled.
  std::set<int> leave;
  for (int d : leave_of(outer)) {
    if (d % step != 0) leave.insert(d);
  }
  merge(leave, scaled(leave_of(inner), step));
  return finalize(std::move(code), outer.claimed_size + inner.claimed_size, std::move(leave), "equi/fill");
}

ConstructionResult quadruple(const ConstructionResult& inner) {
  const int g = inner.code.params.m;
  ConstructionResult filled = fill_regular(g_regular_4g(g), inner);
  std::set<int> leave = scaled(leave_of(inner), 4);
  merge(leave, odd_set(1, g - 1));
  merge(leave, odd_set(3 * g + 1, 4 * g - 1));
  return finalize(std::move(filled.code), (g + 1) / 2 + inner.claimed_size, std::move(leave), "equi/quadruple");
}

ConstructionResult equi_power4(int s, int r, EquiVariant variant) {
  if (r < 2 || r % 4 != 2) throw ParameterError("equi_power4 needs r = 2 mod 4");
  const bool half_free = variant == EquiVariant::half_free;
  if (s < 0 || (half_free && s < 1)) throw ParameterError("equi_power4 needs s >= 0 (s >= 1 for the half-free variant)");
  if (s > 10) throw ParameterError("modulus out of supported range");
  const long long m = checked_m(pow4(s) * r);

  ConstructionResult cur = equi_2mod4(r);
  for (int stage = 1; stage <= s; ++stage) {
    cur = quadruple(cur);
    if (stage == 1 && half_free) {
      const int q = 4 * r;
      auto& words = cur.code.codewords;
      const Codeword old = Codeword::on_row(0, {0, 3LL * r / 2, 3LL * r}, q);
      const auto it = std::find(words.begin(), words.end(), old);
      if (it == words.end()) throw std::logic_error("half-period codeword missing");
      *it = Codeword::on_row(0, {0, r, 2LL * r}, q);
      std::set<int> leave = tower_tail(1, r);
      leave.insert(3 * r / 2);
      leave.insert(5 * r / 2);
      cur = finalize(std::move(cur.code), cur.claimed_size, std::move(leave), "equi/half-free-swap");
    }
  }
  std::set<int> leave = tower_tail(s, r);
  if (half_free) {
    leave.insert(static_cast<int>(3 * m / 8));
    leave.insert(static_cast<int>(5 * m / 8));
  } else {
    leave.insert(static_cast<int>(m / 2));
  }
  const std::int64_t size = (2 * pow4(s) * r + r - 6) / 12;
  return finalize(std::move(cur.code), size, std::move(leave),
                  half_free ? "equi/power4-half-free" : "equi/power4-standard");
}

ConstructionResult tight_derived(int r, int s, const SearchConfig& search) {
  if (r < 1 || r % 2 == 0) throw ParameterError("tight_derived needs odd r");
  if (s < 0 || s > 10) throw ParameterError("tight_derived needs 0 <= s <= 10");
  const bool r15 = (r % 12 == 1 || r % 12 == 5) && prime_clause_holds(r);
  const bool r3 = r % 12 == 3 && prime_clause_holds(r / 3);
  if (!r15 && !r3) throw DomainError("r admits no tight equi-difference CAC");
  const long long m = checked_m(pow4(s) * r);

  ConstructionResult cur;
  if (r == 1) {
    cur = finalize(Code{{1, 1, 3, 2, 1}, {}}, 0, std::set<int>{}, "equi/tight-seed");
  } else {
    SearchConfig config = search;
    config.strategy = Strategy::exact_cover;
    const SearchOutcome found = tight_search(r, config);
    if (!found.success) {
      if (!found.proven_optimal) throw BudgetExhausted("tight CAC search ran out of budget");
      throw VerificationFailure("no tight CAC found for an admissible modulus", {});
    }
    Code code = found.code();
    code.params.lambda_a = 2;
    std::set<int> leave;
    if (r3) {
      std::erase(code.codewords, Codeword::on_row(0, {0, r / 3, 2LL * r / 3}, r));
      leave = {r / 3, 2 * r / 3};
    }
    cur = finalize(std::move(code), r3 ? (r - 3) / 4 : (r - 1) / 4, std::move(leave), "equi/tight-seed");
  }
  for (int stage = 1; stage <= s; ++stage) cur = quadruple(cur);

  std::set<int> leave = tower_tail(s, r);
  if (r3) {
    leave.insert(static_cast<int>(m / 3));
    leave.insert(static_cast<int>(2 * m / 3));
  }
  std::int64_t size = 0;
  if (s == 0) {
    size = r3 ? (r - 3) / 4 : (r - 1) / 4;
  } else {
    size = (2 * pow4(s) / 4 - 2) * r / 3 + (r3 ? (3LL * r - 1) / 4 : (3LL * r + 1) / 4);
  }
  return finalize(std::move(cur.code), size, std::move(leave), r3 ? "equi/tight-r3mod12" : "equi/tight-r1,5mod12");
}

ConstructionResult prime_derived(int p, int s, const SearchConfig& search) {
  if (p < 5 || !is_prime(p)) throw ParameterError("prime_derived needs a prime p >= 5");
  if (s < 0 || s > 10) throw ParameterError("prime_derived needs 0 <= s <= 10");
  checked_m(pow4(s) * p);
  const std::int64_t me = me_prime(p).value;

  SearchConfig config = search;
  config.strategy = Strategy::exhaustive;
  const SearchOutcome found = equi_search(p, 3, config);
  if (!found.proven_optimal && found.best_size < me) throw BudgetExhausted("equi-difference CAC search ran out of budget");
  Code code = found.code();
  code.params.lambda_a = 2;
  ConstructionResult cur = finalize(std::move(code), me, std::nullopt, "equi/prime-seed");
  for (int stage = 1; stage <= s; ++stage) cur = quadruple(cur);
  const std::int64_t size = s == 0 ? me : (2 * pow4(s) / 4 - 2) * p / 3 + (p + 1) / 2 + me;
  return finalize(std::move(cur.code), size, std::nullopt, "equi/prime-derived");
}

const std::vector<std::string>& explicit_code_ids() {
  static const std::vector<std::string> ids{"1d48", "3x4", "3x8", "3x20", "3x32", "3x52"};
  return ids;
}

ConstructionResult explicit_code(const std::string& id) {
  const auto it = explicit_sizes().find(id);
  if (it == explicit_sizes().end()) throw ParameterError("unknown explicit code id: " + id);
  return finalize(explicit_list(id), it->second, std::nullopt, "explicit/" + id);
}

ConstructionResult ooc_2xm(int m) {
  if (m < 4 || m % 4 != 0) throw ParameterError("ooc_2xm needs m = 0 mod 4");
  checked_m(m);
  Builder b(2, m);
  if (m == 4) {
    b.add({{0, 0}, {0, 1}, {0, 2}});
    b.add({{1, 0}, {1, 1}, {1, 2}});
    return finalize(b.take(), 2, std::nullopt, "2xm/m4");
  }
  if (m % 8 == 0) {
    std::vector<int> first = odd(3, m / 4 - 1);
    first.push_back(m / 2 - 1);  // m = 8 leaves just i = 3
    for (int i : first) b.equi(0, i);
    for (int i : odd(m / 4 + 1, m / 2 - 1)) b.equi(1, i);
    for (int i : closed(m / 8, m / 4 - 2)) b.add({{0, 0}, {0, 1 + 2 * i}, {1, m / 4 - 1 + i}});
    for (int i : closed(0, m / 8 - 1)) b.add({{1, 0}, {1, 1 + 2 * i}, {0, 3 * m / 4 + 2 + i}});
    for (int i : closed(0, m / 8 - 1)) b.add({{0, 0}, {0, 4 + 4 * i}, {1, 3 * m / 4 + 1 + 2 * i}});
    for (int i : closed(0, m / 8 - 1)) b.add({{1, 0}, {1, 4 + 4 * i}, {0, m / 4 + 4 + 2 * i}});
    b.add({{0, 0}, {0, 1}, {1, 3 * m / 4 - 1}});
    return finalize(b.take(), 3 * m / 4, std::nullopt, "2xm/0mod8");
  }
  for (int i : odd(m / 4 + 2, m / 2 - 3)) b.equi(0, i);
  for (int i : odd(1, m / 4)) b.equi(1, i);
  for (int i : without(closed(0, (m - 4) / 8), {1})) b.add({{0, 0}, {0, 1 + 2 * i}, {1, m / 4 + i}});
  for (int i : closed((m + 4) / 8, m / 4 - 1)) b.add({{1, 0}, {1, 1 + 2 * i}, {0, 3 * m / 4 + 1 + i}});
  for (int i : closed(1, (m - 12) / 8)) b.add({{0, 0}, {0, 4 + 4 * i}, {1, 3 * m / 4 + 1 + 2 * i}});
  for (int i : closed(0, (m - 12) / 8)) b.add({{1, 0}, {1, 4 + 4 * i}, {0, m / 4 + 2 + 2 * i}});
  b.add({{0, 0}, {0, m / 2 - 1}, {1, m / 4 - 2}});
  b.add({{0, 0}, {0, 3}, {1, 3 * m / 4}});
  b.add({{0, 0}, {0, m / 2}, {1, 3 * m / 4 + 1}});
  b.add({{0, 0}, {0, 2}, {0, 4}});
  return finalize(b.take(), 3 * m / 4, std::nullopt, "2xm/4mod8");
}

bool ooc_3xm_supported(int m) {
  if (m == 4 || m == 8 || m == 20 || m == 32 || m == 52) return true;
  if (m < 1 || m > kMaxM) return false;
  return m % 16 == 8 || (m % 64 == 32 && m >= 96) || family_4mod48_applies(m);
}

ConstructionResult ooc_3xm(int m) {
  switch (m) {
    case 4: return explicit_code("3x4");
    case 8: return explicit_code("3x8");
    case 20: return explicit_code("3x20");
    case 32: return explicit_code("3x32");
    case 52: return explicit_code("3x52");
    default: break;
  }
  if (!ooc_3xm_supported(m)) throw ParameterError("no 3 x m construction for m = " + std::to_string(m));
  if (m % 16 == 8) return family_8mod16(m);
  if (m % 64 == 32) return family_32mod64(m);
  return family_4mod48(m);
}

ConstructionResult expand_gdd(const GddBaseBlocks& gdd, std::span<const ConstructionResult> inputs) {
  if (const std::string problem = check_gdd(gdd); !problem.empty()) throw ParameterError("invalid GDD: " + problem);
  std::map<int, const ConstructionResult*> by_size;
  for (const ConstructionResult& in : inputs) {
    if (!in.verified) throw ParameterError("expand_gdd inputs must be verified");
    if (in.code.params.m != gdd.m) throw ParameterError("input code modulus differs from the GDD's");
    by_size[in.code.params.n] = &in;
  }
  Code code{{gdd.rows(), gdd.m, 3, 2, 1}, gdd.base_blocks};
  std::int64_t claimed = static_cast<std::int64_t>(gdd.base_blocks.size());
  for (const auto& [rows, in] : by_size) code.params.lambda_a = std::max(code.params.lambda_a, in->code.params.lambda_a);
  for (const std::vector<int>& group : gdd.groups) {
    const auto it = by_size.find(static_cast<int>(group.size()));
    if (it == by_size.end()) throw ParameterError("no input code for a group of size " + std::to_string(group.size()));
    for (const Codeword& cw : it->second->code.codewords) code.codewords.push_back(cw.relabeled(group));
    claimed += it->second->claimed_size;
  }
  return finalize(std::move(code), claimed, std::nullopt, "gdd/expand");
}

ConstructionResult compose_0mod3(int n, int m, const SearchConfig& gdd_config) {
  if (n < 3 || n % 3 != 0) throw ParameterError("compose_0mod3 needs n = 0 mod 3");
  if (n == 6 || n == 9) throw DomainError("n = 6 and n = 9 are not covered by the GDD composition");
  if (n == 3) return ooc_3xm(m);
  if (m == 4 || !ooc_3xm_supported(m)) {
    throw DomainError("m = " + std::to_string(m) + " has no 3 x m code attaining 3m/2 + Psi^e(m)");
  }
  const ConstructionResult base = ooc_3xm(m);
  // Exact cover settles small cases quickly; otherwise fall back to the climb.
  SearchOutcome found;
  if (gdd_config.strategy == Strategy::hill_climb_restart) {
    found = gdd_search(n / 3, m, gdd_config);
  } else {
    SearchConfig exact = gdd_config;
    exact.strategy = Strategy::exact_cover;
    exact.time_budget_seconds = gdd_config.time_budget_seconds / 4;
    found = gdd_search(n / 3, m, exact);
    if (!found.success) {
      SearchConfig climb = gdd_config;
      climb.strategy = Strategy::hill_climb_restart;
      climb.time_budget_seconds = gdd_config.time_budget_seconds - found.elapsed_seconds;
      found = gdd_search(n / 3, m, climb);
    }
  }
  if (!found.success) throw BudgetExhausted("cyclic GDD search did not finish within its budget");
  ConstructionResult out = expand_gdd(found.gdd(), std::span<const ConstructionResult>(&base, 1));
  const std::int64_t psi = psi_e_exact(m).value;
  const std::int64_t size = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) * m + 2 * psi) / 6;
  return finalize(std::move(out.code), size, std::nullopt, "gdd/compose-0mod3");
}

}  // namespace ooc
