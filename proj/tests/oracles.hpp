#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's difference calculus, census or bounds code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ooc/core.hpp"

namespace oracle {

using ooc::Cell;
using ooc::Code;
using ooc::Codeword;

inline int md(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

inline std::set<std::pair<int, int>> cells(const Codeword& w) {
  std::set<std::pair<int, int>> out;
  for (const Cell& c : w.cells()) out.insert({c.row, c.slot});
  return out;
}

// |A intersect (B + shift)| with the cells as plain sets.
inline int overlap(const Codeword& a, const Codeword& b, int shift, int m) {
  const auto sa = cells(a);
  int hits = 0;
  for (const Cell& c : b.cells()) hits += static_cast<int>(sa.count({c.row, md(c.slot + shift, m)}));
  return hits;
}

struct Verdict {
  bool auto_ok = true;
  bool cross_ok = true;
};

inline Verdict correlation_verdict(const Code& code) {
  const int m = code.params.m;
  Verdict v;
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    for (int r = 1; r < m; ++r) {
      if (overlap(code.codewords[i], code.codewords[i], r, m) > code.params.lambda_a) v.auto_ok = false;
    }
    for (std::size_t j = i + 1; j < code.codewords.size(); ++j) {
      for (int r = 0; r < m; ++r) {
        if (overlap(code.codewords[i], code.codewords[j], r, m) > code.params.lambda_c) v.cross_ok = false;
      }
    }
  }
  return v;
}

inline std::vector<int> slots(const Codeword& w) {
  std::vector<int> out;
  for (const Cell& c : w.cells()) out.push_back(c.slot);
  return out;
}

inline std::set<int> support(const std::vector<int>& s, int m) {
  std::set<int> out;
  for (int x : s) {
    for (int y : s) {
      if (x != y) out.insert(md(x - y, m));
    }
  }
  return out;
}

// Nonzero residues missed by every codeword of a 1-D code.
inline std::set<int> leave(const Code& code) {
  const int m = code.params.m;
  std::set<int> covered;
  for (const Codeword& w : code.codewords) {
    for (int d : support(slots(w), m)) covered.insert(d);
  }
  std::set<int> out;
  for (int d = 1; d < m; ++d) {
    if (!covered.count(d)) out.insert(d);
  }
  return out;
}

// [a, b]_o
inline std::set<int> odd_range(long long a, long long b) {
  std::set<int> out;
  for (long long x = a; x <= b; ++x) {
    if (x % 2 != 0) out.insert(static_cast<int>(x));
  }
  return out;
}

inline std::set<int> times(const std::set<int>& s, long long f) {
  std::set<int> out;
  for (int x : s) out.insert(static_cast<int>(x * f));
  return out;
}

inline void add(std::set<int>& into, const std::set<int>& from) { into.insert(from.begin(), from.end()); }

// Union over i = 1..s of 4^{s-i} * ([1, 4^{i-1} r - 1]_o u [3 * 4^{i-1} r + 1, 4^i r - 1]_o).
inline std::set<int> tower_union(int s, long long r) {
  std::set<int> out;
  for (int i = 1; i <= s; ++i) {
    long long lo = r, outer = 1;
    for (int t = 1; t < i; ++t) lo *= 4;
    for (int t = 0; t < s - i; ++t) outer *= 4;
    add(out, times(odd_range(1, lo - 1), outer));
    add(out, times(odd_range(3 * lo + 1, 4 * lo - 1), outer));
  }
  return out;
}

inline long long pow4(int s) { return 1LL << (2 * s); }

// Stated leaves of the 4^s r towers, written out from the closed forms.
inline std::set<int> power4_standard_leave(int s, long long r) {
  std::set<int> l = tower_union(s, r);
  l.insert(static_cast<int>(pow4(s) * r / 2));
  return l;
}

inline std::set<int> power4_half_free_leave(int s, long long r) {
  std::set<int> l = tower_union(s, r);
  l.insert(static_cast<int>(pow4(s) * 3 * r / 8));
  l.insert(static_cast<int>(pow4(s) * 5 * r / 8));
  return l;
}

inline std::set<int> tight_tower_leave(int s, long long r) {
  std::set<int> l = tower_union(s, r);
  if (r % 3 == 0) {
    l.insert(static_cast<int>(pow4(s) * r / 3));
    l.insert(static_cast<int>(2 * pow4(s) * r / 3));
  }
  return l;
}

inline long long mult_order(long long a, long long m) {
  long long x = a % m;
  for (long long k = 1; k <= m; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
  return -1;
}

inline bool prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

// Largest set of generators a (1 <= a < m/2) whose {0,a,2a} supports are
// pairwise disjoint, with lambda_a caps applied; plain subset enumeration.
inline int psi_e_by_subsets(int m, int lambda_a) {
  std::vector<std::set<int>> supp;
  for (int a = 1; 2 * a < m; ++a) {
    const std::vector<int> s = {0, a, 2 * a % m};
    if (s[2] == 0) continue;
    if (md(3 * a, m) == 0 && lambda_a < 3) continue;
    supp.push_back(support(s, m));
  }
  const int k = static_cast<int>(supp.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int count = __builtin_popcount(mask);
    if (count <= best) continue;
    std::set<int> used;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int d : supp[static_cast<std::size_t>(i)]) ok = ok && used.insert(d).second;
    }
    if (ok) best = count;
  }
  return best;
}

struct Census {
  std::size_t alpha[7] = {};  // by support size
  std::size_t beta1 = 0, beta2 = 0, gamma = 0;
};

inline Census census(const Code& code) {
  const int m = code.params.m;
  Census c;
  for (const Codeword& w : code.codewords) {
    std::map<int, std::vector<int>> by_row;
    for (const Cell& x : w.cells()) by_row[x.row].push_back(x.slot);
    if (by_row.size() == 1) {
      ++c.alpha[support(by_row.begin()->second, m).size()];
    } else if (by_row.size() == 2) {
      bool half = false;
      for (const auto& [row, s] : by_row) {
        if (s.size() == 2 && 2 * md(s[0] - s[1], m) == m) half = true;
      }
      ++(half ? c.beta1 : c.beta2);
    } else {
      ++c.gamma;
    }
  }
  return c;
}

inline bool census_inequalities(const Census& c, int n, int m) {
  const long long pure = 3LL * c.alpha[3] + 4LL * c.alpha[4] + 5LL * c.alpha[5] + 6LL * c.alpha[6] +
                         static_cast<long long>(c.beta1) + 2LL * static_cast<long long>(c.beta2);
  const long long mixed = 4LL * static_cast<long long>(c.beta1 + c.beta2) + 6LL * static_cast<long long>(c.gamma);
  return c.alpha[2] == 0 && pure <= 1LL * n * (m - 1) && mixed <= 1LL * n * (n - 1) * m &&
         static_cast<long long>(c.alpha[3] + c.alpha[5] + c.beta1) <= n;
}

// Parity class index 0..6 (i..vii) of a single-row codeword, -1 if none applies.
inline int parity_index(const Codeword& w, int m) {
  int o = 0, e = 0, d = 0;
  for (int x : support(slots(w), m)) {
    if (x > m / 2) continue;
    (x % 2 ? o : x % 4 ? e : d) += 1;
  }
  if (o + e + d == 2) {
    if (o == 1 && e == 1) return 0;
    if (e == 1 && d == 1) return 1;
    if (d == 2) return 2;
  } else if (o + e + d == 3) {
    if (o == 2 && e == 1) return 3;
    if (o == 2 && d == 1) return 4;
    if (e == 2 && d == 1) return 5;
    if (d == 3) return 6;
  }
  return -1;
}

// Parity tallies: C_o, C_e, C_d, N_oe, N_od, N_e, N_d.
inline std::vector<std::size_t> parity(const Code& code) {
  std::vector<std::size_t> t(7, 0);
  for (const Codeword& w : code.codewords) {
    const int idx = parity_index(w, code.params.m);
    if (idx >= 0) t[static_cast<std::size_t>(idx)] += 1;
  }
  return t;
}

inline bool parity_inequalities(const std::vector<std::size_t>& t, int m) {
  const std::size_t odd = t[0] + 2 * t[3] + 2 * t[4];
  const std::size_t single = t[0] + t[1] + t[3] + 2 * t[5];
  const std::size_t doubly = t[1] + 2 * t[2] + t[4] + t[5] + 3 * t[6];
  return odd <= static_cast<std::size_t>(m / 4) && single <= static_cast<std::size_t>((m + 7) / 8) &&
         doubly <= static_cast<std::size_t>(m / 8);
}

// Random weight-3 code on I_n x Z_m with up to max_words codewords.
inline Code random_code(std::mt19937_64& rng, int max_n, int max_m, int max_words) {
  Code code;
  std::uniform_int_distribution<int> n_dist(1, max_n);
  code.params.n = n_dist(rng);
  const int min_m = code.params.n >= 3 ? 1 : 3 / code.params.n + (3 % code.params.n != 0);
  code.params.m = std::uniform_int_distribution<int>(min_m, max_m)(rng);
  const int words = std::uniform_int_distribution<int>(1, max_words)(rng);
  std::uniform_int_distribution<int> row(0, code.params.n - 1), slot(0, code.params.m - 1);
  for (int w = 0; w < words; ++w) {
    std::set<std::pair<int, int>> picked;
    while (picked.size() < 3) picked.insert({row(rng), slot(rng)});
    std::vector<Cell> cs;
    for (auto [r, s] : picked) cs.push_back({r, s});
    code.codewords.emplace_back(std::move(cs));
  }
  return code;
}

}  // namespace oracle
