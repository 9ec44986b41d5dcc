#include "ooc/core.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ooc/errors.hpp"

namespace ooc {

void CodeParams::validate() const {
  if (n < 1 || m < 1) throw ParameterError("n and m must be positive");
  if (k < 1 || static_cast<long long>(k) > static_cast<long long>(n) * m) {
    throw ParameterError("weight k must satisfy 1 <= k <= n*m");
  }
  if (lambda_a < 1) throw ParameterError("lambda_a must be positive");
  if (lambda_c != 1) throw ParameterError("only lambda_c = 1 is supported");
}

Codeword::Codeword(std::initializer_list<Cell> cells) : Codeword(std::vector<Cell>(cells)) {}

Codeword::Codeword(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw ParameterError("codeword cells must be distinct");
  }
}

Codeword Codeword::reduced(std::initializer_list<Cell> cells, int m) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.push_back({c.row, mod(c.slot, m)});
  return Codeword(std::move(out));
}

Codeword Codeword::on_row(int row, std::initializer_list<long long> slots, int m) {
  std::vector<Cell> out;
  out.reserve(slots.size());
  for (long long s : slots) out.push_back({row, mod(s, m)});
  return Codeword(std::move(out));
}

bool Codeword::fits(const CodeParams& p) const {
  return std::all_of(cells_.begin(), cells_.end(), [&](const Cell& c) {
    return c.row >= 0 && c.row < p.n && c.slot >= 0 && c.slot < p.m;
  });
}

bool Codeword::single_row() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](const Cell& c) { return c.row == cells_.front().row; });
}

Codeword Codeword::translated(long long shift, int m) const {
  std::vector<Cell> out(cells_);
  for (Cell& c : out) c.slot = mod(c.slot + shift, m);
  return Codeword(std::move(out));
}

Codeword Codeword::relabeled(std::span<const int> row_map) const {
  std::vector<Cell> out(cells_);
  for (Cell& c : out) c.row = row_map[static_cast<std::size_t>(c.row)];
  return Codeword(std::move(out));
}

void Code::validate() const {
  // Degenerate empty codes on Z_1 / Z_2 arise as recursion seeds.
  if (codewords.empty()) {
    CodeParams relaxed = params;
    relaxed.k = 1;
    relaxed.validate();
    if (params.k < 1) throw ParameterError("weight k must be positive");
    return;
  }
  params.validate();
  for (const Codeword& cw : codewords) {
    if (cw.weight() != static_cast<std::size_t>(params.k)) {
      throw ParameterError("codeword weight differs from k");
    }
    if (!cw.fits(params)) throw ParameterError("codeword cell outside I_n x Z_m");
  }
}

const ResidueCounts* DifferenceProfile::find(int i, int j) const {
  auto it = by_rows.find({i, j});
  return it == by_rows.end() ? nullptr : &it->second;
}

std::set<int> DifferenceProfile::support(int i, int j) const {
  std::set<int> out;
  if (const ResidueCounts* counts = find(i, j)) {
    for (const auto& [d, c] : *counts) out.insert(d);
  }
  return out;
}

std::size_t DifferenceProfile::total() const {
  std::size_t total = 0;
  for (const auto& [rows, counts] : by_rows) {
    for (const auto& [d, c] : counts) total += static_cast<std::size_t>(c);
  }
  return total;
}

DifferenceProfile difference_profile(const Codeword& codeword, const CodeParams& params) {
  if (!codeword.fits(params)) throw ParameterError("codeword cell outside I_n x Z_m");
  DifferenceProfile profile;
  const auto cells = codeword.cells();
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a == b) continue;
      const int d = mod(cells[a].slot - cells[b].slot, params.m);
      ++profile.by_rows[{cells[a].row, cells[b].row}][d];
    }
  }
  return profile;
}

ResidueCounts slot_differences(std::span<const int> slots, int m) {
  ResidueCounts counts;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (a != b) ++counts[mod(slots[a] - slots[b], m)];
    }
  }
  return counts;
}

std::set<int> slot_difference_support(std::span<const int> slots, int m) {
  std::set<int> out;
  for (const auto& [d, c] : slot_differences(slots, m)) out.insert(d);
  return out;
}

std::vector<int> slots_of(const Codeword& codeword) {
  std::vector<int> out;
  out.reserve(codeword.weight());
  for (const Cell& c : codeword.cells()) out.push_back(c.slot);
  return out;
}

std::set<int> halved_difference_set(const Codeword& codeword, int m) {
  if (!codeword.single_row()) throw DomainError("halved difference set needs a single-row codeword");
  if (m % 4 != 0) throw DomainError("halved difference set needs m = 0 mod 4");
  std::set<int> out;
  const auto slots = slots_of(codeword);
  for (int d : slot_difference_support(slots, m)) {
    if (d >= 1 && d <= m / 2) out.insert(d);
  }
  return out;
}

std::string TypeLabel::name() const {
  switch (type) {
    case CodewordType::type1:
      return "alpha" + std::to_string(sub);
    case CodewordType::type2:
      return "beta" + std::to_string(sub);
    case CodewordType::type3:
      return "gamma";
  }
  return "?";
}

TypeLabel classify_codeword(const Codeword& codeword, const CodeParams& params) {
  if (codeword.weight() != 3) throw DomainError("classification needs a weight-3 codeword");
  if (!codeword.fits(params)) throw ParameterError("codeword cell outside I_n x Z_m");
  const auto c = codeword.cells();
  // Cells are sorted by row, so equal rows are adjacent.
  const bool r01 = c[0].row == c[1].row;
  const bool r12 = c[1].row == c[2].row;
  if (r01 && r12) {
    const auto slots = slots_of(codeword);
    return {CodewordType::type1, static_cast<int>(slot_difference_support(slots, params.m).size())};
  }
  if (r01 || r12) {
    const Cell& x = r01 ? c[0] : c[1];
    const Cell& y = r01 ? c[1] : c[2];
    const bool half = params.m % 2 == 0 && mod(y.slot - x.slot, params.m) == params.m / 2;
    return {CodewordType::type2, half ? 1 : 2};
  }
  return {CodewordType::type3, 0};
}

std::string to_string(ParityClass c) {
  static constexpr std::array<const char*, 7> names = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  return names[static_cast<std::size_t>(c)];
}

ParityClass parity_class(const Codeword& codeword, int m) {
  const std::set<int> halved = halved_difference_set(codeword, m);
  int odd = 0, single = 0, doubly = 0;
  for (int d : halved) {
    if (d % 2 == 1) {
      ++odd;
    } else if (d % 4 == 2) {
      ++single;
    } else {
      ++doubly;
    }
  }
  if (halved.size() == 2) {
    if (odd == 1 && single == 1) return ParityClass::i;
    if (single == 1 && doubly == 1) return ParityClass::ii;
    if (doubly == 2) return ParityClass::iii;
  } else if (halved.size() == 3) {
    if (odd == 2 && single == 1) return ParityClass::iv;
    if (odd == 2 && doubly == 1) return ParityClass::v;
    if (single == 2 && doubly == 1) return ParityClass::vi;
    if (doubly == 3) return ParityClass::vii;
  }
  throw DomainError("codeword has no parity class (|supp| = 2 or not weight 3)");
}

Codeword normalize(const Codeword& codeword, int m) {
  const auto cells = codeword.cells();
  if (cells.empty()) return codeword;
  // The least translate has slot 0 on one of the cells of the smallest row.
  const int first_row = cells.front().row;
  Codeword best = codeword.translated(-cells.front().slot, m);
  for (const Cell& c : cells) {
    if (c.row != first_row) break;
    Codeword candidate = codeword.translated(-c.slot, m);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

bool is_equi_difference(std::span<const int> slots, int m) {
  if (slots.size() != 3) return false;
  for (int centre = 0; centre < 3; ++centre) {
    const int p = slots[static_cast<std::size_t>((centre + 1) % 3)];
    const int q = slots[static_cast<std::size_t>((centre + 2) % 3)];
    if (mod(p + q - 2LL * slots[static_cast<std::size_t>(centre)], m) == 0) return true;
  }
  return false;
}

}  // namespace ooc
