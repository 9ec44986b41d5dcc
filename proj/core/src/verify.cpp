#include "ooc/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ooc/errors.hpp"

namespace ooc {
namespace {

// Collects witnesses while holding at most ~2 * kMaxWitnesses of them.
class WitnessSink {
 public:
  void add(const Witness& w) {
    items_.push_back(w);
    if (items_.size() >= 2 * kMaxWitnesses) shrink();
  }

  void finish(VerificationReport& report) {
    shrink();
    report.witnesses = std::move(items_);
    report.dropped_witnesses = dropped_;
  }

 private:
  void shrink() {
    std::sort(items_.begin(), items_.end());
    if (items_.size() > kMaxWitnesses) {
      dropped_ += items_.size() - kMaxWitnesses;
      items_.resize(kMaxWitnesses);
    }
  }

  std::vector<Witness> items_;
  std::size_t dropped_ = 0;
};

// Owner of each (row_i <= row_j, difference) resource.
class OwnerTable {
 public:
  OwnerTable(int n, int m) : n_(n), m_(m) {
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n * m;
    if (cells <= (1u << 24)) dense_.assign(cells, -1);
  }

  // Returns the previous owner, or -1 if the resource was free.
  long long claim(int i, int j, int d, long long owner) {
    const std::uint64_t key = (static_cast<std::uint64_t>(i) * n_ + j) * m_ + d;
    if (!dense_.empty()) {
      long long& slot = dense_[key];
      if (slot < 0) {
        slot = owner;
        return -1;
      }
      return slot;
    }
    auto [it, inserted] = sparse_.try_emplace(key, owner);
    return inserted ? -1 : it->second;
  }

 private:
  int n_;
  int m_;
  std::vector<long long> dense_;
  std::unordered_map<std::uint64_t, long long> sparse_;
};

}  // namespace

VerificationReport verify_code(const Code& code) {
  code.validate();
  const CodeParams& p = code.params;
  VerificationReport report;
  WitnessSink sink;
  OwnerTable owners(p.n, p.m);

  struct Resource {
    int i, j, d;
    auto operator<=>(const Resource&) const = default;
  };
  std::vector<Resource> resources;

  for (std::size_t idx = 0; idx < code.codewords.size(); ++idx) {
    const auto cells = code.codewords[idx].cells();
    ResidueCounts pure;
    resources.clear();
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (a == b) continue;
        const int i = cells[a].row;
        const int j = cells[b].row;
        const int d = mod(cells[a].slot - cells[b].slot, p.m);
        if (i == j) ++pure[d];
        if (i <= j) resources.push_back({i, j, d});
      }
    }
    int lambda = 0;
    for (const auto& [d, c] : pure) lambda = std::max(lambda, c);
    report.max_auto_multiplicity = std::max(report.max_auto_multiplicity, lambda);
    if (lambda > p.lambda_a) {
      report.auto_ok = false;
      for (const auto& [d, c] : pure) {
        if (c > p.lambda_a) sink.add({idx, idx, -1, -1, d, c});
      }
    }
    std::sort(resources.begin(), resources.end());
    resources.erase(std::unique(resources.begin(), resources.end()), resources.end());
    for (const Resource& r : resources) {
      const long long prev = owners.claim(r.i, r.j, r.d, static_cast<long long>(idx));
      if (prev >= 0) {
        report.cross_ok = false;
        sink.add({static_cast<std::size_t>(prev), idx, r.i, r.j, r.d, 2});
      }
    }
  }
  sink.finish(report);
  return report;
}

int matrix_correlation(const Codeword& a, const Codeword& b, int shift, int n, int m) {
  const CodeParams dims{n, m, 1, 1, 1};
  if (!a.fits(dims) || !b.fits(dims)) throw ParameterError("codeword does not fit the n x m matrix");
  const auto dense = [&](const Codeword& cw) {
    std::vector<std::vector<int>> mat(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (const Cell& c : cw.cells()) mat[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.slot)] = 1;
    return mat;
  };
  const auto ma = dense(a);
  const auto mb = dense(b);
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      sum += ma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             mb[static_cast<std::size_t>(i)][static_cast<std::size_t>(mod(j + shift, m))];
    }
  }
  return sum;
}

MatrixVerdict verify_by_matrix(const Code& code) {
  code.validate();
  const CodeParams& p = code.params;
  MatrixVerdict verdict;
  const auto& cws = code.codewords;
  for (std::size_t a = 0; a < cws.size(); ++a) {
    for (int r = 1; r < p.m; ++r) {
      if (matrix_correlation(cws[a], cws[a], r, p.n, p.m) > p.lambda_a) verdict.auto_ok = false;
    }
    for (std::size_t b = a + 1; b < cws.size(); ++b) {
      for (int r = 0; r < p.m; ++r) {
        if (matrix_correlation(cws[a], cws[b], r, p.n, p.m) > p.lambda_c) verdict.cross_ok = false;
      }
    }
  }
  return verdict;
}

CompositionCensus composition_census(const Code& code) {
  CompositionCensus census;
  for (const Codeword& cw : code.codewords) {
    const TypeLabel label = classify_codeword(cw, code.params);
    switch (label.type) {
      case CodewordType::type1:
        ++census.alpha;
        switch (label.sub) {
          case 2: ++census.alpha2; break;
          case 3: ++census.alpha3; break;
          case 4: ++census.alpha4; break;
          case 5: ++census.alpha5; break;
          default: ++census.alpha6; break;
        }
        break;
      case CodewordType::type2:
        ++census.beta;
        ++(label.sub == 1 ? census.beta1 : census.beta2);
        break;
      case CodewordType::type3:
        ++census.gamma;
        break;
    }
  }
  return census;
}

ParityCensus parity_census(const Code& code) {
  if (code.params.m % 4 != 0) throw DomainError("parity census needs m = 0 mod 4");
  ParityCensus census;
  for (const Codeword& cw : code.codewords) {
    switch (parity_class(cw, code.params.m)) {
      case ParityClass::i: ++census.c_o; break;
      case ParityClass::ii: ++census.c_e; break;
      case ParityClass::iii: ++census.c_d; break;
      case ParityClass::iv: ++census.n_oe; break;
      case ParityClass::v: ++census.n_od; break;
      case ParityClass::vi: ++census.n_e; break;
      case ParityClass::vii: ++census.n_d; break;
    }
  }
  return census;
}

StructuralFacts structural_facts(const Code& code) {
  if (code.params.n != 1) throw DomainError("structural facts are defined for 1-D codes");
  const int m = code.params.m;
  StructuralFacts facts;
  facts.is_equi_difference = true;
  std::size_t support_sum = 0;
  for (const Codeword& cw : code.codewords) {
    const auto slots = slots_of(cw);
    if (!is_equi_difference(slots, m)) facts.is_equi_difference = false;
    const auto supp = slot_difference_support(slots, m);
    support_sum += supp.size();
    facts.support.insert(supp.begin(), supp.end());
  }
  for (int d = 1; d < m; ++d) {
    if (!facts.support.contains(d)) facts.difference_leave.insert(d);
  }
  for (int g = 1; g < m; ++g) {
    if (m % g != 0) continue;
    const int step = m / g;
    bool avoids = true;
    for (int h = step; h < m && avoids; h += step) avoids = !facts.support.contains(h);
    if (avoids) facts.regular_subgroups.push_back(g);
  }
  facts.is_tight_cac = facts.is_equi_difference && facts.difference_leave.empty() &&
                       support_sum == static_cast<std::size_t>(m - 1);
  return facts;
}

Code restrict_to_row(const Code& code, int row) {
  Code out{{1, code.params.m, code.params.k, code.params.lambda_a, code.params.lambda_c}, {}};
  const std::vector<int> to_zero(static_cast<std::size_t>(code.params.n), 0);
  for (const Codeword& cw : code.codewords) {
    if (cw.single_row() && cw.weight() > 0 && cw.cells().front().row == row) {
      out.codewords.push_back(cw.relabeled(to_zero));
    }
  }
  return out;
}

bool composition_inequalities_hold(const CompositionCensus& c, int n, int m) {
  const long long pure = 2LL * c.alpha2 + 3LL * c.alpha3 + 4LL * c.alpha4 + 5LL * c.alpha5 +
                         6LL * c.alpha6 + static_cast<long long>(c.beta1) + 2LL * c.beta2;
  const long long mixed = 4LL * c.beta + 6LL * c.gamma;
  const long long halves = static_cast<long long>(c.alpha3 + c.alpha5 + c.beta1);
  return pure <= static_cast<long long>(n) * (m - 1) &&
         mixed <= static_cast<long long>(n) * (n - 1) * m && halves <= n;
}

bool parity_inequalities_hold(const ParityCensus& c, int m) {
  const long long odd = static_cast<long long>(c.c_o + 2 * c.n_oe + 2 * c.n_od);
  const long long single = static_cast<long long>(c.c_o + c.c_e + c.n_oe + 2 * c.n_e);
  const long long doubly = static_cast<long long>(c.c_e + 2 * c.c_d + c.n_od + c.n_e + 3 * c.n_d);
  return odd <= m / 4 && single <= (m + 7) / 8 && doubly <= m / 8;
}

}  // namespace ooc
