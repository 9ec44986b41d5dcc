#pragma once

// Direct and recursive constructions. Every result has been run through
// verify_code and checked against its claimed size (and leave, for 1-D
// codes); anything that fails raises VerificationFailure instead.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ooc/core.hpp"
#include "ooc/gdd.hpp"
#include "ooc/search.hpp"

namespace ooc {

struct ConstructionResult {
  Code code;
  std::int64_t claimed_size = 0;
  std::optional<std::set<int>> claimed_leave;  // 1-D codes only
  std::string branch;
  bool verified = false;
};

enum class EquiVariant { standard, half_free };

/// {0, i, 2i} for odd i < m/2 - 1 on Z_m, m = 2 mod 4. Leave {m/2}.
ConstructionResult equi_2mod4(int m);

/// ceil(g/2) codewords on Z_{4g} avoiding the order-g subgroup.
ConstructionResult g_regular_4g(int g);

/// Outer g-regular code on Z_m plus the inner code on Z_g scaled by m/g.
ConstructionResult fill_regular(const ConstructionResult& outer, const ConstructionResult& inner);

/// fill_regular(g_regular_4g(g), inner) for an inner code on Z_g.
ConstructionResult quadruple(const ConstructionResult& inner);

/// Equi-difference code on Z_{4^s r}, r = 2 mod 4.
ConstructionResult equi_power4(int s, int r, EquiVariant variant = EquiVariant::standard);

/// Equi-difference code on Z_{4^s r} seeded by a tight CAC on Z_r. The
/// search budget comes from `search`; its strategy is ignored.
ConstructionResult tight_derived(int r, int s, const SearchConfig& search = {});

/// Equi-difference code on Z_{4^s p}, p prime >= 5, seeded by a searched
/// optimal equi-difference CAC on Z_p.
ConstructionResult prime_derived(int p, int s, const SearchConfig& search = {});

/// Hand-listed codes: 1d48, 3x4, 3x8, 3x20, 3x32, 3x52.
const std::vector<std::string>& explicit_code_ids();
ConstructionResult explicit_code(const std::string& id);

/// 3m/4 codewords on I_2 x Z_m for m = 0 mod 4 (2 when m = 4).
ConstructionResult ooc_2xm(int m);

/// Codes on I_3 x Z_m meeting 3m/2 + Psi^e(m) where a family applies.
ConstructionResult ooc_3xm(int m);
/// True when ooc_3xm(m) has a branch for m.
bool ooc_3xm_supported(int m);

/// Base blocks plus one relabeled copy of the matching input per group.
/// inputs[i] is the code for the i-th distinct group size.
ConstructionResult expand_gdd(const GddBaseBlocks& gdd, std::span<const ConstructionResult> inputs);

/// n = 0 mod 3: ooc_3xm(m) for n = 3, GDD expansion for n >= 12. The GDD
/// comes from exact cover on a quarter of the budget, then hill climbing
/// (or hill climbing alone if the config asks for it).
ConstructionResult compose_0mod3(int n, int m, const SearchConfig& gdd_config = {});

}  // namespace ooc
