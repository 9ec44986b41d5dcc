#pragma once

// JSON interchange format for codes. Rendering is canonical: keys sorted,
// codewords normalized and sorted, integers only.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ooc/construct.hpp"
#include "ooc/core.hpp"
#include "ooc/gdd.hpp"

namespace ooc::cli {

inline constexpr const char* kSchemaVersion = "1";

struct Metadata {
  std::string branch;
  std::optional<std::int64_t> claimed_size;
  std::optional<std::set<int>> claimed_leave;
  bool verified = false;
  std::string provenance;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct CodeDocument {
  std::string schema_version = kSchemaVersion;
  Code code;
  Metadata metadata;

  friend bool operator==(const CodeDocument& a, const CodeDocument& b) {
    return a.schema_version == b.schema_version && a.code.params == b.code.params &&
           a.code.codewords == b.code.codewords && a.metadata == b.metadata;
  }
};

/// Same document with every codeword normalized and the list sorted.
CodeDocument canonical(CodeDocument doc);

CodeDocument make_document(const ConstructionResult& result, std::string provenance);

nlohmann::json to_json(const CodeDocument& doc);
/// Throws ParameterError on anything that is not a well-formed document.
CodeDocument document_from_json(const nlohmann::json& j);

std::string render(const CodeDocument& doc);
CodeDocument parse(std::string_view text);

/// One "{(r,s),(r,s),(r,s)}" line per codeword.
std::string render_text(const CodeDocument& doc);
/// n lines of m '0'/'1' characters per codeword, blank line between codewords.
std::string render_matrix(const CodeDocument& doc);

nlohmann::json gdd_to_json(const GddBaseBlocks& gdd);

}  // namespace ooc::cli
