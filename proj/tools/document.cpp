#include "document.hpp"

#include <algorithm>
#include <sstream>

#include "ooc/errors.hpp"

namespace ooc::cli {

using nlohmann::json;

namespace {

json codeword_json(const Codeword& cw) {
  json cells = json::array();
  for (const Cell& c : cw.cells()) cells.push_back(json::array({c.row, c.slot}));
  return cells;
}

int int_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw ParameterError(std::string("missing or non-integer field: ") + key);
  }
  return obj.at(key).get<int>();
}

}  // namespace

CodeDocument canonical(CodeDocument doc) {
  for (Codeword& cw : doc.code.codewords) cw = normalize(cw, doc.code.params.m);
  std::sort(doc.code.codewords.begin(), doc.code.codewords.end());
  return doc;
}

CodeDocument make_document(const ConstructionResult& result, std::string provenance) {
  CodeDocument doc;
  doc.code = result.code;
  doc.metadata.branch = result.branch;
  doc.metadata.claimed_size = result.claimed_size;
  doc.metadata.claimed_leave = result.claimed_leave;
  doc.metadata.verified = result.verified;
  doc.metadata.provenance = std::move(provenance);
  return canonical(std::move(doc));
}

json to_json(const CodeDocument& doc) {
  const CodeDocument c = canonical(doc);
  json words = json::array();
  for (const Codeword& cw : c.code.codewords) words.push_back(codeword_json(cw));
  json meta = {{"branch", c.metadata.branch},
               {"verified", c.metadata.verified},
               {"provenance", c.metadata.provenance}};
  meta["claimed_size"] = c.metadata.claimed_size ? json(*c.metadata.claimed_size) : json(nullptr);
  meta["claimed_leave"] = c.metadata.claimed_leave ? json(*c.metadata.claimed_leave) : json(nullptr);
  const CodeParams& p = c.code.params;
  return {{"schema_version", c.schema_version},
          {"params", {{"n", p.n}, {"m", p.m}, {"k", p.k}, {"lambda_a", p.lambda_a}, {"lambda_c", p.lambda_c}}},
          {"codewords", std::move(words)},
          {"metadata", std::move(meta)}};
}

CodeDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("document must be a JSON object");
  CodeDocument doc;
  if (!j.contains("schema_version") || !j.at("schema_version").is_string()) {
    throw ParameterError("missing schema_version");
  }
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != kSchemaVersion) throw ParameterError("unsupported schema_version " + doc.schema_version);

  if (!j.contains("params") || !j.at("params").is_object()) throw ParameterError("missing params");
  const json& p = j.at("params");
  doc.code.params = {int_field(p, "n"), int_field(p, "m"), int_field(p, "k"), int_field(p, "lambda_a"),
                     int_field(p, "lambda_c")};
  doc.code.params.validate();

  if (!j.contains("codewords") || !j.at("codewords").is_array()) throw ParameterError("missing codewords");
  for (const json& word : j.at("codewords")) {
    if (!word.is_array()) throw ParameterError("codeword must be an array of cells");
    std::vector<Cell> cells;
    for (const json& cell : word) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() || !cell[1].is_number_integer()) {
        throw ParameterError("cell must be a [row, slot] integer pair");
      }
      cells.push_back({cell[0].get<int>(), cell[1].get<int>()});
    }
    doc.code.codewords.emplace_back(std::move(cells));
  }
  doc.code.validate();

  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    if (!meta.is_object()) throw ParameterError("metadata must be an object");
    if (meta.contains("branch")) doc.metadata.branch = meta.at("branch").get<std::string>();
    if (meta.contains("provenance")) doc.metadata.provenance = meta.at("provenance").get<std::string>();
    if (meta.contains("verified")) doc.metadata.verified = meta.at("verified").get<bool>();
    if (meta.contains("claimed_size") && !meta.at("claimed_size").is_null()) {
      doc.metadata.claimed_size = meta.at("claimed_size").get<std::int64_t>();
    }
    if (meta.contains("claimed_leave") && !meta.at("claimed_leave").is_null()) {
      doc.metadata.claimed_leave = meta.at("claimed_leave").get<std::set<int>>();
    }
  }
  return doc;
}

std::string render(const CodeDocument& doc) { return to_json(doc).dump(2) + "\n"; }

CodeDocument parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed document: ") + e.what());
  }
}

std::string render_text(const CodeDocument& doc) {
  std::ostringstream out;
  for (const Codeword& cw : canonical(doc).code.codewords) {
    out << '{';
    bool first = true;
    for (const Cell& c : cw.cells()) {
      out << (first ? "" : ",") << '(' << c.row << ',' << c.slot << ')';
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

std::string render_matrix(const CodeDocument& doc) {
  const CodeParams& p = doc.code.params;
  std::ostringstream out;
  bool first = true;
  for (const Codeword& cw : canonical(doc).code.codewords) {
    if (!first) out << '\n';
    first = false;
    std::vector<std::string> rows(static_cast<std::size_t>(p.n), std::string(static_cast<std::size_t>(p.m), '0'));
    for (const Cell& c : cw.cells()) rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.slot)] = '1';
    for (const std::string& r : rows) out << r << '\n';
  }
  return out.str();
}

json gdd_to_json(const GddBaseBlocks& gdd) {
  json type = json::array();
  for (const GroupType& t : gdd.group_type) type.push_back({{"v", t.v}, {"u", t.u}});
  json blocks = json::array();
  for (const Codeword& b : gdd.base_blocks) blocks.push_back(codeword_json(b));
  return {{"m", gdd.m}, {"group_type", std::move(type)}, {"groups", gdd.groups}, {"base_blocks", std::move(blocks)}};
}

}  // namespace ooc::cli
