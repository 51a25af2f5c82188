#include "kummer/instance_io.hpp"

#include <json.hpp>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

i64 integer_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0, 0);
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer", 0, 0);
  return v.get<i64>();
}

}  // namespace

TowerSpec parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed instance document: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw ParseError("instance document must be an object", 1, 1);

  const i64 p = integer_field(doc, "p");
  const i64 n = integer_field(doc, "n");
  const i64 l1 = integer_field(doc, "l1");
  const i64 l2 = integer_field(doc, "l2");
  if (p < 2 || n < 1 || n > 64 || l1 < 2 || l2 < 2) throw ParseError("p, l1, l2 must be >= 2 and n >= 1", 0, 0);
  if (!doc.contains("pairs") || !doc.at("pairs").is_array())
    throw ParseError("field \"pairs\" must be an array of [a, b]", 0, 0);

  std::vector<std::pair<i64, i64>> pairs;
  for (const json& entry : doc.at("pairs")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw ParseError("each pair must be [a, b] with integer entries", 0, 0);
    pairs.emplace_back(entry[0].get<i64>(), entry[1].get<i64>());
  }
  TowerSpec spec = [&] {
    try {
      return make_spec(static_cast<u64>(p), static_cast<unsigned>(n), static_cast<u64>(l1), static_cast<u64>(l2),
                       pairs);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }();
  validate(spec);
  return spec;
}

std::string emit_instance(const TowerSpec& spec) {
  ordered_json pairs = ordered_json::array();
  for (const auto& v : spec.pairs) pairs.push_back({v.a, v.b});
  ordered_json doc{{"p", spec.ctx.p()}, {"n", spec.ctx.n()}, {"l1", spec.l1}, {"l2", spec.l2}, {"pairs", pairs}};
  return doc.dump();
}

}  // namespace kummer
