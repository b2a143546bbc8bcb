#include "logicwb/structure_io.h"

#include <json.hpp>

#include "logicwb/error.h"

namespace logicwb {

using nlohmann::json;

namespace {

const std::string& as_id(const json& j, const char* where) {
  if (!j.is_string()) throw StructureError(std::string("expected a string id in ") + where);
  return j.get_ref<const std::string&>();
}

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StructureError("structure document must be a JSON object");
  return doc;
}

Structure build_from(const json& doc) {
  if (!doc.contains("domain") || !doc["domain"].is_array()) {
    throw StructureError("structure document needs a \"domain\" array");
  }
  StructureBuilder b;
  for (const auto& id : doc["domain"]) b.add_node(as_id(id, "domain"));

  if (doc.contains("unary")) {
    const json& unary = doc["unary"];
    if (!unary.is_object()) throw StructureError("\"unary\" must be an object");
    for (const auto& [name, members] : unary.items()) {
      if (!members.is_array()) throw StructureError("unary \"" + name + "\" must be an array");
      b.declare_unary(name);
      for (const auto& id : members) b.add_unary(name, as_id(id, "unary"));
    }
  }
  if (doc.contains("binary")) {
    const json& binary = doc["binary"];
    if (!binary.is_object()) throw StructureError("\"binary\" must be an object");
    for (const auto& [name, pairs] : binary.items()) {
      if (!pairs.is_array()) throw StructureError("binary \"" + name + "\" must be an array");
      b.declare_binary(name);
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) {
          throw StructureError("binary \"" + name + "\" entries must be 2-element arrays");
        }
        b.add_binary(name, as_id(pair[0], "binary"), as_id(pair[1], "binary"));
      }
    }
  }
  return b.build();
}

json to_json(const Structure& m) {
  json doc = json::object();
  doc["domain"] = m.domain();
  json unary = json::object();
  for (const auto& [name, rel] : m.unary_relations()) {
    json members = json::array();
    for (Node v : rel.nodes) members.push_back(m.name(v));
    unary[name] = std::move(members);
  }
  json binary = json::object();
  for (const auto& [name, rel] : m.binary_relations()) {
    json pairs = json::array();
    for (auto [a, b] : rel.pairs) pairs.push_back(json::array({m.name(a), m.name(b)}));
    binary[name] = std::move(pairs);
  }
  doc["unary"] = std::move(unary);
  doc["binary"] = std::move(binary);
  return doc;
}

}  // namespace

Structure load_structure(std::string_view json_text) {
  return build_from(parse_document(json_text));
}

PointedStructure load_pointed_structure(std::string_view json_text) {
  json doc = parse_document(json_text);
  Structure s = build_from(doc);
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw StructureError("pointed structure document needs a \"points\" array");
  }
  std::vector<Node> points;
  for (const auto& id : doc["points"]) points.push_back(s.node(as_id(id, "points")));
  return PointedStructure(std::move(s), std::move(points));
}

std::string dump_structure(const Structure& m) {
  return to_json(m).dump(2) + "\n";
}

std::string dump_structure(const PointedStructure& m) {
  json doc = to_json(m.structure);
  json points = json::array();
  for (Node p : m.points) points.push_back(m.structure.name(p));
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

}  // namespace logicwb
