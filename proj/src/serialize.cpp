#include "bullchrome/serialize.hpp"

#include <cstdio>

#include "bullchrome/graph_io.hpp"

namespace bullchrome {

using nlohmann::json;

json to_json(const VertexSet& set) { return set.to_vector(); }

json to_json(const PropertyReport& report) {
  json j{{"property", report.property}, {"holds", report.holds}};
  if (!report.witness_kind.empty()) {
    j["witness_kind"] = report.witness_kind;
    j["witness"] = report.witness;
  }
  if (!report.causes.empty()) {
    j["causes"] = json::array();
    for (const auto& c : report.causes) j["causes"].push_back(to_json(c));
  }
  return j;
}

json to_json(const ModularTree& tree) {
  json j{{"kind", to_string(tree.kind)}, {"vertices", tree.vertices}};
  if (tree.kind == NodeKind::leaf) return j;
  if (tree.kind == NodeKind::prime) j["quotient"] = emit_graph6(tree.quotient);
  j["children"] = json::array();
  for (const auto& c : tree.children) j["children"].push_back(to_json(c));
  return j;
}

json to_json(const Coloring& coloring) { return coloring.colors(); }

json to_json(const ColorAccount& account) {
  json j{{"stage", account.stage}, {"vertices", account.vertices}, {"colors_used", account.colors_used}};
  if (account.budget) {
    j["budget"] = {{"formula", account.budget->formula}, {"limit", to_decimal(account.budget->limit)}};
    j["within_budget"] = account.within_budget();
  }
  if (!account.children.empty()) {
    j["children"] = json::array();
    for (const auto& c : account.children) j["children"].push_back(to_json(c));
  }
  return j;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bullchrome
