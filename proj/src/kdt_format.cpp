#include "kdknn/kdt_format.hpp"

#include <iterator>
#include <string>

#include "json.hpp"
#include "kdknn/error.hpp"

namespace kdknn {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kVersion = 1;

Json tree_to_json(const KdTree& tree) {
  const auto* n = tree.root();
  if (!n) return nullptr;
  Json j;
  j["axis"] = n->axis;
  j["point"] = n->point;
  j["left"] = tree_to_json(n->left);
  j["right"] = tree_to_json(n->right);
  return j;
}

[[noreturn]] void corrupt(const std::string& why) {
  throw InputError("corrupt tree file: " + why);
}

Coord to_coord(const Json& j) {
  if (!j.is_number_unsigned()) corrupt("coordinate is not a natural number");
  return j.get<Coord>();
}

KdTree tree_from_json(const Json& j, std::size_t dims, std::size_t& nodes) {
  if (j.is_null()) return {};
  if (!j.is_object() || j.size() != 4 || !j.contains("axis") ||
      !j.contains("point") || !j.contains("left") || !j.contains("right")) {
    corrupt("node must be null or {axis, point, left, right}");
  }
  const Json& axis = j["axis"];
  if (!axis.is_number_unsigned() || axis.get<std::size_t>() >= dims) {
    corrupt("node axis out of range");
  }
  const Json& pt = j["point"];
  if (!pt.is_array() || pt.size() != dims) {
    corrupt("node point does not have " + std::to_string(dims) +
            " coordinates");
  }
  DataPoint point;
  point.reserve(dims);
  for (const auto& c : pt) point.push_back(to_coord(c));
  ++nodes;
  KdTree left = tree_from_json(j["left"], dims, nodes);
  KdTree right = tree_from_json(j["right"], dims, nodes);
  return KdTree::node(axis.get<std::size_t>(), std::move(point),
                      std::move(left), std::move(right));
}

}  // namespace

std::string serialize_kdt(std::size_t dims, const KdTree& tree) {
  Json doc;
  doc["format"] = "kdt";
  doc["version"] = kVersion;
  doc["dims"] = dims;
  doc["count"] = tree.size();
  doc["root"] = tree_to_json(tree);
  return doc.dump() + "\n";
}

void write_kdt(std::ostream& out, std::size_t dims, const KdTree& tree) {
  out << serialize_kdt(dims, tree);
}

TreeFile parse_kdt(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    corrupt(e.what());
  }
  if (!doc.is_object()) corrupt("top level is not an object");
  for (const char* key : {"format", "version", "dims", "count", "root"}) {
    if (!doc.contains(key)) corrupt(std::string("missing field '") + key + "'");
  }
  if (doc["format"] != "kdt") corrupt("format is not 'kdt'");
  if (doc["version"] != kVersion) corrupt("unsupported version");
  if (!doc["dims"].is_number_unsigned() || doc["dims"].get<std::size_t>() == 0) {
    corrupt("dims must be a positive integer");
  }
  if (!doc["count"].is_number_unsigned()) corrupt("count must be a natural number");

  TreeFile file;
  file.dims = doc["dims"].get<std::size_t>();
  std::size_t nodes = 0;
  file.tree = tree_from_json(doc["root"], file.dims, nodes);
  if (nodes != doc["count"].get<std::size_t>()) {
    corrupt("count " + doc["count"].dump() + " does not match " +
            std::to_string(nodes) + " nodes");
  }
  if (!kdtree_bounded(file.tree, unbounded_box(file.dims))) {
    corrupt("points violate the split ordering");
  }
  return file;
}

TreeFile read_kdt(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_kdt(text);
}

}  // namespace kdknn
