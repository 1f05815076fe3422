#include "med/graph_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "med/errors.hpp"

namespace med {

using nlohmann::json;

std::string_view to_string(ColorRole role) {
  switch (role) {
    case ColorRole::Blue:
      return "blue";
    case ColorRole::Orange:
      return "orange";
    case ColorRole::Plain:
      break;
  }
  return "plain";
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::A:
      return "A";
    case Region::B:
      return "B";
    case Region::None:
      break;
  }
  return "";
}

EdgeSpec::EdgeSpec(std::string a, std::string b) : source(std::move(a)), target(std::move(b)) {
  if (target < source) {
    std::swap(source, target);
  }
}

std::string EdgeSpec::id() const { return source + "--" + target; }

std::string GraphLayout::key(std::string_view a, std::string_view b) {
  if (b < a) {
    std::swap(a, b);
  }
  std::string k;
  k.reserve(a.size() + b.size() + 1);
  k.append(a);
  k.push_back('\0');
  k.append(b);
  return k;
}

GraphLayout::GraphLayout(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  node_by_id_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const NodeSpec& n = nodes_[i];
    if (!std::isfinite(n.position.x) || !std::isfinite(n.position.y)) {
      throw ValidationError("node '" + n.id + "': non-finite coordinates");
    }
    if (!node_by_id_.emplace(n.id, i).second) {
      throw ValidationError("node '" + n.id + "': duplicate id");
    }
  }

  // Coincident nodes: sort by position and compare neighbors.
  std::vector<std::size_t> by_pos(nodes_.size());
  for (std::size_t i = 0; i < by_pos.size(); ++i) by_pos[i] = i;
  std::sort(by_pos.begin(), by_pos.end(), [&](std::size_t a, std::size_t b) {
    const Point& pa = nodes_[a].position;
    const Point& pb = nodes_[b].position;
    return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
  });
  for (std::size_t i = 1; i < by_pos.size(); ++i) {
    const NodeSpec& a = nodes_[by_pos[i - 1]];
    const NodeSpec& b = nodes_[by_pos[i]];
    if (a.position == b.position) {
      throw ValidationError("nodes '" + a.id + "' and '" + b.id + "': coincident positions");
    }
  }

  ends_.reserve(edges_.size());
  adjacency_.assign(nodes_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    EdgeSpec& e = edges_[i];
    e = EdgeSpec(e.source, e.target);
    if (e.source == e.target) {
      throw ValidationError("edge " + e.id() + ": self-loop");
    }
    auto s = node_by_id_.find(e.source);
    auto t = node_by_id_.find(e.target);
    if (s == node_by_id_.end()) {
      throw ValidationError("edge " + e.id() + ": dangling endpoint '" + e.source + "'");
    }
    if (t == node_by_id_.end()) {
      throw ValidationError("edge " + e.id() + ": dangling endpoint '" + e.target + "'");
    }
    if (!edge_by_key_.emplace(key(e.source, e.target), i).second) {
      throw ValidationError("edge " + e.id() + ": duplicate edge");
    }
    ends_.push_back({s->second, t->second});
    adjacency_[s->second].push_back(t->second);
    adjacency_[t->second].push_back(s->second);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Segment si = segment(i);
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (collinear_overlap(si, segment(j))) {
        throw ValidationError("edges " + edges_[i].id() + " and " + edges_[j].id() +
                              ": collinear overlap");
      }
    }
  }
}

double GraphLayout::density() const {
  return nodes_.empty() ? 0.0 : static_cast<double>(edges_.size()) / static_cast<double>(nodes_.size());
}

std::size_t GraphLayout::node_index(std::string_view id) const {
  auto it = node_by_id_.find(std::string(id));
  if (it == node_by_id_.end()) {
    throw LookupError("unknown node '" + std::string(id) + "'");
  }
  return it->second;
}

bool GraphLayout::has_node(std::string_view id) const { return node_by_id_.contains(std::string(id)); }

std::optional<std::size_t> GraphLayout::find_edge(std::string_view a, std::string_view b) const {
  auto it = edge_by_key_.find(key(a, b));
  if (it == edge_by_key_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t GraphLayout::edge_index(const EdgeSpec& e) const {
  auto idx = find_edge(e.source, e.target);
  if (!idx) {
    throw LookupError("unknown edge " + e.id());
  }
  return *idx;
}

Segment GraphLayout::segment(std::size_t edge) const {
  const auto [s, t] = ends_[edge];
  return {nodes_[s].position, nodes_[t].position};
}

GraphLayout GraphLayout::with_roles(const std::unordered_map<std::string, ColorRole>& colors,
                                    const std::unordered_map<std::string, Region>& regions) const {
  GraphLayout copy = *this;
  for (NodeSpec& n : copy.nodes_) {
    auto c = colors.find(n.id);
    n.color = c == colors.end() ? ColorRole::Plain : c->second;
    auto r = regions.find(n.id);
    n.region = r == regions.end() ? Region::None : r->second;
  }
  return copy;
}

namespace {

ColorRole parse_color(const std::string& s, const std::string& node_id) {
  if (s == "plain") return ColorRole::Plain;
  if (s == "blue") return ColorRole::Blue;
  if (s == "orange") return ColorRole::Orange;
  throw ValidationError("node '" + node_id + "': unknown color '" + s + "'");
}

Region parse_region(const std::string& s, const std::string& node_id) {
  if (s == "A") return Region::A;
  if (s == "B") return Region::B;
  throw ValidationError("node '" + node_id + "': unknown region '" + s + "'");
}

const json& require(const json& obj, const char* field, const char* what) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(std::string(what) + ": missing field '" + field + "'");
  }
  return *it;
}

}  // namespace

GraphLayout parse_layout(std::string_view raw) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("layout: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("layout: top level must be an object");
  }
  const json& jnodes = require(doc, "nodes", "layout");
  const json& jedges = require(doc, "edges", "layout");
  if (!jnodes.is_array() || !jedges.is_array()) {
    throw ParseError("layout: 'nodes' and 'edges' must be arrays");
  }

  std::vector<NodeSpec> nodes;
  nodes.reserve(jnodes.size());
  for (const json& jn : jnodes) {
    if (!jn.is_object()) throw ParseError("layout: node entries must be objects");
    const json& id = require(jn, "id", "node");
    const json& x = require(jn, "x", "node");
    const json& y = require(jn, "y", "node");
    if (!id.is_string() || !x.is_number() || !y.is_number()) {
      throw ParseError("node: 'id' must be a string, 'x' and 'y' numbers");
    }
    NodeSpec n{id.get<std::string>(), {x.get<double>(), y.get<double>()}};
    if (auto c = jn.find("color"); c != jn.end() && !c->is_null()) {
      if (!c->is_string()) throw ParseError("node '" + n.id + "': 'color' must be a string");
      n.color = parse_color(c->get<std::string>(), n.id);
    }
    if (auto r = jn.find("region"); r != jn.end() && !r->is_null()) {
      if (!r->is_string()) throw ParseError("node '" + n.id + "': 'region' must be a string");
      n.region = parse_region(r->get<std::string>(), n.id);
    }
    nodes.push_back(std::move(n));
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(jedges.size());
  for (const json& je : jedges) {
    if (!je.is_object()) throw ParseError("layout: edge entries must be objects");
    const json& s = require(je, "source", "edge");
    const json& t = require(je, "target", "edge");
    if (!s.is_string() || !t.is_string()) {
      throw ParseError("edge: 'source' and 'target' must be strings");
    }
    edges.emplace_back(s.get<std::string>(), t.get<std::string>());
  }
  return GraphLayout(std::move(nodes), std::move(edges));
}

GraphLayout load_layout(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read layout '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_layout(ss.str());
}

std::string layout_to_json(const GraphLayout& layout) {
  json doc;
  json& jnodes = doc["nodes"] = json::array();
  for (const NodeSpec& n : layout.nodes()) {
    json jn = {{"id", n.id}, {"x", n.position.x}, {"y", n.position.y}, {"color", to_string(n.color)}};
    if (n.region != Region::None) {
      jn["region"] = to_string(n.region);
    }
    jnodes.push_back(std::move(jn));
  }
  json& jedges = doc["edges"] = json::array();
  for (const EdgeSpec& e : layout.edges()) {
    jedges.push_back({{"source", e.source}, {"target", e.target}});
  }
  return doc.dump(2) + "\n";
}

double edge_length(const GraphLayout& layout, std::size_t edge) { return layout.segment(edge).length(); }

double edge_length(const GraphLayout& layout, const EdgeSpec& e) {
  return edge_length(layout, layout.edge_index(e));
}

StubPair stub_pair(const GraphLayout& layout, std::size_t edge, double ratio, double delta0) {
  if (!(ratio >= delta0 && ratio <= 0.5)) {
    throw RangeError("stub ratio " + std::to_string(ratio) + " outside [delta0, 1/2]");
  }
  const Segment seg = layout.segment(edge);
  StubPair out;
  out.edge = layout.edges()[edge];
  out.ratio = ratio;
  out.at_source = {seg.a, lerp(seg.a, seg.b, ratio)};
  out.at_target = {seg.b, lerp(seg.a, seg.b, 1.0 - ratio)};
  return out;
}

StubPair stub_pair(const GraphLayout& layout, const EdgeSpec& e, double ratio, double delta0) {
  return stub_pair(layout, layout.edge_index(e), ratio, delta0);
}

}  // namespace med
