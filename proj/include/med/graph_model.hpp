#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "med/geometry.hpp"

namespace med {

/// Node highlighting used by trial stimuli.
enum class ColorRole { Plain, Blue, Orange };

/// Membership in one of the two highlighted node regions of an
/// inter-region-edges trial.
enum class Region { None, A, B };

std::string_view to_string(ColorRole role);
std::string_view to_string(Region region);

struct NodeSpec {
  std::string id;
  Point position;
  ColorRole color = ColorRole::Plain;
  Region region = Region::None;
};

/// Undirected edge. Construction canonicalizes the endpoints so that
/// `source < target` lexicographically; ratios along the edge are measured
/// from `source`.
struct EdgeSpec {
  std::string source;
  std::string target;

  EdgeSpec() = default;
  EdgeSpec(std::string a, std::string b);

  /// "source--target"
  std::string id() const;

  friend auto operator<=>(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Immutable embedded simple graph. Node order and edge order follow the
/// input; lookups by id are O(1).
class GraphLayout {
 public:
  GraphLayout() = default;

  /// Validates every layout invariant and throws ValidationError naming the
  /// first offending element.
  GraphLayout(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges);

  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges per node (edges / nodes); 0 for an empty layout.
  double density() const;

  /// Throws LookupError for unknown ids.
  std::size_t node_index(std::string_view id) const;
  const NodeSpec& node(std::string_view id) const { return nodes_[node_index(id)]; }
  bool has_node(std::string_view id) const;

  std::optional<std::size_t> find_edge(std::string_view a, std::string_view b) const;
  /// Throws LookupError when the edge is not part of the layout.
  std::size_t edge_index(const EdgeSpec& e) const;

  /// Node indices of an edge, (source, target).
  std::array<std::size_t, 2> endpoints(std::size_t edge) const { return ends_[edge]; }
  /// Segment from source to target.
  Segment segment(std::size_t edge) const;

  /// Neighbor node indices, sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_[node]; }

  /// Copy with node color roles and regions replaced; ids absent from the
  /// maps keep Plain/None.
  GraphLayout with_roles(const std::unordered_map<std::string, ColorRole>& colors,
                         const std::unordered_map<std::string, Region>& regions) const;

 private:
  static std::string key(std::string_view a, std::string_view b);

  std::vector<NodeSpec> nodes_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::array<std::size_t, 2>> ends_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<std::string, std::size_t> node_by_id_;
  std::unordered_map<std::string, std::size_t> edge_by_key_;
};

/// Parses the JSON layout interchange format.
/// Throws ParseError on malformed syntax and ValidationError on invariant
/// violations.
GraphLayout parse_layout(std::string_view raw);
GraphLayout load_layout(const std::string& path);

std::string layout_to_json(const GraphLayout& layout);

double edge_length(const GraphLayout& layout, const EdgeSpec& e);
double edge_length(const GraphLayout& layout, std::size_t edge);

/// The two stubs of a symmetric partial edge drawing.
struct StubPair {
  EdgeSpec edge;
  double ratio = 0.0;
  Segment at_source;  // spans [0, ratio] of source->target
  Segment at_target;  // spans [1 - ratio, 1], drawn from the target inward
};

/// Throws RangeError unless delta0 <= ratio <= 1/2.
StubPair stub_pair(const GraphLayout& layout, const EdgeSpec& e, double ratio, double delta0);
StubPair stub_pair(const GraphLayout& layout, std::size_t edge, double ratio, double delta0);

}  // namespace med
