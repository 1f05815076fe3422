#include "med/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "med/errors.hpp"

namespace med {

using nlohmann::json;

std::string_view to_string(Task task) {
  switch (task) {
    case Task::T1:
      return "T1";
    case Task::T2:
      return "T2";
    case Task::T3:
      return "T3";
    case Task::T4:
      return "T4";
    case Task::T5:
      return "T5";
  }
  return "?";
}

Task parse_task(std::string_view text) {
  if (text == "T1") return Task::T1;
  if (text == "T2") return Task::T2;
  if (text == "T3") return Task::T3;
  if (text == "T4") return Task::T4;
  if (text == "T5") return Task::T5;
  throw UsageError("unknown task '" + std::string(text) + "' (expected T1..T5)");
}

bool is_boolean_task(Task task) { return task == Task::T1 || task == Task::T3; }

bool adjacency_query(const GraphLayout& layout, std::string_view a, std::string_view b) {
  layout.node_index(a);
  layout.node_index(b);
  if (a == b) {
    throw UsageError("adjacency query needs two distinct nodes");
  }
  return layout.find_edge(a, b).has_value();
}

std::int64_t neighborhood_size(const GraphLayout& layout, std::string_view orange,
                               const std::vector<std::string>& blues) {
  const std::size_t center = layout.node_index(orange);
  std::unordered_set<std::size_t> blue_set;
  for (const std::string& b : blues) {
    const std::size_t idx = layout.node_index(b);
    if (idx == center) {
      throw UsageError("orange node '" + std::string(orange) + "' is also blue");
    }
    blue_set.insert(idx);
  }
  std::int64_t count = 0;
  for (std::size_t n : layout.neighbors(center)) {
    count += blue_set.contains(n) ? 1 : 0;
  }
  return count;
}

bool bounded_path_exists(const GraphLayout& layout, std::string_view blue, std::string_view orange, int k) {
  const std::size_t from = layout.node_index(blue);
  const std::size_t to = layout.node_index(orange);
  if (k < 1) {
    throw UsageError("path bound k must be at least 1");
  }
  if (from == to) {
    throw UsageError("path query needs two distinct nodes");
  }
  std::vector<int> dist(layout.node_count(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (dist[u] == k) {
      continue;
    }
    for (std::size_t v : layout.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        if (v == to) {
          return true;
        }
        queue.push_back(v);
      }
    }
  }
  return false;
}

std::int64_t common_neighbors(const GraphLayout& layout, std::string_view a, std::string_view b) {
  const std::size_t ia = layout.node_index(a);
  const std::size_t ib = layout.node_index(b);
  if (ia == ib) {
    throw UsageError("common-neighbors query needs two distinct nodes");
  }
  const auto& na = layout.neighbors(ia);
  const auto& nb = layout.neighbors(ib);
  std::vector<std::size_t> both;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(both));
  return static_cast<std::int64_t>(
      std::count_if(both.begin(), both.end(), [&](std::size_t n) { return n != ia && n != ib; }));
}

std::int64_t inter_region_edges(const GraphLayout& layout, const std::vector<std::string>& region_a,
                                const std::vector<std::string>& region_b) {
  if (region_a.empty() || region_b.empty()) {
    throw UsageError("regions must be non-empty");
  }
  std::vector<int> side(layout.node_count(), 0);
  for (const std::string& id : region_a) {
    side[layout.node_index(id)] = 1;
  }
  for (const std::string& id : region_b) {
    int& s = side[layout.node_index(id)];
    if (s == 1) {
      throw UsageError("node '" + id + "' belongs to both regions");
    }
    s = 2;
  }
  std::int64_t count = 0;
  for (std::size_t e = 0; e < layout.edge_count(); ++e) {
    const auto [u, v] = layout.endpoints(e);
    count += side[u] * side[v] == 2 ? 1 : 0;
  }
  return count;
}

double score_answer(Task task, const Answer& user_value, const Answer& ground_truth) {
  const bool boolean = is_boolean_task(task);
  if (std::holds_alternative<bool>(user_value) != boolean || std::holds_alternative<bool>(ground_truth) != boolean) {
    throw UsageError(std::string("task ") + std::string(to_string(task)) + " expects " +
                     (boolean ? "a yes/no answer" : "a count"));
  }
  if (boolean) {
    return std::get<bool>(user_value) == std::get<bool>(ground_truth) ? 0.0 : 1.0;
  }
  const std::int64_t user = std::get<std::int64_t>(user_value);
  const std::int64_t truth = std::get<std::int64_t>(ground_truth);
  if (user < 0 || truth < 0) {
    throw UsageError("counts must be non-negative");
  }
  const double diff = std::abs(static_cast<double>(user) - static_cast<double>(truth));
  return 1.0 - 1.0 / (1.0 + diff);
}

namespace {

/// Uniform integer in [0, n) from raw 64-bit draws; platform independent.
std::size_t draw_below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = rng();
  while (r >= limit) {
    r = rng();
  }
  return static_cast<std::size_t>(r % bound);
}

/// `count` distinct indices from [0, n), excluding `excluded`.
std::vector<std::size_t> draw_distinct(std::mt19937_64& rng, std::size_t n, std::size_t count,
                                       const std::unordered_set<std::size_t>& excluded = {}) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < n; ++i) {
    if (!excluded.contains(i)) pool.push_back(i);
  }
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
  }
  pool.resize(count);
  return pool;
}

/// Up to `size` nodes nearest to `seed`, skipping `excluded`; ties by index.
std::vector<std::size_t> nearest_nodes(const GraphLayout& layout, std::size_t seed, std::size_t size,
                                       const std::unordered_set<std::size_t>& excluded) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < layout.node_count(); ++i) {
    if (!excluded.contains(i)) candidates.push_back(i);
  }
  const Point c = layout.nodes()[seed].position;
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return distance(c, layout.nodes()[a].position) < distance(c, layout.nodes()[b].position);
  });
  candidates.resize(std::min(size, candidates.size()));
  return candidates;
}

std::vector<std::string> ids_of(const GraphLayout& layout, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(layout.nodes()[i].id);
  return out;
}

}  // namespace

TrialSpec make_trial(const GraphLayout& layout, Task task, std::uint64_t seed) {
  const std::size_t n = layout.node_count();
  if (n < 2) {
    throw UsageError("task " + std::string(to_string(task)) + " needs at least 2 nodes");
  }
  std::mt19937_64 rng(seed);
  TrialSpec trial;
  trial.task = task;
  switch (task) {
    case Task::T1:
    case Task::T4:
      trial.blue = ids_of(layout, draw_distinct(rng, n, 2));
      break;
    case Task::T2: {
      const std::size_t orange = draw_below(rng, n);
      const std::size_t count = 1 + draw_below(rng, std::min<std::size_t>(n - 1, 8));
      trial.orange = layout.nodes()[orange].id;
      trial.blue = ids_of(layout, draw_distinct(rng, n, count, {orange}));
      break;
    }
    case Task::T3: {
      const auto pair = draw_distinct(rng, n, 2);
      trial.blue = {layout.nodes()[pair[0]].id};
      trial.orange = layout.nodes()[pair[1]].id;
      trial.k = 1 + static_cast<int>(draw_below(rng, 4));
      break;
    }
    case Task::T5: {
      const auto seeds = draw_distinct(rng, n, 2);
      const std::size_t cap = std::max<std::size_t>(1, n / 4);
      const std::size_t size_a = 1 + draw_below(rng, cap);
      const std::size_t size_b = 1 + draw_below(rng, cap);
      const auto region_a = nearest_nodes(layout, seeds[0], size_a, {seeds[1]});
      const std::unordered_set<std::size_t> taken(region_a.begin(), region_a.end());
      const auto region_b = nearest_nodes(layout, seeds[1], size_b, taken);
      trial.region_a = ids_of(layout, region_a);
      trial.region_b = ids_of(layout, region_b);
      break;
    }
  }
  trial.ground_truth = recompute_ground_truth(layout, trial);
  return trial;
}

Answer recompute_ground_truth(const GraphLayout& layout, const TrialSpec& trial) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError(std::string("trial ") + std::string(to_string(trial.task)) + ": " + what);
  };
  switch (trial.task) {
    case Task::T1:
      need(trial.blue.size() == 2, "needs exactly two blue nodes");
      return adjacency_query(layout, trial.blue[0], trial.blue[1]);
    case Task::T2:
      need(trial.orange.has_value() && !trial.blue.empty(), "needs an orange node and blue nodes");
      return neighborhood_size(layout, *trial.orange, trial.blue);
    case Task::T3:
      need(trial.blue.size() == 1 && trial.orange.has_value() && trial.k.has_value(),
           "needs one blue node, one orange node and k");
      return bounded_path_exists(layout, trial.blue[0], *trial.orange, *trial.k);
    case Task::T4:
      need(trial.blue.size() == 2, "needs exactly two blue nodes");
      return common_neighbors(layout, trial.blue[0], trial.blue[1]);
    case Task::T5:
      return inter_region_edges(layout, trial.region_a, trial.region_b);
  }
  throw UsageError("unknown task");
}

GraphLayout apply_trial_roles(const GraphLayout& layout, const TrialSpec& trial) {
  std::unordered_map<std::string, ColorRole> colors;
  std::unordered_map<std::string, Region> regions;
  for (const std::string& id : trial.blue) colors[id] = ColorRole::Blue;
  if (trial.orange) colors[*trial.orange] = ColorRole::Orange;
  for (const std::string& id : trial.region_a) regions[id] = Region::A;
  for (const std::string& id : trial.region_b) regions[id] = Region::B;
  return layout.with_roles(colors, regions);
}

std::string trial_to_json(const TrialSpec& trial) {
  json doc;
  doc["task"] = to_string(trial.task);
  doc["blue"] = trial.blue;
  doc["orange"] = trial.orange ? json(*trial.orange) : json(nullptr);
  doc["k"] = trial.k ? json(*trial.k) : json(nullptr);
  doc["regionA"] = trial.region_a;
  doc["regionB"] = trial.region_b;
  if (const bool* b = std::get_if<bool>(&trial.ground_truth)) {
    doc["ground_truth"] = *b;
  } else {
    doc["ground_truth"] = std::get<std::int64_t>(trial.ground_truth);
  }
  return doc.dump(2) + "\n";
}

TrialSpec parse_trial(std::string_view raw) {
  try {
    const json doc = json::parse(raw.begin(), raw.end());
    TrialSpec trial;
    trial.task = parse_task(doc.at("task").get<std::string>());
    trial.blue = doc.value("blue", std::vector<std::string>{});
    if (doc.contains("orange") && !doc["orange"].is_null()) trial.orange = doc["orange"].get<std::string>();
    if (doc.contains("k") && !doc["k"].is_null()) trial.k = doc["k"].get<int>();
    trial.region_a = doc.value("regionA", std::vector<std::string>{});
    trial.region_b = doc.value("regionB", std::vector<std::string>{});
    const json& gt = doc.at("ground_truth");
    if (gt.is_boolean()) {
      trial.ground_truth = gt.get<bool>();
    } else if (gt.is_number_integer()) {
      trial.ground_truth = gt.get<std::int64_t>();
    } else {
      throw ParseError("trial: ground_truth must be a boolean or an integer");
    }
    return trial;
  } catch (const json::exception& e) {
    throw ParseError(std::string("trial: ") + e.what());
  }
}

}  // namespace med
