#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "med/graph_model.hpp"

namespace med {

/// Study tasks: adjacency, neighborhood size, bounded path, common
/// neighbors, inter-region edges.
enum class Task { T1, T2, T3, T4, T5 };

std::string_view to_string(Task task);
/// Accepts "T1".."T5"; throws UsageError otherwise.
Task parse_task(std::string_view text);
/// T1 and T3 are answered yes/no; the rest are counts.
bool is_boolean_task(Task task);

/// Answer to a trial: yes/no or a non-negative count.
using Answer = std::variant<bool, std::int64_t>;

struct TrialSpec {
  Task task = Task::T1;
  std::vector<std::string> blue;
  std::optional<std::string> orange;
  std::optional<int> k;
  std::vector<std::string> region_a;
  std::vector<std::string> region_b;
  Answer ground_truth = false;

  bool operator==(const TrialSpec&) const = default;
};

bool adjacency_query(const GraphLayout& layout, std::string_view a, std::string_view b);
std::int64_t neighborhood_size(const GraphLayout& layout, std::string_view orange,
                               const std::vector<std::string>& blues);
/// Whether the hop distance between the two nodes is at most k.
bool bounded_path_exists(const GraphLayout& layout, std::string_view blue, std::string_view orange, int k);
std::int64_t common_neighbors(const GraphLayout& layout, std::string_view a, std::string_view b);
std::int64_t inter_region_edges(const GraphLayout& layout, const std::vector<std::string>& region_a,
                                const std::vector<std::string>& region_b);

/// Error of one answer: 0/1 for yes/no tasks, 1 - 1/(1 + |v_u - v_c|) for
/// counting tasks. Throws UsageError when the answer type does not fit the
/// task.
double score_answer(Task task, const Answer& user_value, const Answer& ground_truth);

/// Seeded uniform choice of highlighted nodes; the same seed always yields
/// the same trial. Throws UsageError when the layout is too small.
TrialSpec make_trial(const GraphLayout& layout, Task task, std::uint64_t seed);

/// Re-derives the ground truth from the trial's highlighted nodes.
Answer recompute_ground_truth(const GraphLayout& layout, const TrialSpec& trial);

/// The layout with the trial's color roles and regions applied.
GraphLayout apply_trial_roles(const GraphLayout& layout, const TrialSpec& trial);

std::string trial_to_json(const TrialSpec& trial);
TrialSpec parse_trial(std::string_view raw);

}  // namespace med
