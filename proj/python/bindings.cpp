#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "med/cli.hpp"
#include "med/crossings.hpp"
#include "med/easing.hpp"
#include "med/errors.hpp"
#include "med/graph_model.hpp"
#include "med/kinematics.hpp"
#include "med/renderer.hpp"
#include "med/scheduler.hpp"
#include "med/tasks.hpp"

namespace py = pybind11;
using namespace med;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Morphing edge drawing toolkit";

  auto error = py::register_exception<Error>(m, "MedError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<RangeError>(m, "RangeError", error.ptr());
  py::register_exception<UsageError>(m, "UsageError", error.ptr());
  py::register_exception<LookupError>(m, "LookupError", error.ptr());

  py::class_<GraphLayout>(m, "Layout")
      .def_property_readonly("node_count", &GraphLayout::node_count)
      .def_property_readonly("edge_count", &GraphLayout::edge_count)
      .def_property_readonly("density", &GraphLayout::density)
      .def_property_readonly("node_ids",
                             [](const GraphLayout& g) {
                               std::vector<std::string> ids;
                               for (const auto& n : g.nodes()) ids.push_back(n.id);
                               return ids;
                             })
      .def_property_readonly("edge_ids",
                             [](const GraphLayout& g) {
                               std::vector<std::string> ids;
                               for (const auto& e : g.edges()) ids.push_back(e.id());
                               return ids;
                             })
      .def("to_json", [](const GraphLayout& g) { return layout_to_json(g); });

  m.def("parse_layout", [](const std::string& raw) { return parse_layout(raw); }, py::arg("text"));
  m.def("load_layout", &load_layout, py::arg("path"));

  py::class_<AnimationConfig>(m, "Config")
      .def(py::init<>())
      .def_readwrite("sigma_a", &AnimationConfig::sigma_a)
      .def_readwrite("delta0", &AnimationConfig::delta0)
      .def_readwrite("tau_half", &AnimationConfig::tau_half)
      .def_readwrite("tau_distinct", &AnimationConfig::tau_distinct)
      .def_readwrite("fps", &AnimationConfig::fps)
      .def_readwrite("horizon", &AnimationConfig::horizon)
      .def_property(
          "easing", [](const AnimationConfig& c) { return format_easing(c.easing); },
          [](AnimationConfig& c, const std::string& s) { c.easing = parse_easing(s); })
      .def("to_json", [](const AnimationConfig& c) { return config_to_json(c); });
  m.def("preset", [](const std::string& name) { return preset(name); }, py::arg("name"));

  m.def("ease", [](const std::string& spec, double rho) { return eval(parse_easing(spec), rho); }, py::arg("spec"),
        py::arg("rho_t"));
  m.def("ease_inverse", [](const std::string& spec, double rho) { return invert(parse_easing(spec), rho); },
        py::arg("spec"), py::arg("rho_a"));

  m.def(
      "avoidable_crossings",
      [](const GraphLayout& g, double delta0) {
        py::list out;
        for (const AvoidableCrossing& c : find_avoidable_crossings(g, delta0)) {
          out.append(py::make_tuple(g.edges()[c.edge1].id(), g.edges()[c.edge2].id(), c.point.x, c.point.y, c.r1,
                                    c.r2));
        }
        return out;
      },
      py::arg("layout"), py::arg("delta0") = 0.25);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("makespan", &Schedule::makespan)
      .def_readonly("config", &Schedule::config)
      .def_property_readonly("starts",
                             [](const Schedule& s) {
                               py::dict out;
                               for (const auto& e : s.edges) out[py::str(e.edge.id())] = e.starts;
                               return out;
                             })
      .def("to_json", [](const Schedule& s) { return schedule_to_json(s); });

  m.def("compute_schedule", &compute_schedule, py::arg("layout"), py::arg("config"));
  m.def("parse_schedule", [](const std::string& raw, const GraphLayout& g) { return parse_schedule(raw, g); },
        py::arg("text"), py::arg("layout"));
  m.def(
      "validate_schedule",
      [](const GraphLayout& g, const Schedule& s, double step) {
        const ValidationReport r = validate_schedule(g, s.config, s, step);
        return py::make_tuple(r.passed, std::string(to_string(r.kind)), r.message);
      },
      py::arg("layout"), py::arg("schedule"), py::arg("step_ms") = 1.0);
  m.def("relative_slowdown", &relative_slowdown, py::arg("a"), py::arg("b"));

  m.def(
      "frame_svg",
      [](const GraphLayout& g, const Schedule& s, double t) {
        return frame_to_svg(sample_frame(g, s.config, s, t));
      },
      py::arg("layout"), py::arg("schedule"), py::arg("t_ms"));
  m.def("animation_svg", [](const GraphLayout& g, const Schedule& s) { return animation_svg(g, s.config, s); },
        py::arg("layout"), py::arg("schedule"));
  m.def("frame_times", &frame_times, py::arg("makespan_ms"), py::arg("fps"));

  m.def(
      "make_trial",
      [](const GraphLayout& g, const std::string& task, std::uint64_t seed) {
        return trial_to_json(make_trial(g, parse_task(task), seed));
      },
      py::arg("layout"), py::arg("task"), py::arg("seed"));
  m.def(
      "score_answer",
      [](const std::string& task, std::int64_t user, std::int64_t truth) {
        const Task t = parse_task(task);
        if (is_boolean_task(t)) return score_answer(t, Answer{user != 0}, Answer{truth != 0});
        return score_answer(t, Answer{user}, Answer{truth});
      },
      py::arg("task"), py::arg("answer"), py::arg("truth"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
