#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "banet/dot.hpp"
#include "banet/error.hpp"
#include "banet/io.hpp"
#include "banet/models.hpp"
#include "banet/theorems.hpp"

namespace banet::cli {
namespace {

Mode parse_mode(const std::string& text) {
  if (text == "macro") return Mode::macro;
  if (text == "complete") return Mode::complete;
  throw Error("unknown mode '" + text + "' (expected macro or complete)");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Node> parse_node_list(const std::string& text, const ThresholdNetwork& net) {
  std::vector<Node> out;
  for (const auto& token : split(text, ',')) {
    const auto node = net.find(token);
    if (!node) throw Error("unknown node '" + token + "'");
    out.push_back(*node);
  }
  if (out.empty()) throw IndexError("empty node list");
  return out;
}

std::vector<std::size_t> parse_groups(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& token : split(text, ',')) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 3) {
      throw Error("invalid --group value '" + text + "'");
    }
    const std::size_t width = std::stoul(token);
    if (width == 0) throw Error("--group widths must be positive");
    out.push_back(width);
  }
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

nlohmann::ordered_json report_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["holds"] = r.holds;
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  j["details"] = r.details;
  return j;
}

std::string format_state(const State& s, Mode mode) {
  std::string text = s.config.to_string();
  if (mode == Mode::complete) text += ":" + std::to_string(s.phase);
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold Boolean networks under periodic update schedules"};
  app.name("banet");
  app.require_subcommand(1);

  // simulate
  std::string model;
  std::string schedule_text;
  std::string x0_text;
  std::string mode_text = "macro";
  std::size_t steps = 0;
  std::string groups_text;
  std::string out_path;
  auto* simulate = app.add_subcommand("simulate", "Print the trajectory of a configuration");
  simulate->add_option("model", model, "Bundled model name or network document path")->required();
  simulate->add_option("schedule", schedule_text, "Update schedule")->required();
  simulate->add_option("x0", x0_text, "Initial configuration (node 1 leftmost)")->required();
  simulate->add_option("--mode", mode_text, "macro or complete")->capture_default_str();
  simulate->add_option("--steps", steps, "Step budget (default: 2^n * p + 1)");
  simulate->add_option("--group", groups_text, "Bit grouping for display, e.g. 3,2");
  simulate->add_option("--out", out_path, "Write the trace to a file instead of stdout");

  // attractors
  std::string project_text;
  unsigned workers = 1;
  std::size_t max_nodes = 24;
  auto* attr = app.add_subcommand("attractors", "List all attractors with basin sizes");
  attr->add_option("model", model)->required();
  attr->add_option("schedule", schedule_text)->required();
  attr->add_option("--mode", mode_text, "macro or complete")->capture_default_str();
  attr->add_option("--project", project_text, "Comma-separated nodes to restrict attractors to");
  attr->add_option("--workers", workers, "Worker threads")->capture_default_str();
  attr->add_option("--max-nodes", max_nodes, "Exhaustive enumeration bound")->capture_default_str();

  // graph
  std::string kind = "transition";
  auto* graph = app.add_subcommand("graph", "Emit a graph in DOT format");
  graph->add_option("model", model)->required();
  graph->add_option("schedule", schedule_text, "Update schedule (not needed for interaction graphs)");
  graph->add_option("--kind", kind, "transition, interaction, update or anteriority")
      ->capture_default_str()
      ->check(CLI::IsMember({"transition", "interaction", "update", "anteriority"}));
  graph->add_option("--dot", out_path, "Output path, '-' for stdout")->capture_default_str();
  graph->add_option("--mode", mode_text, "macro or complete (transition graphs)")->capture_default_str();
  graph->add_option("--workers", workers)->capture_default_str();
  graph->add_option("--max-nodes", max_nodes)->capture_default_str();

  // classify
  std::size_t node_count = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a schedule into the fair, block-sequential and block-parallel families");
  classify_cmd->add_option("schedule", schedule_text)->required();
  classify_cmd->add_option("--n", node_count, "Number of nodes")->required();

  // check
  int theorem = 0;
  std::string against_text;
  bool sample = false;
  auto* check = app.add_subcommand("check", "Check a theorem instance; one JSON report per line");
  check->add_option("model", model)->required();
  check->add_option("schedule", schedule_text)->required();
  check->add_option("--theorem", theorem, "1, 3, 4 or 5")->required()->check(CLI::IsMember({1, 3, 4, 5}));
  check->add_option("--against", against_text, "Second schedule for theorem 1 (default: every ordered partition)");
  check->add_flag("--sample", sample, "Theorem 4: also check the default schedule sample");
  check->add_option("--max-nodes", max_nodes)->capture_default_str();

  // models
  std::string show;
  auto* models = app.add_subcommand("models", "List bundled models");
  models->add_option("--show", show, "Print the network document of one model");

  std::vector<const char*> argv{"banet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    const ExhaustiveOptions options{max_nodes, workers};

    if (*simulate) {
      const auto net = load_network(model);
      const auto schedule = to_periodic(parse_schedule(schedule_text, net));
      const auto x0 = Configuration::parse(x0_text);
      if (x0.size() != net.size()) {
        throw Error("initial configuration has " + std::to_string(x0.size()) + " bits, network has " +
                    std::to_string(net.size()) + " nodes");
      }
      const Mode mode = parse_mode(mode_text);
      std::size_t budget = steps;
      if (budget == 0) {
        budget = net.size() < 40 ? ((std::size_t{1} << net.size()) + 1) * schedule.period()
                                 : std::size_t{1} << 40;
      }
      const auto t = trajectory(net, schedule, x0, mode, budget);
      emit(serialize_trace(make_trace(t), parse_groups(groups_text)), out_path, out);
      return kExitOk;
    }

    if (*attr) {
      const auto net = load_network(model);
      const auto schedule = to_periodic(parse_schedule(schedule_text, net));
      const Mode mode = parse_mode(mode_text);
      std::vector<Node> project;
      if (!project_text.empty()) project = parse_node_list(project_text, net);
      const auto found = attractors(net, schedule, mode, options);
      out << "# attractors mode=" << mode_text << " schedule=" << to_string(schedule)
          << " count=" << found.size() << '\n';
      for (const auto& a : found) {
        out << (a.kind == AttractorKind::fixed_point ? "fixed_point" : "limit_cycle") << " period=" << a.period();
        if (a.basin_size) out << " basin=" << *a.basin_size;
        out << " :";
        for (const auto& s : a.states) out << ' ' << format_state(s, mode);
        if (!project.empty()) {
          out << " | project";
          for (const auto& c : project_attractor(a, project)) out << ' ' << c.to_string();
        }
        out << '\n';
      }
      return kExitOk;
    }

    if (*graph) {
      const auto net = load_network(model);
      std::string dot;
      if (kind == "interaction") {
        dot = emit_dot(interaction_graph(net), net);
      } else {
        if (schedule_text.empty()) throw Error("graph --kind " + kind + " needs a schedule");
        const auto schedule = parse_schedule(schedule_text, net);
        if (kind == "transition") {
          dot = emit_dot(transition_graph(net, to_periodic(schedule), parse_mode(mode_text), options));
        } else if (kind == "update") {
          dot = emit_dot(update_graph(net, schedule), net);
        } else {
          const auto* bp = std::get_if<BlockParallelSchedule>(&schedule);
          if (!bp) throw ScheduleError("anteriority graphs need a block-parallel schedule");
          dot = emit_anteriority_dot(*bp, net);
        }
      }
      emit(dot, out_path, out);
      return kExitOk;
    }

    if (*classify_cmd) {
      const auto schedule = parse_schedule(schedule_text, node_count);
      const auto periodic = to_periodic(schedule);
      const auto c = classify(periodic);
      out << "schedule " << to_string(schedule) << '\n';
      out << "sequence " << to_string(periodic) << '\n';
      out << "period " << periodic.period() << '\n';
      out << "fair " << (c.fair ? "true" : "false") << '\n';
      out << "strongly_ergodic " << (c.strongly_ergodic ? "true" : "false") << '\n';
      out << "block_sequential " << (c.block_sequential ? "true" : "false");
      if (c.as_block_sequential) out << ' ' << to_string(*c.as_block_sequential);
      out << '\n';
      out << "block_parallel " << (c.block_parallel ? "true" : "false");
      if (c.as_block_parallel) out << ' ' << to_string(*c.as_block_parallel);
      out << '\n';
      return kExitOk;
    }

    if (*check) {
      const auto net = load_network(model);
      const auto schedule = parse_schedule(schedule_text, net);
      std::vector<PropertyReport> reports;
      switch (theorem) {
        case 1:
          if (!against_text.empty()) {
            reports.push_back(check_update_graph_equivalence(net, schedule, parse_schedule(against_text, net), options));
          } else {
            for (const auto& other : ordered_partitions(net.size())) {
              reports.push_back(check_update_graph_equivalence(net, schedule, other, options));
            }
          }
          break;
        case 3:
          reports.push_back(check_parallel_fixpoint_preservation(net, to_periodic(schedule), options));
          break;
        case 4: {
          std::vector<PeriodicSchedule> schedules{to_periodic(schedule)};
          if (sample) {
            for (auto& s : acyclic_schedule_sample(net.size())) schedules.push_back(std::move(s));
          }
          reports.push_back(check_acyclic_unique_attractor(net, schedules, options));
          break;
        }
        default:
          reports.push_back(check_multistationarity_positive_cycle(net, to_periodic(schedule), options));
          break;
      }
      bool all = true;
      for (const auto& r : reports) {
        out << report_json(r).dump() << '\n';
        all = all && r.holds;
      }
      return all ? kExitOk : kExitPropertyFailed;
    }

    if (*models) {
      if (!show.empty()) {
        const auto m = find_bundled_model(show);
        if (!m) throw Error("no bundled model named '" + show + "'");
        out << m->document;
        return kExitOk;
      }
      for (const auto& m : bundled_models()) {
        out << m.name << '\t' << m.schedule << '\t' << m.initial << '\t' << m.description << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "banet: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace banet::cli
