// Copyright 2026 The dilation-augment Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch for the dilation tool. Kept in a header so tests can
// drive every command in-process.
//
// Exit codes: 0 success, 1 invalid input, 2 usage error, 3 bound check
// failed.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "dilation/analysis.hpp"
#include "dilation/augment.hpp"
#include "dilation/error.hpp"
#include "dilation/generator.hpp"
#include "dilation/instance.hpp"
#include "dilation/signatures.hpp"

namespace dilation {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitUsage = 2,
  kExitBoundFailure = 3,
};

/// Line-oriented key<TAB>value report; byte-identical for equal inputs.
class MachineReport {
 public:
  template <typename... Fields>
  void row(const std::string& key, const Fields&... fields) {
    text_ += key;
    ((text_ += '\t', text_ += field(fields)), ...);
    text_ += '\n';
  }

  const std::string& text() const noexcept { return text_; }

 private:
  static std::string field(const std::string& s) { return s; }
  static std::string field(const char* s) { return s; }
  static std::string field(bool b) { return b ? "true" : "false"; }
  static std::string field(double x) { return format_number(x); }
  static std::string field(std::size_t x) { return std::to_string(x); }

  std::string text_;
};

namespace detail {

inline const char* backend_name(const MetricSpace& space) {
  return space.backend() == MetricBackend::Euclidean ? "euclidean" : "matrix";
}

inline void describe_instance(const Instance& inst, MachineReport& report, std::ostream& out) {
  const std::size_t n = inst.graph.vertex_count();
  const std::size_t m = inst.graph.edge_count();
  const char* metric = backend_name(*inst.space);
  report.row("n", n);
  report.row("m", m);
  report.row("metric", metric);
  out << "instance: n=" << n << " m=" << m << " metric=" << metric << "\n";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "u-v,u-v" -> edges.
inline std::vector<Edge> parse_shortcut_list(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto dash = item.find('-');
    std::size_t u = 0, v = 0;
    auto parse = [](const std::string& s, std::size_t& out) {
      if (s.empty()) return false;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
      return res.ec == std::errc{} && res.ptr == s.data() + s.size();
    };
    if (dash == std::string::npos || !parse(item.substr(0, dash), u) ||
        !parse(item.substr(dash + 1), v)) {
      throw UsageError("--shortcuts: malformed entry '" + item + "', expected u-v");
    }
    edges.push_back(Edge(u, v));
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "shortcut " + item + " is a self-loop");
    }
  }
  if (edges.empty()) throw UsageError("--shortcuts: no edges given");
  return edges;
}

inline void emit(const MachineReport& report, const std::string& path) {
  if (!path.empty()) write_text_file(path, report.text());
}

inline int cmd_gen(const GeneratorOptions& opt, const std::string& out_path, std::ostream& out) {
  const std::string text = emit_instance(generate_instance(opt));
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    out << "wrote " << out_path << " (" << to_string(opt.model) << ", n=" << opt.n
        << ", seed=" << opt.seed << ")\n";
  }
  return kExitOk;
}

inline int cmd_eval(const std::string& file, const std::string& report_path, std::ostream& out) {
  const Instance inst = load_instance(file);
  const DilationReport d = average_dilation(inst.graph);
  MachineReport report;
  report.row("command", "eval");
  describe_instance(inst, report, out);
  report.row("pairs", d.pair_count);
  report.row("average_dilation", d.average);
  report.row("max_dilation", d.maximum);
  out << "pairs: " << d.pair_count << "\n"
      << "average dilation: " << format_number(d.average) << "\n"
      << "maximum dilation: " << format_number(d.maximum) << "\n";
  emit(report, report_path);
  return kExitOk;
}

struct AugmentArgs {
  std::string file;
  std::size_t k = 1;
  std::optional<std::size_t> steps;
  std::string algorithm = "greedy";
  bool stop_when_flat = false;
  std::size_t threads = 1;
  std::string report_path;
};

inline int cmd_augment(const AugmentArgs& args, std::ostream& out) {
  const Instance inst = load_instance(args.file);
  const Graph& g = inst.graph;
  const MetricSpace& space = *inst.space;
  const DilationReport before = average_dilation(g);

  MachineReport report;
  report.row("command", "augment");
  report.row("algorithm", args.algorithm);
  describe_instance(inst, report, out);
  report.row("k", args.k);
  report.row("average_before", before.average);
  report.row("max_before", before.maximum);
  out << "before: average=" << format_number(before.average)
      << " maximum=" << format_number(before.maximum) << "\n";

  ShortcutSet chosen;
  if (args.algorithm == "greedy") {
    GreedyOptions opt;
    opt.steps = args.steps.value_or(args.k);
    opt.threads = args.threads;
    opt.stop_when_flat = args.stop_when_flat;
    const GreedyTrace trace = greedy_augment(g, opt);
    report.row("steps_requested", opt.steps);
    std::string flat;
    for (const GreedyStep& s : trace.steps) {
      report.row("step", s.index, s.edge.u, s.edge.v, s.benefit, s.average);
      out << "step " << s.index << ": edge (" << s.edge.u << "," << s.edge.v
          << ") benefit=" << format_number(s.benefit) << " average=" << format_number(s.average)
          << " candidates=" << s.candidates << (s.flat ? " [flat]" : "") << " time="
          << std::fixed << std::setprecision(3) << s.seconds << "s" << std::defaultfloat
          << "\n";
      if (s.flat) flat += (flat.empty() ? "" : ",") + std::to_string(s.index);
    }
    report.row("steps_run", trace.steps.size());
    report.row("truncated", trace.truncated);
    report.row("stopped_flat", trace.stopped_flat);
    report.row("flat_steps", flat.empty() ? std::string("none") : flat);
    if (trace.truncated) out << "no candidate non-edges remain; trace truncated\n";
    if (trace.stopped_flat) out << "stopped: next step would not reduce dilation\n";
    chosen = trace.shortcuts;
  } else {
    const OptimalResult opt = optimal_augment(g, args.k);
    // Prefix statistics of F* in sorted order.
    const DistanceOracle base = apsp(g);
    DistanceOracle current = base;
    std::size_t i = 0;
    for (const Edge& e : opt.shortcuts.edges()) {
      current = augment_distances(current, space, e);
      const double b = benefit_total(base, current, space);
      const double avg = dilation_report(current, space).average;
      report.row("step", ++i, e.u, e.v, b, avg);
      out << "edge " << i << ": (" << e.u << "," << e.v << ") benefit=" << format_number(b)
          << " average=" << format_number(avg) << "\n";
    }
    report.row("subsets", opt.subsets);
    report.row("truncated", opt.truncated);
    out << "subsets evaluated: " << opt.subsets << "\n";
    if (opt.truncated) out << "k exceeds the number of non-edges; all were added\n";
    chosen = opt.shortcuts;
  }

  const BenefitLedger ledger = benefit(g, chosen);
  const DilationReport after = chosen.empty() ? before : average_dilation(g.with_edges(chosen.edges()));
  report.row("benefit", ledger.total);
  report.row("average_after", after.average);
  report.row("max_after", after.maximum);
  out << "benefit: " << format_number(ledger.total) << "\n"
      << "after: average=" << format_number(after.average)
      << " maximum=" << format_number(after.maximum) << "\n";
  emit(report, args.report_path);
  return kExitOk;
}

inline int cmd_signatures(const std::string& file, const std::string& shortcut_text,
                          const std::string& report_path, std::ostream& out) {
  const Instance inst = load_instance(file);
  const std::vector<Edge> edges = parse_shortcut_list(shortcut_text);
  const ShortcutSet shortcuts(*inst.space, edges);
  const Decomposition d = benefit_decomposition(inst.graph, shortcuts);
  const SignatureAnalysis analysis(inst.graph, shortcuts);

  MachineReport report;
  report.row("command", "signatures");
  describe_instance(inst, report, out);
  std::string listing;
  for (const Edge& e : shortcuts.edges()) {
    listing += (listing.empty() ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  report.row("shortcuts", listing);
  report.row("benefit", d.benefit_total);
  out << "shortcuts: " << listing << "\nbenefit: " << format_number(d.benefit_total) << "\n";

  const std::size_t n = inst.graph.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Signature s = analysis.signature(u, v);
      const double b = analysis.pair_benefit(u, v);
      if (s.none()) {
        report.row("pair", u, v, "-", "-", b);
      } else {
        report.row("pair", u, v, s.value->first, s.value->second, b);
      }
    }
  }
  for (const auto& [key, cls] : d.classes) {
    report.row("signature", key.first, key.second, cls.benefit, cls.pairs);
    out << "signature (" << key.first << "," << key.second
        << "): restricted benefit=" << format_number(cls.benefit) << " pairs=" << cls.pairs
        << "\n";
  }
  report.row("none_pairs", d.none.pairs);
  report.row("none_benefit", d.none.benefit);
  report.row("restricted_sum", d.restricted_sum);
  report.row("residual", d.residual);
  report.row("decomposition_holds", d.holds);
  out << "no shortcut used: pairs=" << d.none.pairs
      << " benefit=" << format_number(d.none.benefit) << "\n"
      << "sum of restricted benefits: " << format_number(d.restricted_sum)
      << " (residual " << format_number(d.residual) << ")\n"
      << "decomposition holds: " << (d.holds ? "yes" : "no") << "\n";
  emit(report, report_path);
  return kExitOk;
}

inline int cmd_check_bounds(const std::string& file, std::size_t k, std::uint64_t cap,
                            std::size_t threads, const std::string& report_path,
                            std::ostream& out) {
  const Instance inst = load_instance(file);
  const BoundReport r = check_theorem_bounds(inst.graph, k, cap, threads);
  const double kd = static_cast<double>(k);

  MachineReport report;
  report.row("command", "check-bounds");
  describe_instance(inst, report, out);
  report.row("k", k);
  report.row("cap", static_cast<std::size_t>(cap));
  report.row("optimal_subsets", static_cast<std::size_t>(r.optimal.subsets));
  report.row("optimal_truncated", r.optimal.truncated);
  for (const Edge& e : r.optimal.shortcuts.edges()) report.row("optimal_edge", e.u, e.v);
  report.row("optimal_benefit", r.optimal_benefit);
  report.row("greedy_steps_requested", r.greedy_steps_requested);
  report.row("greedy_steps_run", r.greedy.steps.size());
  report.row("greedy_truncated", r.greedy.truncated);
  for (const GreedyStep& s : r.greedy.steps) {
    report.row("step", s.index, s.edge.u, s.edge.v, s.benefit, s.average);
  }
  report.row("greedy_benefit_k", r.greedy_benefit_at_k);
  report.row("greedy_benefit_4k2", r.greedy_benefit_at_4k2);
  report.row("bound_k", r.optimal_benefit / (8.0 * kd));
  report.row("bound_4k2", r.optimal_benefit / 2.0);
  report.row("ratio_k", r.ratio_k ? format_number(*r.ratio_k) : std::string("-"));
  report.row("ratio_4k2", r.ratio_4k2 ? format_number(*r.ratio_4k2) : std::string("-"));
  report.row("trivial", r.trivial);
  report.row("theorem_k_satisfied", r.theorem_k_satisfied);
  report.row("theorem_4k2_satisfied", r.theorem_4k2_satisfied);

  out << "optimal benefit (k=" << k << "): " << format_number(r.optimal_benefit) << " over "
      << r.optimal.subsets << " subsets\n"
      << "greedy benefit after " << k << " steps: " << format_number(r.greedy_benefit_at_k)
      << " (bound " << format_number(r.optimal_benefit / (8.0 * kd)) << ") "
      << (r.theorem_k_satisfied ? "ok" : "VIOLATED") << "\n"
      << "greedy benefit after " << r.greedy_steps_requested
      << " steps: " << format_number(r.greedy_benefit_at_4k2) << " (bound "
      << format_number(r.optimal_benefit / 2.0) << ") "
      << (r.theorem_4k2_satisfied ? "ok" : "VIOLATED") << "\n";
  if (r.trivial) out << "trivial instance: no k-set improves dilation\n";

  // Lemma tripwire along the greedy prefixes F_0 .. F_{k-1}.
  std::size_t violations = 0;
  ShortcutSet prefix;
  for (std::size_t i = 0; i < k; ++i) {
    const LemmaVerdict v = check_key_lemma(inst.graph, prefix, k, r.optimal_benefit);
    if (!v.satisfied()) ++violations;
    if (v.witness) {
      report.row("lemma", i, to_string(v.branch), v.current_benefit, v.witness->u,
                 v.witness->v, v.witness_benefit);
    } else {
      report.row("lemma", i, to_string(v.branch), v.current_benefit, "-", "-", "-");
    }
    if (i >= r.greedy.steps.size()) break;
    prefix.push_back(*inst.space, r.greedy.steps[i].edge);
  }
  report.row("lemma_violations", violations);
  out << "lemma checks on greedy prefixes: " << violations << " violations\n";

  emit(report, report_path);
  return r.satisfied() && violations == 0 ? kExitOk : kExitBoundFailure;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilation analysis and greedy shortcut augmentation", "dilation"};
  app.require_subcommand(1);

  GeneratorOptions gen;
  std::string model_name;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--model", model_name, "uniform-square | path | random-tree")
      ->required()
      ->check(CLI::IsMember({"uniform-square", "path", "random-tree"}));
  gen_cmd->add_option("--n", gen.n, "Number of points")->required()->check(CLI::Range(2, 1 << 20));
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_flag("--collinear", gen.collinear, "Path model: points at 0,1,2,... on a line");
  gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

  std::string eval_file, eval_report;
  auto* eval_cmd = app.add_subcommand("eval", "Dilation statistics of an instance");
  eval_cmd->add_option("file", eval_file, "Instance file")->required();
  eval_cmd->add_option("--report", eval_report, "Machine-readable report file");

  detail::AugmentArgs aug;
  std::size_t aug_steps = 0;
  auto* aug_cmd = app.add_subcommand("augment", "Add shortcut edges");
  aug_cmd->add_option("file", aug.file, "Instance file")->required();
  aug_cmd->add_option("--k", aug.k, "Shortcut budget")->required()->check(CLI::PositiveNumber);
  auto* steps_opt = aug_cmd->add_option("--steps", aug_steps, "Greedy steps (default: k)")
                        ->check(CLI::PositiveNumber);
  aug_cmd->add_option("--algorithm", aug.algorithm, "greedy | optimal")
      ->check(CLI::IsMember({"greedy", "optimal"}));
  aug_cmd->add_flag("--stop-when-flat", aug.stop_when_flat,
                    "Stop once no candidate reduces dilation");
  aug_cmd->add_option("--threads", aug.threads, "Worker threads")->check(CLI::PositiveNumber);
  aug_cmd->add_option("--report", aug.report_path, "Machine-readable report file");

  std::string sig_file, sig_shortcuts, sig_report;
  auto* sig_cmd = app.add_subcommand("signatures", "Signature decomposition of a shortcut set");
  sig_cmd->add_option("file", sig_file, "Instance file")->required();
  sig_cmd->add_option("--shortcuts", sig_shortcuts, "Comma-separated u-v list")->required();
  sig_cmd->add_option("--report", sig_report, "Machine-readable report file");

  std::string cb_file, cb_report;
  std::size_t cb_k = 1;
  std::uint64_t cb_cap = kDefaultEnumerationCap;
  std::size_t cb_threads = 1;
  auto* cb_cmd = app.add_subcommand("check-bounds", "Compare greedy against the exact optimum");
  cb_cmd->add_option("file", cb_file, "Instance file")->required();
  cb_cmd->add_option("--k", cb_k, "Shortcut budget")->required()->check(CLI::PositiveNumber);
  cb_cmd->add_option("--cap", cb_cap, "Maximum number of subsets to enumerate");
  cb_cmd->add_option("--threads", cb_threads, "Worker threads")->check(CLI::PositiveNumber);
  cb_cmd->add_option("--report", cb_report, "Machine-readable report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.model = *parse_model(model_name);
      return detail::cmd_gen(gen, gen_out, out);
    }
    if (*eval_cmd) return detail::cmd_eval(eval_file, eval_report, out);
    if (*aug_cmd) {
      if (*steps_opt) aug.steps = aug_steps;
      return detail::cmd_augment(aug, out);
    }
    if (*sig_cmd) return detail::cmd_signatures(sig_file, sig_shortcuts, sig_report, out);
    if (*cb_cmd) {
      return detail::cmd_check_bounds(cb_file, cb_k, cb_cap, cb_threads, cb_report, out);
    }
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace dilation
