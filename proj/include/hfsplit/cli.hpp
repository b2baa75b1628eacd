#pragma once

// Command-line surface. `run` parses arguments and writes to the given
// streams, so the whole CLI can be exercised in-process.
//
// Exit codes: 0 pass, 1 identity failure, 2 validation error, 3 I/O or parse
// error (unknown catalog names included).

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "cobordism.hpp"
#include "document.hpp"
#include "error.hpp"
#include "froyshov.hpp"
#include "gen.hpp"
#include "sweep.hpp"
#include "tracer.hpp"

namespace hfsplit::cli {

using nlohmann::json;

enum class Exit : int { pass = 0, identity_failure = 1, validation = 2, input = 3 };

inline constexpr const char* kReportVersion = "1";

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  std::optional<Convention> view;  // report grading; defaults to the instance's
};

inline int exit_code(const Error& e) {
  if (e.is_input_error()) return static_cast<int>(Exit::input);
  if (e.kind() == ErrorKind::StepMismatch) return static_cast<int>(Exit::identity_failure);
  return static_cast<int>(Exit::validation);
}

inline Instance resolve(const std::string& path) {
  constexpr std::string_view prefix = "catalog:";
  if (path.starts_with(prefix)) return catalog_entry(path.substr(prefix.size())).instance;
  return load(path);
}

namespace detail {

inline bool color_enabled() {
  const char* v = std::getenv("REPORT_COLOR");
  return v && std::string(v) != "0" && std::string(v) != "";
}

inline std::string verdict_word(bool ok) {
  if (!color_enabled()) return ok ? "PASS" : "FAIL";
  return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

inline std::string degree_label(int q, Convention view) {
  return view == Convention::homology ? "HF_" + std::to_string(regrade_degree(q))
                                      : "HF^" + std::to_string(q);
}

inline json dims_json(const GradedSpace& s) { return s.dims; }

inline std::string dims_text(const GradedSpace& s) {
  std::string out = "(";
  for (int q = 0; q < kDegrees; ++q) out += (q ? "," : "") + std::to_string(s[q]);
  return out + ")";
}

inline json report_header(const std::string& command, const Instance& inst, Convention view) {
  return {{"report_version", kReportVersion},
          {"command", command},
          {"instance", inst.name},
          {"convention", to_string(view)}};
}

inline json verdict_json(const SplittingVerdict& v) {
  return {{"lef_w", to_string(v.lef_w)},
          {"lef_w_hat", to_string(v.lef_w_hat)},
          {"lambda_fo", to_string(v.lambda_fo)},
          {"h_x", to_string(v.h_x)},
          {"h_y", to_string(v.h_y)},
          {"identities",
           {{"h_x_equals_h_y", v.identity_hx_equals_hy},
            {"splitting", v.identity_splitting},
            {"convention_cross_check", v.cross_check}}},
          {"pass", v.passes()}};
}

inline std::string splitting_rhs(Convention c) {
  return c == Convention::homology ? "1/2 Lef(W^)" : "-1/2 Lef(W^)";
}

inline void verdict_text(std::ostream& out, const Instance& inst, const SplittingVerdict& v) {
  out << "instance    " << inst.name << "\n"
      << "convention  " << to_string(v.convention) << "\n"
      << "case        " << to_string(inst.kind()) << "\n"
      << "Lef(W)      " << to_string(v.lef_w) << "\n"
      << "Lef(W^)     " << to_string(v.lef_w_hat) << "\n"
      << "lambda_FO   " << to_string(v.lambda_fo) << "\n"
      << "h(X)        " << to_string(v.h_x) << "\n"
      << "h(Y)        " << to_string(v.h_y) << "\n"
      << "h(X) = h(Y)                        " << verdict_word(v.identity_hx_equals_hy) << "\n"
      << "lambda_FO + h(X) = " << std::left << std::setw(16) << splitting_rhs(v.convention)
      << verdict_word(v.identity_splitting) << "\n"
      << "other grading agrees               " << verdict_word(v.cross_check) << "\n"
      << "verdict     " << verdict_word(v.passes()) << "\n";
}

inline json coefficients_json(const std::vector<Coefficient>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back({{"i", c.i}, {"n", c.n}, {"value", to_string(c.value)}});
  return arr;
}

inline json tower_json(const TowerLog& log, Convention view) {
  json steps = json::array();
  for (const auto& s : log.steps)
    steps.push_back({{"k", s.k},
                     {"dim", s.dim},
                     {"trace", to_string(s.trace)},
                     {"active", s.active},
                     {"step", to_string(s.step)}});
  return {{"degree", log.degree},
          {"label", degree_label(log.degree, view)},
          {"kind", log.quotient_tower ? "B" : "Z"},
          {"ambient_dim", log.ambient_dim},
          {"full_trace", to_string(log.full_trace)},
          {"reduced_trace", to_string(log.reduced_trace)},
          {"steps", std::move(steps)},
          {"final_dim", log.final_dim},
          {"step_sum", to_string(log.step_sum())},
          {"identities", log.identities}};
}

inline void tower_text(std::ostream& out, const TowerLog& log, Convention view) {
  const char* family = log.quotient_tower ? "delta'" : "delta";
  out << (log.quotient_tower ? "B-tower" : "Z-tower") << " in H^" << log.degree << " ("
      << degree_label(log.degree, view) << "), dim " << log.ambient_dim
      << ", Tr(W) = " << to_string(log.full_trace) << "\n";
  out << "  " << std::left << std::setw(4) << "k" << std::setw(6) << "dim" << std::setw(10)
      << "trace" << std::setw(8) << "active" << "step\n";
  for (const auto& s : log.steps)
    out << "  " << std::setw(4) << s.k << std::setw(6) << s.dim << std::setw(10)
        << to_string(s.trace) << std::setw(8) << (s.active ? "yes" : "no") << to_string(s.step)
        << "   (" << family << "_" << s.k << ")\n";
  if (log.quotient_tower)
    out << "  final dim B = " << log.final_dim;
  else
    out << "  final codim Z = " << (log.ambient_dim - log.final_dim);
  out << ", step sum = " << to_string(log.step_sum()) << "\n";
  for (const auto& id : log.identities) out << "  " << id << "\n";
}

inline void print_error(std::ostream& err, const Options& o, const Error& e) {
  if (o.format == Format::json)
    err << json{{"report_version", kReportVersion},
                {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}
               .dump(2)
        << "\n";
  else
    err << "error: " << e.what() << "\n";
}

}  // namespace detail

inline int cmd_validate(const std::string& path, const Options& o, std::ostream& out) {
  Instance inst = resolve(path);
  Analysis a = analyze(inst);
  Convention view = o.view.value_or(inst.convention);
  if (o.format == Format::json) {
    json j = detail::report_header("validate", inst, view);
    j["level"] = inst.chain_level() ? "chain-level" : "cohomology-level";
    j["case"] = to_string(inst.kind());
    j["hf_dims"] = detail::dims_json(in_convention(inst.hf, view));
    j["reduced_dims"] = detail::dims_json(in_convention(a.reduced.hf_red, view));
    j["relations"] = {{"a", detail::coefficients_json(a.relations.a)},
                      {"b", detail::coefficients_json(a.relations.b)},
                      {"integral", a.relations.integral},
                      {"unique", a.relations.unique()}};
    j["valid"] = true;
    out << j.dump(2) << "\n";
  } else {
    out << "instance   " << inst.name << "\n"
        << "level      " << (inst.chain_level() ? "chain-level" : "cohomology-level") << "\n"
        << "case       " << to_string(inst.kind()) << "\n"
        << "HF dims    " << detail::dims_text(in_convention(inst.hf, view)) << " ("
        << to_string(view) << ")\n"
        << "reduced    " << detail::dims_text(in_convention(a.reduced.hf_red, view)) << "\n";
    for (const auto& c : a.relations.a)
      out << "a_" << c.i << "," << c.n << " = " << to_string(c.value) << "\n";
    for (const auto& c : a.relations.b)
      out << "b_" << c.i << "," << c.n << " = " << to_string(c.value) << "\n";
    out << "coefficients " << (a.relations.integral ? "integral" : "not integral")
        << (a.relations.unique() ? "" : ", not unique (dependent lower family)") << "\n"
        << "valid\n";
  }
  return 0;
}

inline int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
  Instance inst = resolve(path);
  SplittingVerdict v = verify_splitting(inst, o.view);
  if (o.format == Format::json) {
    json j = detail::report_header("verify", inst, v.convention);
    j["case"] = to_string(inst.kind());
    j.update(detail::verdict_json(v));
    out << j.dump(2) << "\n";
  } else {
    detail::verdict_text(out, inst, v);
  }
  return v.passes() ? 0 : static_cast<int>(Exit::identity_failure);
}

inline int cmd_trace(const std::string& path, std::optional<int> tower, const Options& o,
                     std::ostream& out) {
  Instance inst = resolve(path);
  analyze(inst);
  Convention view = o.view.value_or(inst.convention);
  std::vector<TowerLog> logs;
  std::string note;
  if (tower) {
    auto pick = [&](const std::array<TowerLog, 2>& pair) {
      for (const auto& t : pair)
        if (t.degree == *tower) logs.push_back(t);
    };
    if (*tower == 0 || *tower == 4)
      pick(trace_case1(inst));
    else if (*tower == 1 || *tower == 5)
      pick(trace_case2(inst));
    else
      throw Error(ErrorKind::ParseError, "--tower must be 0, 4, 1 or 5");
  } else if (inst.kind() == SpecialCase::both_zero) {
    note = "both families vanish: reduced equals unreduced";
  } else {
    logs = trace_towers(inst);
  }
  if (o.format == Format::json) {
    json j = detail::report_header("trace", inst, view);
    j["case"] = to_string(inst.kind());
    json towers = json::array();
    for (const auto& t : logs) towers.push_back(detail::tower_json(t, view));
    j["towers"] = std::move(towers);
    if (!note.empty()) j["note"] = note;
    j["pass"] = true;
    out << j.dump(2) << "\n";
  } else {
    out << "instance " << inst.name << ", case " << to_string(inst.kind()) << "\n";
    if (!note.empty()) out << note << "\n";
    for (const auto& t : logs) detail::tower_text(out, t, view);
    out << "all steps checked\n";
  }
  return 0;
}

inline int cmd_generate(const GenConfig& cfg, const std::string& out_path, std::ostream& out) {
  Generated g = gen_instance(cfg);
  if (out_path.empty() || out_path == "-")
    out << export_document(g.instance).dump(2) << "\n";
  else
    save(g.instance, out_path);
  return 0;
}

inline std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "seed range must look like a..b: " + s); };
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      std::uint64_t v = std::stoull(s, &used);
      if (used != s.size()) throw bad();
      return {v, v};
    }
    std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    std::uint64_t a = std::stoull(lo, &used);
    if (used != lo.size()) throw bad();
    std::uint64_t b = std::stoull(hi, &used);
    if (used != hi.size() || b < a) throw bad();
    return {a, b};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

inline std::array<unsigned, 3> parse_case_mix(const std::string& s) {
  std::array<unsigned, 3> w{};
  std::stringstream ss(s);
  std::string part;
  std::size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i == 3) break;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      w[i++] = static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "case mix must be three weights, e.g. 1,1,1");
    }
  }
  if (i != 3 || std::getline(ss, part))
    throw Error(ErrorKind::ParseError, "case mix must be three weights, e.g. 1,1,1");
  return w;
}

inline int cmd_sweep(const SweepOptions& so, const Options& o, std::ostream& out) {
  so.config.validate();
  SweepSummary s = run_sweep(so);
  if (o.format == Format::json) {
    json failures = json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"seed", f.seed}, {"reason", f.failure}, {"document", f.document}});
    out << json{{"report_version", kReportVersion},
                {"command", "sweep"},
                {"seeds", {so.first, so.last}},
                {"total", s.total},
                {"passed", s.passed},
                {"per_case",
                 {{"delta", s.per_case[0]}, {"delta_prime", s.per_case[1]}, {"both_zero", s.per_case[2]}}},
                {"deep_towers", s.deep_towers},
                {"failures", std::move(failures)},
                {"pass", s.ok()}}
               .dump(2)
        << "\n";
  } else {
    out << "seeds " << so.first << ".." << so.last << (so.config.chain_level ? " (chain-level)" : "")
        << ": " << s.passed << "/" << s.total << " pass\n"
        << "  delta " << s.per_case[0] << ", delta_prime " << s.per_case[1] << ", both_zero "
        << s.per_case[2] << "\n"
        << "  instances with a tower of depth >= 2: " << s.deep_towers << "\n";
    for (const auto& f : s.failures)
      out << "FAIL seed " << f.seed << ": " << f.failure << "\n" << f.document.dump(2) << "\n";
    out << detail::verdict_word(s.ok()) << "\n";
  }
  return s.ok() ? 0 : static_cast<int>(Exit::identity_failure);
}

inline int cmd_catalog_list(const Options& o, std::ostream& out) {
  if (o.format == Format::json) {
    json arr = json::array();
    for (const auto& e : catalog())
      arr.push_back({{"name", e.name}, {"summary", e.summary}, {"expected", e.expected()}});
    out << json{{"report_version", kReportVersion}, {"command", "catalog"}, {"entries", arr}}.dump(2)
        << "\n";
    return 0;
  }
  for (const auto& e : catalog()) out << e.name << "\n  " << e.summary << "\n";
  return 0;
}

inline int cmd_catalog_show(const std::string& name, const Options& o, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(name);
  if (o.format == Format::json) {
    out << json{{"report_version", kReportVersion},
                {"command", "catalog"},
                {"name", e.name},
                {"summary", e.summary},
                {"expected", e.expected()},
                {"document", export_document(e.instance)}}
               .dump(2)
        << "\n";
    return 0;
  }
  const Instance& inst = e.instance;
  Convention view = o.view.value_or(inst.convention);
  out << e.name << "\n" << e.summary << "\n"
      << "convention " << to_string(view) << "\n"
      << "HF dims    " << detail::dims_text(in_convention(inst.hf, view)) << "\n"
      << "case       " << to_string(inst.kind()) << "\n"
      << "W (" << inst.cobordism.label << ")\n";
  GradedMap w = in_convention(inst.cobordism.w, view);
  for (int q = 0; q < kDegrees; ++q) {
    if (w.block(q).rows() == 0) continue;
    std::string label = view == Convention::homology ? "HF_" + std::to_string(q) : "HF^" + std::to_string(q);
    out << "  " << label << ": ";
    const Matrix& m = w.block(q);
    if (m == Matrix::identity(m.rows()))
      out << "+Id";
    else if (m == -Matrix::identity(m.rows()))
      out << "-Id";
    else
      out << hfsplit::detail::matrix_to_json(m).dump();
    out << " (dim " << m.rows() << ")\n";
  }
  out << "expected\n";
  for (const auto& [key, val] : e.expected().items())
    out << "  " << std::left << std::setw(18) << key << val.at("value").get<std::string>() << "  ["
        << val.at("provenance").get<std::string>() << "]\n";
  return 0;
}

inline int cmd_catalog_export(const std::string& name, const std::string& path, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(name);
  if (path.empty() || path == "-")
    out << export_document(e.instance).dump(2) << "\n";
  else
    save(e.instance, path);
  return 0;
}

// Everything at once: dimensions, subspaces, relations, verdict, refinement.
inline int cmd_report(const std::string& path, const Options& o, std::ostream& out) {
  Instance inst = resolve(path);
  Analysis a = analyze(inst);
  SplittingVerdict v = verify_splitting(inst, a, o.view);
  Convention view = v.convention;
  DegreeRefinement r = degree_refinement(inst, a);
  PeriodicityReport p = check_periodicity(inst.hf, a.reduced);
  json degrees = json::array();
  // Rows follow the report grading: row p is internal degree q.
  for (int p = 0; p < kDegrees; ++p) {
    const int q = view == Convention::homology ? regrade_degree(p) : p;
    degrees.push_back({{"cohomology_degree", q},
                       {"label", detail::degree_label(q, view)},
                       {"dim", inst.hf[q]},
                       {"dim_z", a.reduced.z[q].dim()},
                       {"dim_b", a.reduced.b[q].dim()},
                       {"dim_reduced", a.reduced.hf_red[q]},
                       {"trace_w", to_string(trace(inst.cobordism.w.block(q)))},
                       {"trace_w_hat", to_string(trace(a.w_hat.block(q)))},
                       {"trace_drop", to_string(r.trace_drop[q])},
                       {"codim_z_plus_dim_b", r.expected[q]}});
  }
  if (o.format == Format::json) {
    json j = detail::report_header("report", inst, view);
    j["level"] = inst.chain_level() ? "chain-level" : "cohomology-level";
    j["case"] = to_string(inst.kind());
    j["degrees"] = std::move(degrees);
    j["euler_hf"] = to_string(Rational(euler(in_convention(inst.hf, view))));
    j["euler_hf_reduced"] = to_string(Rational(euler(in_convention(a.reduced.hf_red, view))));
    j["relations"] = {{"a", detail::coefficients_json(a.relations.a)},
                      {"b", detail::coefficients_json(a.relations.b)},
                      {"integral", a.relations.integral},
                      {"unique", a.relations.unique()}};
    j["refinement_ok"] = r.ok;
    j["periodic"] = {{"hf", p.hf}, {"reduced", p.reduced}};
    j["verdict"] = detail::verdict_json(v);
    j["pass"] = v.passes() && r.ok;
    out << j.dump(2) << "\n";
  } else {
    out << "instance " << inst.name << " (" << (inst.chain_level() ? "chain-level" : "cohomology-level")
        << ", case " << to_string(inst.kind()) << ")\n";
    out << "  " << std::left << std::setw(7) << "degree" << std::setw(5) << "dim" << std::setw(5)
        << "Z" << std::setw(5) << "B" << std::setw(5) << "red" << std::setw(8) << "Tr W"
        << std::setw(8) << "Tr W^" << "codimZ+dimB\n";
    for (const auto& d : degrees)
      out << "  " << std::setw(7) << d["label"].get<std::string>() << std::setw(5) << d["dim"].get<std::size_t>()
          << std::setw(5) << d["dim_z"].get<std::size_t>() << std::setw(5) << d["dim_b"].get<std::size_t>()
          << std::setw(5) << d["dim_reduced"].get<std::size_t>() << std::setw(8)
          << d["trace_w"].get<std::string>() << std::setw(8) << d["trace_w_hat"].get<std::string>()
          << d["codim_z_plus_dim_b"].get<std::size_t>() << "\n";
    out << "chi(HF) = " << euler(in_convention(inst.hf, view))
        << ", chi(HF_red) = " << euler(in_convention(a.reduced.hf_red, view)) << "\n"
        << "4-periodic: HF " << (p.hf ? "yes" : "no") << ", reduced " << (p.reduced ? "yes" : "no")
        << "\n"
        << "degree-wise trace refinement " << detail::verdict_word(r.ok) << "\n";
    detail::verdict_text(out, inst, v);
  }
  return v.passes() && r.ok ? 0 : static_cast<int>(Exit::identity_failure);
}

// Arguments exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the splitting identities on mod-8 graded Floer data",
               "hfsplit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", convention;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--convention", convention, "Grading used in reports")
      ->check(CLI::IsMember({"homology", "cohomology"}));

  std::string path;
  auto* validate = app.add_subcommand("validate", "Load and validate an instance");
  validate->add_option("instance", path, "Path or catalog:NAME")->required();
  auto* verify = app.add_subcommand("verify", "Check both splitting identities");
  verify->add_option("instance", path, "Path or catalog:NAME")->required();
  auto* trace = app.add_subcommand("trace", "Replay the tower inductions");
  trace->add_option("instance", path, "Path or catalog:NAME")->required();
  std::optional<int> tower;
  trace->add_option("--tower", tower, "Single tower: cohomology degree 0, 4, 1 or 5");
  auto* report = app.add_subcommand("report", "Full per-degree report");
  report->add_option("instance", path, "Path or catalog:NAME")->required();

  GenConfig cfg;
  std::string case_mix = "1,1,1", out_path;
  auto add_gen_flags = [&](CLI::App* sub) {
    sub->add_option("--max-dim", cfg.max_dim, "Largest degree dimension");
    sub->add_option("--nmax", cfg.n_max, "Largest family index");
    sub->add_option("--case-mix", case_mix, "Weights for delta,delta_prime,both_zero");
    sub->add_flag("--periodic", cfg.periodic, "Four-periodic dimensions and families");
    sub->add_flag("--chain-level", cfg.chain_level, "Generate cochain-level data");
    sub->add_option("--entry-bound", cfg.entry_bound, "Bound on random entries");
  };
  auto* generate = app.add_subcommand("generate", "Emit a random valid instance document");
  generate->add_option("--seed", cfg.seed, "RNG seed");
  generate->add_option("--out", out_path, "Output path (default stdout)");
  add_gen_flags(generate);
  auto* sweep = app.add_subcommand("sweep", "Generate and verify a range of seeds");
  std::string seeds = "1..1000";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--seeds", seeds, "Seed range a..b");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_gen_flags(sweep);

  auto* cat = app.add_subcommand("catalog", "Built-in fixtures");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  std::string entry, export_path;
  auto* cat_show = cat->add_subcommand("show", "Show one entry");
  cat_show->add_option("name", entry)->required();
  auto* cat_export = cat->add_subcommand("export", "Write an entry's document");
  cat_export->add_option("name", entry)->required();
  cat_export->add_option("path", export_path, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return static_cast<int>(Exit::input);
  }

  Options o;
  o.format = format == "json" ? Format::json : Format::text;
  if (convention == "homology") o.view = Convention::homology;
  if (convention == "cohomology") o.view = Convention::cohomology;

  try {
    if (*validate) return cmd_validate(path, o, out);
    if (*verify) return cmd_verify(path, o, out);
    if (*trace) return cmd_trace(path, tower, o, out);
    if (*report) return cmd_report(path, o, out);
    if (*generate) {
      cfg.case_mix = parse_case_mix(case_mix);
      return cmd_generate(cfg, out_path, out);
    }
    if (*sweep) {
      SweepOptions so;
      std::tie(so.first, so.last) = parse_seed_range(seeds);
      cfg.case_mix = parse_case_mix(case_mix);
      so.config = cfg;
      so.jobs = jobs;
      return cmd_sweep(so, o, out);
    }
    if (*cat_list) return cmd_catalog_list(o, out);
    if (*cat_show) return cmd_catalog_show(entry, o, out);
    if (*cat_export) return cmd_catalog_export(entry, export_path, out);
  } catch (const Error& e) {
    detail::print_error(err, o, e);
    return exit_code(e);
  }
  return static_cast<int>(Exit::input);
}

}  // namespace hfsplit::cli
