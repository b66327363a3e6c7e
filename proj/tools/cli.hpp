#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success/valid, 1 invalid cut, 2 validation, 3 I/O,
// 4 incomplete search.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condtorus/condtorus.hpp"

namespace condtorus::cli {

enum ExitCode : int { kOk = 0, kInvalidCut = 1, kValidation = 2, kIo = 3, kIncomplete = 4 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline TorusSpec parse_ks(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ValidationError("--ks: '" + part + "' is not an integer");
    }
    if (used != part.size()) throw ValidationError("--ks: '" + part + "' is not an integer");
    ks.push_back(k);
  }
  return TorusSpec(std::move(ks));
}

inline void write_sink(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw IoError("cannot open " + *path + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + *path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline int cmd_formula(const TorusSpec& spec, int h, std::ostream& out) {
  const auto a = a_h_r(h, spec);
  io::Json j;
  j["a_h_r"] = a;
  if (h <= 2 * spec.rank() - 2) {
    const auto v = theorem_value(h, spec);
    j["kappa_h"] = v;
    j["lambda_h"] = v;
  } else {
    j["kappa_h"] = nullptr;
    j["lambda_h"] = nullptr;
  }
  out << j.dump() << "\n";
  return kOk;
}

inline int cmd_cut(const TorusSpec& spec, int h, const std::string& kind, const std::optional<std::string>& path,
                   std::ostream& out) {
  const auto g = build_torus(spec);
  std::string text;
  std::size_t size = 0;
  if (kind == "vertex") {
    const auto cut = optimal_vertex_cut(g, h);
    size = cut.size();
    text = io::vertex_cut_json(g, h, cut);
  } else {
    const auto cut = optimal_edge_cut(g, h);
    size = cut.size();
    text = io::edge_cut_json(g, h, cut);
  }
  if (path) {
    write_sink(path, text + "\n", out);
    io::Json j;
    j["kind"] = kind;
    j["h"] = h;
    j["size"] = size;
    out << j.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return kOk;
}

inline int cmd_verify(const TorusSpec& spec, std::optional<int> h, const std::string& path, std::ostream& out) {
  const auto g = build_torus(spec);
  const auto parsed = io::parse_cut(g, read_file(path));
  const int level = h.value_or(parsed.h);
  const auto cert = parsed.is_vertex ? verify_vertex_cut(g, parsed.vertices, level)
                                     : verify_edge_cut(g, parsed.edges, level);
  out << io::certificate_json(cert) << "\n";
  return cert.valid ? kOk : kInvalidCut;
}

inline int cmd_oracle(const TorusSpec& spec, int h, const std::string& kind, const OracleOptions& opt,
                      std::ostream& out) {
  const auto g = build_torus(spec);
  OracleResult res;
  if (kind == "kappa") res = oracle_kappa(g, h, opt);
  else if (kind == "lambda") res = oracle_lambda(g, h, opt);
  else res = oracle_min_subgraph(g, h, opt);
  out << io::oracle_json(g, res) << "\n";
  return res.complete ? kOk : kIncomplete;
}

inline int cmd_export(const TorusSpec& spec, const std::string& format, std::optional<int> whr,
                      const std::optional<std::string>& path, std::ostream& out) {
  const auto g = build_torus(spec);
  std::optional<VertexSet> subset;
  if (whr) subset = construct_W(g, *whr).vertex_set;
  if (format == "json") {
    if (subset) throw ValidationError("--whr is only supported with --format dot");
    write_sink(path, io::graph_descriptor(g) + "\n", out);
  } else {
    write_sink(path, io::to_dot(g, subset), out);
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional connectivity of multidimensional tori", "condtorus"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);

  std::string ks;
  int h = 0;
  std::optional<int> h_opt;
  std::string kind;
  std::optional<std::string> out_path;
  std::string cut_path;
  std::string format = "dot";
  std::optional<int> whr;
  unsigned workers = 1;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  bool bnb = false;

  auto* formula = app.add_subcommand("formula", "Closed-form a_h^r and conditional connectivities");
  formula->add_option("--ks", ks, "Comma-separated cycle lengths")->required();
  formula->add_option("--h", h, "Degree floor h")->required();

  auto* cut = app.add_subcommand("cut", "Write the optimal conditional cut as JSON");
  cut->add_option("--ks", ks, "Comma-separated cycle lengths")->required();
  cut->add_option("--h", h, "Degree floor h")->required();
  cut->add_option("--kind", kind, "vertex or edge")->required()->check(CLI::IsMember({"vertex", "edge"}));
  cut->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a cut file and print its certificate");
  verify->add_option("--ks", ks, "Comma-separated cycle lengths")->required();
  verify->add_option("--h", h_opt, "Degree floor h (default: the file's h)");
  verify->add_option("--cut", cut_path, "Cut JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact value by exhaustive search");
  oracle->add_option("--ks", ks, "Comma-separated cycle lengths")->required();
  oracle->add_option("--h", h, "Degree floor h")->required();
  oracle->add_option("--kind", kind, "kappa, lambda or minsub")
      ->required()
      ->check(CLI::IsMember({"kappa", "lambda", "minsub"}));
  oracle->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  oracle->add_option("--budget", budget, "Candidate limit");
  oracle->add_flag("--branch-and-bound", bnb, "Pruned search for tori up to 40 vertices");

  auto* exp = app.add_subcommand("export", "Emit the torus as DOT or a JSON descriptor");
  exp->add_option("--ks", ks, "Comma-separated cycle lengths")->required();
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--whr", whr, "Restrict DOT output to the induced W_h^r for this h");
  exp->add_option("--out", out_path, "Output file (default stdout)");

  for (auto* sub : {formula, cut, verify, oracle, exp}) sub->set_help_flag("--help", "Print help and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "condtorus: " << e.what() << "\n";
    return kValidation;
  }

  try {
    const TorusSpec spec = parse_ks(ks);
    if (formula->parsed()) return cmd_formula(spec, h, out);
    if (cut->parsed()) return cmd_cut(spec, h, kind, out_path, out);
    if (verify->parsed()) return cmd_verify(spec, h_opt, cut_path, out);
    if (oracle->parsed()) {
      OracleOptions opt;
      opt.workers = workers;
      opt.budget = budget;
      opt.branch_and_bound = bnb;
      return cmd_oracle(spec, h, kind, opt, out);
    }
    return cmd_export(spec, format, whr, out_path, out);
  } catch (const IoError& e) {
    err << "condtorus: " << e.what() << "\n";
    return kIo;
  } catch (const std::logic_error& e) {
    // ValidationError, FormatError, InfeasibleError, PreconditionError, out_of_range
    err << "condtorus: " << e.what() << "\n";
    return kValidation;
  } catch (const OverflowError& e) {
    err << "condtorus: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace condtorus::cli
