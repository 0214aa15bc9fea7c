// coalgraph: command-line front end for the path-coalgebra library.
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification
// failure. All JSON output has sorted keys and a trailing newline, so equal
// inputs produce byte-identical files.

#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coalg/caps.hpp"
#include "coalg/error.hpp"
#include "coalg/graph_aut.hpp"
#include "coalg/graph_coalgebra.hpp"
#include "coalg/json_io.hpp"
#include "coalg/realization.hpp"

namespace {

using namespace coalg;

constexpr long long kTripleListLimit = 4096;

struct Options {
  std::string input;
  std::string field;
  std::string out;
  std::string format = "json";
  std::string mode = "both";
  long long p = 0;
  long long n = 1;
  bool undirected = false;
  Caps caps;
};

void add_cap_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--cap-group-close", opt.caps.group_close, "group closure size cap");
  cmd->add_option("--cap-subgroup-enum", opt.caps.subgroup_enum, "subgroup enumeration cap");
  cmd->add_option("--cap-grouplike-enum", opt.caps.grouplike_enum, "grouplike scan cap");
  cmd->add_option("--cap-brute-oracle", opt.caps.brute_oracle, "matrix oracle cap");
  cmd->add_option("--cap-graph-search", opt.caps.graph_search, "automorphism search node cap");
}

void add_format_flag(CLI::App* cmd, Options& opt, std::vector<std::string> values) {
  std::string desc = "output format (";
  for (size_t i = 0; i < values.size(); ++i) desc += (i ? "|" : "") + values[i];
  cmd->add_option("--format", opt.format, desc + ")")->check(CLI::IsMember(values));
}

void emit(const Options& opt, const json& j) {
  std::string text = dump_json(j);
  if (opt.out.empty())
    std::cout << text;
  else
    write_text_file(opt.out, text);
}

// Builds the working coalgebra from either a digraph file (needs --field)
// or a coalgebra file written by `coalg build`.
GraphCoalgebra load_graph_coalgebra(const Options& opt) {
  json j = read_json_file(opt.input);
  if (j.is_object() && j.contains("comult")) {
    Coalgebra c = coalgebra_from_json(j);
    if (!opt.field.empty() && !(Field::parse(opt.field) == c.field))
      fail(Errc::field_mismatch, "--field " + opt.field + " conflicts with the file's field " +
                                     c.field.label());
    Digraph g = digraph_from_coalgebra(c);
    return build_path_coalgebra(g, c.field);
  }
  if (opt.field.empty())
    fail(Errc::parse_error, "graph input needs --field p^n");
  return build_path_coalgebra(digraph_from_json(j), Field::parse(opt.field));
}

std::string format_vector(const Coalgebra& c, const std::vector<FieldElem>& v) {
  std::string out;
  for (int i = 0; i < c.dim(); ++i) {
    const FieldElem& a = v[static_cast<size_t>(i)];
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!(a == c.field.one())) out += c.field.format(a) + "*";
    out += c.basis[static_cast<size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

json matrix_to_json(const Field& f, const LinearMap& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(field_elem_to_json(m.get(f, r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Prints the report and turns any FAIL into exit code 4. SKIPPED checks
// are surfaced on stderr so a clean exit is never mistaken for full
// verification.
int finish_report(const Options& opt, const Report& report) {
  if (opt.format == "text")
    std::cout << report.to_text();
  else
    emit(opt, report_to_json(report));
  if (report.any_skipped())
    std::cerr << "note: some checks were skipped; see the report\n";
  return report.any_failed() ? exit_category(Errc::verification_failed) : 0;
}

int cmd_coalg_build(Options& opt) {
  if (opt.field.empty()) fail(Errc::parse_error, "coalg build needs --field p^n");
  Digraph g = digraph_from_json(read_json_file(opt.input));
  if (opt.format == "dot") {
    std::cout << to_dot(g);
    return 0;
  }
  GraphCoalgebra gc = build_path_coalgebra(g, Field::parse(opt.field));
  std::cerr << "dim " << gc.coalgebra.dim() << " = " << g.vertex_count() << " vertices + "
            << g.edge_count() << " edges\n";
  if (opt.format == "text") {
    for (int i = 0; i < gc.coalgebra.dim(); ++i) {
      const auto& terms = gc.coalgebra.comult[static_cast<size_t>(i)];
      std::cout << gc.coalgebra.basis[static_cast<size_t>(i)] << ": eps="
                << gc.coalgebra.field.format(gc.coalgebra.counit[static_cast<size_t>(i)])
                << " delta=";
      for (size_t t = 0; t < terms.size(); ++t) {
        if (t) std::cout << " + ";
        const CoTerm& term = terms[t];
        if (!(term.coeff == gc.coalgebra.field.one()))
          std::cout << gc.coalgebra.field.format(term.coeff) << "*";
        std::cout << gc.coalgebra.basis[static_cast<size_t>(term.left)] << "(x)"
                  << gc.coalgebra.basis[static_cast<size_t>(term.right)];
      }
      std::cout << "\n";
    }
    return 0;
  }
  emit(opt, coalgebra_to_json(gc.coalgebra));
  return 0;
}

int cmd_coalg_verify(Options& opt) {
  Coalgebra c = coalgebra_from_json(read_json_file(opt.input));
  AxiomReport r = verify_axioms(c);
  if (opt.format == "text") {
    std::cout << "coassoc: " << (r.coassoc ? "PASS" : "FAIL") << "\n"
              << "counit: " << (r.counit ? "PASS" : "FAIL") << "\n";
    for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
  } else {
    emit(opt, json{{"coassoc", r.coassoc}, {"counit", r.counit}, {"failures", r.failures},
                   {"ok", r.ok()}});
  }
  return r.ok() ? 0 : exit_category(Errc::verification_failed);
}

int cmd_coalg_grouplikes(Options& opt) {
  GraphCoalgebra gc = load_graph_coalgebra(opt);
  auto gl = grouplikes(gc.coalgebra, opt.caps.grouplike_enum);
  if (opt.format == "text") {
    std::cout << gl.size() << " grouplikes\n";
    for (const auto& v : gl) std::cout << "  " << format_vector(gc.coalgebra, v) << "\n";
    return 0;
  }
  json vectors = json::array();
  for (const auto& v : gl) {
    json vec = json::array();
    for (const FieldElem& a : v) vec.push_back(field_elem_to_json(a));
    vectors.push_back(std::move(vec));
  }
  emit(opt, json{{"count", gl.size()}, {"grouplikes", vectors}});
  return 0;
}

int cmd_coalg_aut(Options& opt) {
  GraphCoalgebra gc = load_graph_coalgebra(opt);
  const Field& f = gc.coalgebra.field;
  std::vector<Perm> graph_auts = automorphisms(gc.graph.system(), opt.caps);
  long long count = structured_count(gc, static_cast<long long>(graph_auts.size()), 1LL << 62);
  bool clamped = count > (1LL << 62);

  json out;
  out["field"] = f.label();
  out["mode"] = opt.mode;
  out["graph_aut_count"] = graph_auts.size();
  out["count"] = clamped ? json(nullptr) : json(count);

  bool agree = true;
  if (opt.mode == "structured" || opt.mode == "both") {
    if (!clamped && count <= kTripleListLimit) {
      json triples = json::array();
      for (const StructuredAut& a : enumerate_structured(gc, graph_auts, opt.caps.brute_oracle))
        triples.push_back(structured_to_json(gc, a));
      out["triples"] = std::move(triples);
    }
  }
  if (opt.mode == "brute" || opt.mode == "both") {
    auto brute = automorphisms_brute(gc.coalgebra, opt.caps.brute_oracle);
    out["brute_count"] = brute.size();
    if (opt.mode == "brute") {
      json mats = json::array();
      for (const LinearMap& m : brute) mats.push_back(matrix_to_json(f, m));
      out["matrices"] = std::move(mats);
    } else {
      std::set<LinearMap> brute_set(brute.begin(), brute.end());
      std::set<LinearMap> structured_set;
      for (const StructuredAut& a : enumerate_structured(gc, graph_auts, opt.caps.brute_oracle))
        structured_set.insert(structured_to_matrix(gc, a));
      agree = brute_set == structured_set &&
              static_cast<long long>(structured_set.size()) == count;
      out["agree"] = agree;
    }
  }

  if (opt.format == "text") {
    std::cout << "graph automorphisms: " << graph_auts.size() << "\n";
    std::cout << "kernel order: (" << f.order() << "*" << (f.order() - 1) << ")^"
              << gc.graph.edge_count() << "\n";
    if (clamped)
      std::cout << "total: exceeds 2^62\n";
    else
      std::cout << "total: " << count << "\n";
    if (out.contains("brute_count"))
      std::cout << "brute count: " << out["brute_count"] << (agree ? " (sets agree)" : " (MISMATCH)")
                << "\n";
  } else {
    emit(opt, out);
  }
  return agree ? 0 : exit_category(Errc::verification_failed);
}

int cmd_graph_aut(Options& opt) {
  json j = read_json_file(opt.input);
  BinarySystem sys;
  if (j.is_object() && j.contains("labels")) {
    sys = system_from_json(j);
  } else if (opt.undirected) {
    sys = simple_from_json(j).as_system();
  } else {
    sys = digraph_from_json(j).system();
  }
  if (opt.format == "dot") {
    std::cout << to_dot(sys);
    return 0;
  }
  std::vector<Perm> auts = automorphisms(sys, opt.caps);
  if (opt.format == "text") {
    std::cout << auts.size() << " automorphisms\n";
    for (const Perm& p : auts) std::cout << "  " << cycle_notation(p) << "\n";
    return 0;
  }
  json list = json::array();
  for (const Perm& p : auts) list.push_back(p.img);
  emit(opt, json{{"count", auts.size()}, {"automorphisms", list}});
  return 0;
}

int cmd_realize(Options& opt) {
  if (opt.field.empty()) fail(Errc::parse_error, "realize needs --field p^n");
  if (opt.out.empty()) fail(Errc::parse_error, "realize needs --out <directory>");
  PermRep rep = permrep_from_json(read_json_file(opt.input), opt.caps.group_close);
  RealizationBundle bundle = realize_representation(rep, Field::parse(opt.field), opt.caps);

  std::filesystem::create_directories(opt.out);
  auto path = [&](const char* name) { return (std::filesystem::path(opt.out) / name).string(); };
  write_text_file(path("system.json"), dump_json(system_to_json(bundle.system)));
  json simple = simple_to_json(bundle.simple);
  json provenance = json::object();
  for (const auto& [name, origin] : bundle.provenance)
    provenance[name] = json{{"label", origin.label}, {"from", origin.from}, {"to", origin.to},
                            {"role", origin.role}};
  simple["provenance"] = std::move(provenance);
  write_text_file(path("simple.json"), dump_json(simple));
  write_text_file(path("simple.dot"), to_dot(bundle.simple));
  write_text_file(path("coalgebra.json"), dump_json(coalgebra_to_json(bundle.coalgebra.coalgebra)));
  write_text_file(path("report.json"), dump_json(report_to_json(bundle.report)));

  Options stdout_opt = opt;
  stdout_opt.out.clear();
  return finish_report(stdout_opt, bundle.report);
}

int cmd_group_class(Options& opt) {
  if (opt.p <= 0) fail(Errc::parse_error, "group class needs --p <prime>");
  FiniteGroup g = group_from_json(read_json_file(opt.input), opt.caps.group_close);
  ClassVerdict verdict = in_class_g(g, opt.p, opt.n, opt.caps.subgroup_enum);
  json witness = nullptr;
  if (verdict.witness) {
    json elements = json::array();
    for (int i : *verdict.witness) elements.push_back(g.element(i).img);
    witness = json{{"order", verdict.witness->size()},
                   {"exponent", exponent(g, *verdict.witness)}, {"elements", elements}};
  }
  if (opt.format == "text") {
    if (verdict.in_class)
      std::cout << "IN\n";
    else
      std::cout << "NOT-IN (witness: normal subgroup of order " << verdict.witness->size()
                << ", exponent " << exponent(g, *verdict.witness) << ")\n";
  } else {
    emit(opt, json{{"in_class", verdict.in_class}, {"p", opt.p}, {"n", opt.n},
                   {"witness", witness}});
  }
  return 0;
}

int cmd_sequence_check(Options& opt) {
  GraphCoalgebra gc = load_graph_coalgebra(opt);
  return finish_report(opt, verify_exact_sequence(gc, opt.caps));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path coalgebras of digraphs and their automorphism groups"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* coalg_cmd = app.add_subcommand("coalg", "coalgebra commands");
  coalg_cmd->require_subcommand(1);
  CLI::App* build = coalg_cmd->add_subcommand("build", "digraph -> path coalgebra");
  CLI::App* verify = coalg_cmd->add_subcommand("verify", "check the coalgebra axioms");
  CLI::App* gl = coalg_cmd->add_subcommand("grouplikes", "enumerate grouplike elements");
  CLI::App* caut = coalg_cmd->add_subcommand("aut", "automorphism group of a path coalgebra");

  CLI::App* graph_cmd = app.add_subcommand("graph", "graph commands");
  graph_cmd->require_subcommand(1);
  CLI::App* gaut = graph_cmd->add_subcommand("aut", "automorphisms of a digraph or system");

  CLI::App* realize = app.add_subcommand("realize", "realize a permutation representation");
  CLI::App* group_cmd = app.add_subcommand("group", "group commands");
  group_cmd->require_subcommand(1);
  CLI::App* gclass = group_cmd->add_subcommand("class", "membership in the admissible family");
  CLI::App* seq_cmd = app.add_subcommand("sequence", "automorphism group structure");
  seq_cmd->require_subcommand(1);
  CLI::App* seqcheck = seq_cmd->add_subcommand("check", "verify the split extension");

  for (CLI::App* cmd : {build, verify, gl, caut, gaut, realize, gclass, seqcheck}) {
    cmd->add_option("input", opt.input, "input JSON file")->required();
    add_cap_flags(cmd, opt);
  }
  for (CLI::App* cmd : {build, gl, caut, realize, seqcheck})
    cmd->add_option("--field", opt.field, "field as p^n, e.g. 2^1");
  for (CLI::App* cmd : {build, verify, gl, caut, seqcheck})
    cmd->add_option("--out", opt.out, "write JSON here instead of stdout");
  add_format_flag(build, opt, {"json", "text", "dot"});
  add_format_flag(gaut, opt, {"json", "text", "dot"});
  for (CLI::App* cmd : {verify, gl, caut, realize, gclass, seqcheck})
    add_format_flag(cmd, opt, {"json", "text"});
  caut->add_option("--mode", opt.mode, "structured|brute|both")
      ->check(CLI::IsMember({"structured", "brute", "both"}));
  gaut->add_flag("--undirected", opt.undirected, "treat an edge list as undirected");
  realize->add_option("--out", opt.out, "bundle output directory")->required();
  gclass->add_option("--p", opt.p, "field characteristic")->required();
  gclass->add_option("--n", opt.n, "field degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_coalg_build(opt);
    if (verify->parsed()) return cmd_coalg_verify(opt);
    if (gl->parsed()) return cmd_coalg_grouplikes(opt);
    if (caut->parsed()) return cmd_coalg_aut(opt);
    if (gaut->parsed()) return cmd_graph_aut(opt);
    if (realize->parsed()) return cmd_realize(opt);
    if (gclass->parsed()) return cmd_group_class(opt);
    if (seqcheck->parsed()) return cmd_sequence_check(opt);
  } catch (const coalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return coalg::exit_category(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
