#include "coalg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "coalg/graph_coalgebra.hpp"

namespace coalg {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::parse_error, std::string(what) + " is missing key \"" + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const json& item : j) {
    if (!item.is_string())
      fail(Errc::parse_error, std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) fail(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      fail(Errc::parse_error, std::string(what) + " entries must be [\"u\",\"v\"] pairs");
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

Perm perm_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<int> img;
  for (const json& item : j) {
    if (!item.is_number_integer())
      fail(Errc::parse_error, std::string(what) + " entries must be integers");
    img.push_back(item.get<int>());
  }
  return make_perm(std::move(img));
}

}  // namespace

json field_elem_to_json(const FieldElem& a) { return json(a.c); }

FieldElem field_elem_from_json(const Field& f, const json& j) {
  FieldElem a;
  if (j.is_number_integer()) {
    // bare integers are accepted as a convenience for prime fields
    return f.from_int(j.get<long long>());
  }
  if (!j.is_array()) fail(Errc::parse_error, "field element must be a coefficient array");
  for (const json& item : j) {
    if (!item.is_number_integer())
      fail(Errc::parse_error, "field element coefficients must be integers");
    a.c.push_back(item.get<int>());
  }
  if (static_cast<long long>(a.c.size()) != f.n())
    fail(Errc::parse_error, "field element has " + std::to_string(a.c.size()) +
                                " coefficients, expected " + std::to_string(f.n()));
  for (int& v : a.c) {
    v %= static_cast<int>(f.p());
    if (v < 0) v += static_cast<int>(f.p());
  }
  return a;
}

json digraph_to_json(const Digraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back({g.vertex_names()[static_cast<size_t>(u)],
                     g.vertex_names()[static_cast<size_t>(v)]});
  return json{{"vertices", g.vertex_names()}, {"edges", edges}};
}

Digraph digraph_from_json(const json& j) {
  return Digraph::make(string_list(require(j, "vertices", "digraph"), "vertices"),
                       pair_list(require(j, "edges", "digraph"), "edges"));
}

json system_to_json(const BinarySystem& s) {
  json relations = json::object();
  for (int l = 0; l < s.label_count(); ++l) {
    json pairs = json::array();
    for (const auto& [u, v] : s.pairs(l))
      pairs.push_back({s.vertex_name(u), s.vertex_name(v)});
    relations[s.label_names()[static_cast<size_t>(l)]] = std::move(pairs);
  }
  return json{{"vertices", s.vertex_names()}, {"labels", s.label_names()},
              {"relations", relations}};
}

BinarySystem system_from_json(const json& j) {
  auto vertices = string_list(require(j, "vertices", "system"), "vertices");
  auto labels = string_list(require(j, "labels", "system"), "labels");
  const json& relations = require(j, "relations", "system");
  if (!relations.is_object()) fail(Errc::parse_error, "relations must be an object");
  BinarySystem s(vertices, labels);
  for (const auto& [lname, pairs] : relations.items()) {
    int l = s.find_label(lname);
    if (l < 0) fail(Errc::parse_error, "relations references unknown label \"" + lname + "\"");
    for (const auto& [un, vn] : pair_list(pairs, "relation pairs"))
      s.add_pair(l, s.vertex_index(un), s.vertex_index(vn));
  }
  return s;
}

json simple_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back({g.vertex_names()[static_cast<size_t>(u)],
                     g.vertex_names()[static_cast<size_t>(v)]});
  return json{{"vertices", g.vertex_names()}, {"edges", edges}};
}

SimpleGraph simple_from_json(const json& j) {
  return SimpleGraph::make(string_list(require(j, "vertices", "graph"), "vertices"),
                           pair_list(require(j, "edges", "graph"), "edges"));
}

json coalgebra_to_json(const Coalgebra& c) {
  json comult = json::object();
  json counit = json::object();
  for (int i = 0; i < c.dim(); ++i) {
    json terms = json::array();
    for (const CoTerm& t : c.comult[static_cast<size_t>(i)])
      terms.push_back({c.basis[static_cast<size_t>(t.left)],
                       c.basis[static_cast<size_t>(t.right)], field_elem_to_json(t.coeff)});
    comult[c.basis[static_cast<size_t>(i)]] = std::move(terms);
    counit[c.basis[static_cast<size_t>(i)]] =
        field_elem_to_json(c.counit[static_cast<size_t>(i)]);
  }
  return json{{"field", c.field.label()}, {"basis", c.basis}, {"comult", comult},
              {"counit", counit}};
}

Coalgebra coalgebra_from_json(const json& j, long long field_cap) {
  const json& field_j = require(j, "field", "coalgebra");
  if (!field_j.is_string()) fail(Errc::parse_error, "field must be a string like \"2^1\"");
  Coalgebra c;
  c.field = Field::parse(field_j.get<std::string>(), field_cap);
  c.basis = string_list(require(j, "basis", "coalgebra"), "basis");

  std::map<std::string, int> index;
  for (int i = 0; i < c.dim(); ++i) {
    if (!index.emplace(c.basis[static_cast<size_t>(i)], i).second)
      fail(Errc::parse_error, "duplicate basis name \"" + c.basis[static_cast<size_t>(i)] + "\"");
  }
  auto look = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      fail(Errc::parse_error, "comultiplication references unknown basis name \"" + name + "\"");
    return it->second;
  };

  const json& comult = require(j, "comult", "coalgebra");
  const json& counit = require(j, "counit", "coalgebra");
  if (!comult.is_object() || !counit.is_object())
    fail(Errc::parse_error, "comult and counit must be objects keyed by basis name");
  c.comult.resize(static_cast<size_t>(c.dim()));
  c.counit.assign(static_cast<size_t>(c.dim()), c.field.zero());
  for (const auto& [name, terms] : comult.items()) {
    int i = look(name);
    if (!terms.is_array()) fail(Errc::parse_error, "comult entries must be arrays of triples");
    for (const json& t : terms) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
        fail(Errc::parse_error, "comult terms must be [\"y\",\"z\",coeff] triples");
      c.comult[static_cast<size_t>(i)].push_back(
          {look(t[0].get<std::string>()), look(t[1].get<std::string>()),
           field_elem_from_json(c.field, t[2])});
    }
  }
  for (const auto& [name, coeff] : counit.items())
    c.counit[static_cast<size_t>(look(name))] = field_elem_from_json(c.field, coeff);
  c.normalize();
  c.check_shape();
  return c;
}

json group_to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const Perm& s : g.generators()) gens.push_back(s.img);
  return json{{"degree", g.degree()}, {"generators", gens}};
}

FiniteGroup group_from_json(const json& j, long long cap) {
  const json& degree_j = require(j, "degree", "group");
  if (!degree_j.is_number_integer() || degree_j.get<long long>() < 0)
    fail(Errc::parse_error, "degree must be a nonnegative integer");
  int degree = degree_j.get<int>();
  const json& gens_j = require(j, "generators", "group");
  if (!gens_j.is_array()) fail(Errc::parse_error, "generators must be an array");
  std::vector<Perm> gens;
  for (const json& g : gens_j) gens.push_back(perm_from_json(g, "generator"));
  for (const Perm& g : gens)
    if (g.degree() != degree)
      fail(Errc::degree_mismatch, "generator degree " + std::to_string(g.degree()) +
                                      " does not match group degree " + std::to_string(degree));
  return FiniteGroup::close(degree, gens, cap);
}

json permrep_to_json(const PermRep& rep) {
  json images = json::array();
  for (const Perm& s : rep.gen_images) images.push_back(s.img);
  return json{{"group", group_to_json(rep.group)}, {"v_size", rep.v_size},
              {"gen_images", images}};
}

PermRep permrep_from_json(const json& j, long long cap) {
  const json& group_j = require(j, "group", "representation");
  const json& degree_j = require(group_j, "degree", "group");
  const json& gens_j = require(group_j, "generators", "group");
  if (!degree_j.is_number_integer()) fail(Errc::parse_error, "degree must be an integer");
  if (!gens_j.is_array()) fail(Errc::parse_error, "generators must be an array");
  std::vector<Perm> gens;
  for (const json& g : gens_j) gens.push_back(perm_from_json(g, "generator"));

  const json& vsize_j = require(j, "v_size", "representation");
  if (!vsize_j.is_number_integer() || vsize_j.get<long long>() < 0)
    fail(Errc::parse_error, "v_size must be a nonnegative integer");
  const json& images_j = require(j, "gen_images", "representation");
  if (!images_j.is_array()) fail(Errc::parse_error, "gen_images must be an array");
  std::vector<Perm> images;
  for (const json& g : images_j) images.push_back(perm_from_json(g, "generator image"));

  return PermRep::make(degree_j.get<int>(), gens, vsize_j.get<int>(), images, cap);
}

json structured_to_json(const GraphCoalgebra& gc, const StructuredAut& f) {
  json lambda = json::object();
  json mu = json::object();
  for (int e = 0; e < gc.graph.edge_count(); ++e) {
    lambda[gc.graph.edge_name(e)] = field_elem_to_json(f.lambda[static_cast<size_t>(e)]);
    mu[gc.graph.edge_name(e)] = field_elem_to_json(f.mu[static_cast<size_t>(e)]);
  }
  return json{{"sigma", f.sigma.img}, {"lambda", lambda}, {"mu", mu}};
}

StructuredAut structured_from_json(const GraphCoalgebra& gc, const json& j) {
  StructuredAut f;
  f.sigma = perm_from_json(require(j, "sigma", "automorphism"), "sigma");
  const json& lambda = require(j, "lambda", "automorphism");
  const json& mu = require(j, "mu", "automorphism");
  if (!lambda.is_object() || !mu.is_object())
    fail(Errc::parse_error, "lambda and mu must be objects keyed by edge name");
  const Field& fld = gc.coalgebra.field;
  f.lambda.assign(static_cast<size_t>(gc.graph.edge_count()), fld.zero());
  f.mu.assign(static_cast<size_t>(gc.graph.edge_count()), fld.one());
  for (int e = 0; e < gc.graph.edge_count(); ++e) {
    const std::string name = gc.graph.edge_name(e);
    if (!lambda.contains(name) || !mu.contains(name))
      fail(Errc::parse_error, "automorphism is missing edge \"" + name + "\"");
    f.lambda[static_cast<size_t>(e)] = field_elem_from_json(fld, lambda.at(name));
    f.mu[static_cast<size_t>(e)] = field_elem_from_json(fld, mu.at(name));
  }
  validate_structured(gc, f);
  return f;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    const char* status = c.status == CheckStatus::pass     ? "pass"
                         : c.status == CheckStatus::fail   ? "fail"
                                                           : "skipped";
    checks.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  return json{{"checks", checks}, {"ok", !r.any_failed()}};
}

Digraph digraph_from_coalgebra(const Coalgebra& c) {
  const Field& f = c.field;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  int nv = 0;
  while (nv < c.dim()) {
    const auto& terms = c.comult[static_cast<size_t>(nv)];
    bool vertex_like = terms.size() == 1 && terms[0].left == nv && terms[0].right == nv &&
                       terms[0].coeff == f.one() && c.counit[static_cast<size_t>(nv)] == f.one();
    if (!vertex_like) break;
    vertices.push_back(c.basis[static_cast<size_t>(nv)]);
    ++nv;
  }
  for (int i = nv; i < c.dim(); ++i) {
    const auto& terms = c.comult[static_cast<size_t>(i)];
    int v1 = -1, v2 = -1;
    if (terms.size() == 2 && c.counit[static_cast<size_t>(i)].is_zero()) {
      for (const CoTerm& t : terms) {
        if (!(t.coeff == f.one())) break;
        if (t.right == i && t.left < nv) v1 = t.left;
        if (t.left == i && t.right < nv) v2 = t.right;
      }
    }
    if (v1 < 0 || v2 < 0)
      fail(Errc::parse_error, "basis element \"" + c.basis[static_cast<size_t>(i)] +
                                  "\" is neither a vertex nor an edge of a graph coalgebra");
    edges.emplace_back(vertices[static_cast<size_t>(v1)], vertices[static_cast<size_t>(v2)]);
  }
  Digraph g = Digraph::make(std::move(vertices), edges);
  GraphCoalgebra rebuilt = build_path_coalgebra(g, f);
  if (!(rebuilt.coalgebra == c))
    fail(Errc::parse_error,
         "coalgebra basis layout does not match the path coalgebra of its graph");
  return g;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, what + " is not valid JSON");
  return j;
}

json read_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path), path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write \"" + path + "\"");
  out << content;
}

}  // namespace coalg
