#include "coalg/binary_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coalg {

BinarySystem::BinarySystem(std::vector<std::string> vertices, std::vector<std::string> labels)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  for (int i = 0; i < vertex_count(); ++i) {
    if (!vertex_idx_.emplace(vertices_[static_cast<size_t>(i)], i).second)
      fail(Errc::parse_error, "duplicate vertex name '" + vertices_[static_cast<size_t>(i)] + "'");
  }
  std::set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second) fail(Errc::parse_error, "duplicate label name '" + l + "'");
  rel_.resize(labels_.size());
}

int BinarySystem::find_vertex(const std::string& name) const {
  auto it = vertex_idx_.find(name);
  return it == vertex_idx_.end() ? -1 : it->second;
}

int BinarySystem::vertex_index(const std::string& name) const {
  int v = find_vertex(name);
  if (v < 0) fail(Errc::unknown_vertex, "vertex '" + name + "' does not exist");
  return v;
}

int BinarySystem::find_label(const std::string& name) const {
  for (int i = 0; i < label_count(); ++i)
    if (labels_[static_cast<size_t>(i)] == name) return i;
  return -1;
}

void BinarySystem::add_pair(int label, int u, int v) {
  if (label < 0 || label >= label_count())
    fail(Errc::parse_error, "label index " + std::to_string(label) + " out of range");
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
    fail(Errc::unknown_vertex, "pair endpoint out of range");
  auto& pairs = rel_[static_cast<size_t>(label)];
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(u, v));
  if (it != pairs.end() && *it == std::make_pair(u, v))
    fail(Errc::duplicate_edge, "pair (" + vertices_[static_cast<size_t>(u)] + ", " +
                                   vertices_[static_cast<size_t>(v)] + ") repeated under label '" +
                                   labels_[static_cast<size_t>(label)] + "'");
  pairs.insert(it, {u, v});
}

bool BinarySystem::has_pair(int label, int u, int v) const {
  const auto& pairs = rel_[static_cast<size_t>(label)];
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

long long BinarySystem::pair_count() const {
  long long total = 0;
  for (const auto& pairs : rel_) total += static_cast<long long>(pairs.size());
  return total;
}

VertexDegrees BinarySystem::degrees(int v) const {
  if (v < 0 || v >= vertex_count())
    fail(Errc::unknown_vertex, "vertex index " + std::to_string(v) + " out of range");
  VertexDegrees d;
  for (const auto& pairs : rel_) {
    for (const auto& [a, b] : pairs) {
      if (a == v) ++d.out;
      if (b == v) ++d.in;
    }
  }
  d.total = d.in + d.out;
  return d;
}

bool is_invariant(const BinarySystem& s, const std::vector<int>& subset,
                  const std::vector<Perm>& auts) {
  std::vector<char> member(static_cast<size_t>(s.vertex_count()), 0);
  for (int v : subset) {
    if (v < 0 || v >= s.vertex_count())
      fail(Errc::unknown_vertex, "subset vertex " + std::to_string(v) + " out of range");
    member[static_cast<size_t>(v)] = 1;
  }
  for (const Perm& a : auts) {
    if (a.degree() != s.vertex_count())
      fail(Errc::degree_mismatch, "map degree does not match vertex count");
    for (int v : subset)
      if (!member[static_cast<size_t>(a(v))]) return false;
  }
  return true;
}

Digraph Digraph::make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  Digraph g;
  g.sys_ = BinarySystem(std::move(vertices), {"edge"});
  for (const auto& [u, v] : edges) g.sys_.add_pair(0, g.sys_.vertex_index(u), g.sys_.vertex_index(v));
  return g;
}

Digraph Digraph::from_system(BinarySystem sys) {
  if (sys.label_count() != 1)
    fail(Errc::shape_mismatch,
         "digraph needs exactly one label, got " + std::to_string(sys.label_count()));
  Digraph g;
  g.sys_ = std::move(sys);
  return g;
}

int Digraph::edge_index(int u, int v) const {
  const auto& e = edges();
  auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(u, v));
  if (it == e.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - e.begin());
}

std::string Digraph::edge_name(int e) const {
  const auto& [u, v] = edges()[static_cast<size_t>(e)];
  return vertex_names()[static_cast<size_t>(u)] + "->" + vertex_names()[static_cast<size_t>(v)];
}

SimpleGraph SimpleGraph::make(std::vector<std::string> vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  BinarySystem lookup(vertices, {});
  std::vector<std::pair<int, int>> idx;
  idx.reserve(edges.size());
  for (const auto& [u, v] : edges) idx.emplace_back(lookup.vertex_index(u), lookup.vertex_index(v));
  return from_index_pairs(std::move(vertices), std::move(idx));
}

SimpleGraph SimpleGraph::from_index_pairs(std::vector<std::string> vertices,
                                          std::vector<std::pair<int, int>> edges) {
  SimpleGraph g;
  int n = static_cast<int>(vertices.size());
  g.vertices_ = std::move(vertices);
  {
    std::set<std::string> seen;
    for (const std::string& v : g.vertices_)
      if (!seen.insert(v).second) fail(Errc::parse_error, "duplicate vertex name '" + v + "'");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::unknown_vertex, "edge endpoint out of range");
    if (u == v)
      fail(Errc::loop_edge, "loop at '" + g.vertices_[static_cast<size_t>(u)] + "' not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      fail(Errc::duplicate_edge, "edge {" + g.vertices_[static_cast<size_t>(edges[i].first)] +
                                     ", " + g.vertices_[static_cast<size_t>(edges[i].second)] +
                                     "} repeated");
  g.edges_ = std::move(edges);
  return g;
}

Digraph SimpleGraph::bidirected() const {
  BinarySystem sys(vertices_, {"edge"});
  for (const auto& [u, v] : edges_) {
    sys.add_pair(0, u, v);
    sys.add_pair(0, v, u);
  }
  return Digraph::from_system(std::move(sys));
}

BinarySystem SimpleGraph::as_system() const { return bidirected().system(); }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const BinarySystem& s) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& v : s.vertex_names()) out << "  " << dot_quote(v) << ";\n";
  for (int l = 0; l < s.label_count(); ++l) {
    for (const auto& [u, v] : s.pairs(l)) {
      out << "  " << dot_quote(s.vertex_name(u)) << " -> " << dot_quote(s.vertex_name(v));
      out << " [label=" << dot_quote(s.label_names()[static_cast<size_t>(l)]) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& v : g.vertex_names()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << dot_quote(g.vertex_names()[static_cast<size_t>(u)]) << " -> "
        << dot_quote(g.vertex_names()[static_cast<size_t>(v)]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (const std::string& v : g.vertex_names()) out << "  " << dot_quote(v) << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << dot_quote(g.vertex_names()[static_cast<size_t>(u)]) << " -- "
        << dot_quote(g.vertex_names()[static_cast<size_t>(v)]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coalg
