#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coalg/error.hpp"
#include "coalg/perm.hpp"

namespace coalg {

struct VertexDegrees {
  int in = 0;
  int out = 0;
  int total = 0;
};

// Finite vertex set with one binary relation per label. Relation pairs are
// kept sorted and duplicate-free per label; vertex and label names are
// unique.
class BinarySystem {
 public:
  BinarySystem() = default;
  BinarySystem(std::vector<std::string> vertices, std::vector<std::string> labels);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int label_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<std::string>& label_names() const { return labels_; }
  const std::string& vertex_name(int v) const { return vertices_[static_cast<size_t>(v)]; }

  int find_vertex(const std::string& name) const;     // -1 when absent
  int vertex_index(const std::string& name) const;    // UnknownVertex when absent
  int find_label(const std::string& name) const;      // -1 when absent

  void add_pair(int label, int u, int v);
  const std::vector<std::pair<int, int>>& pairs(int label) const {
    return rel_[static_cast<size_t>(label)];
  }
  bool has_pair(int label, int u, int v) const;
  long long pair_count() const;

  // Degree counts a vertex once per incident labeled pair, both directions.
  VertexDegrees degrees(int v) const;
  VertexDegrees degrees(const std::string& name) const { return degrees(vertex_index(name)); }

  friend bool operator==(const BinarySystem&, const BinarySystem&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::map<std::string, int> vertex_idx_;
  std::vector<std::vector<std::pair<int, int>>> rel_;
};

// True when every listed bijection maps the subset onto itself.
bool is_invariant(const BinarySystem& s, const std::vector<int>& subset,
                  const std::vector<Perm>& auts);

// One-label binary system.
class Digraph {
 public:
  Digraph() = default;
  static Digraph make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);
  static Digraph from_system(BinarySystem sys);

  const BinarySystem& system() const { return sys_; }
  int vertex_count() const { return sys_.vertex_count(); }
  const std::vector<std::string>& vertex_names() const { return sys_.vertex_names(); }
  const std::vector<std::pair<int, int>>& edges() const { return sys_.pairs(0); }
  int edge_count() const { return static_cast<int>(edges().size()); }
  int edge_index(int u, int v) const;  // -1 when absent
  std::string edge_name(int e) const;  // "u->v"

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  BinarySystem sys_;
};

// Undirected irreflexive graph; edges stored once with u < v.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  static SimpleGraph make(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges);
  static SimpleGraph from_index_pairs(std::vector<std::string> vertices,
                                      std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Digraph bidirected() const;      // both orientations of every edge
  BinarySystem as_system() const;  // one label, both orientations

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

std::string to_dot(const BinarySystem& s);
std::string to_dot(const Digraph& g);
std::string to_dot(const SimpleGraph& g);

}  // namespace coalg
