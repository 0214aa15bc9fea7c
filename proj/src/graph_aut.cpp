#include "coalg/graph_aut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

// Plan: iterate color refinement until stable (a vertex color folds in the
// multiset of neighbor colors per label and direction), then backtrack over
// an adjacency-first vertex order. Candidates for a vertex come from its
// color cell; each tentative assignment is checked against every already
// assigned neighbor in both directions, and against the preimages of the
// candidate's neighbors, so a completed assignment preserves all relations
// exactly.

namespace coalg {
namespace {

struct Adj {
  int n = 0;
  int nlabels = 0;
  // [label][vertex] -> sorted targets / sources
  std::vector<std::vector<std::vector<int>>> out, in;
  std::vector<std::unordered_set<long long>> member;  // label -> u * n + v
  std::vector<std::vector<int>> nbrs;                 // any label or direction, deduped

  bool has(int label, int u, int v) const {
    return member[static_cast<size_t>(label)].count(static_cast<long long>(u) * n + v) > 0;
  }
};

Adj build_adj(const BinarySystem& s) {
  Adj a;
  a.n = s.vertex_count();
  a.nlabels = s.label_count();
  a.out.assign(static_cast<size_t>(a.nlabels), std::vector<std::vector<int>>(static_cast<size_t>(a.n)));
  a.in.assign(static_cast<size_t>(a.nlabels), std::vector<std::vector<int>>(static_cast<size_t>(a.n)));
  a.member.resize(static_cast<size_t>(a.nlabels));
  a.nbrs.resize(static_cast<size_t>(a.n));
  for (int l = 0; l < a.nlabels; ++l) {
    for (const auto& [u, v] : s.pairs(l)) {
      a.out[static_cast<size_t>(l)][static_cast<size_t>(u)].push_back(v);
      a.in[static_cast<size_t>(l)][static_cast<size_t>(v)].push_back(u);
      a.member[static_cast<size_t>(l)].insert(static_cast<long long>(u) * a.n + v);
      a.nbrs[static_cast<size_t>(u)].push_back(v);
      a.nbrs[static_cast<size_t>(v)].push_back(u);
    }
  }
  for (auto& list : a.nbrs) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return a;
}

std::vector<int> refine_colors(const Adj& adj) {
  std::vector<int> color(static_cast<size_t>(adj.n), 0);
  int ncolors = 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(adj.n));
    for (int v = 0; v < adj.n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      for (int l = 0; l < adj.nlabels; ++l) {
        for (const auto* side : {&adj.out, &adj.in}) {
          std::vector<int> ns;
          for (int w : (*side)[static_cast<size_t>(l)][static_cast<size_t>(v)])
            ns.push_back(color[static_cast<size_t>(w)]);
          std::sort(ns.begin(), ns.end());
          s.push_back(-1);
          s.insert(s.end(), ns.begin(), ns.end());
        }
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < adj.n; ++v) ids.emplace(sig[static_cast<size_t>(v)], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < adj.n; ++v) color[static_cast<size_t>(v)] = ids[sig[static_cast<size_t>(v)]];
    if (next == ncolors) break;  // signatures include the old color, so cells only split
    ncolors = next;
  }
  return color;
}

std::string cell_histogram(const std::vector<int>& color) {
  std::map<int, int> sizes;
  for (int c : color) ++sizes[c];
  std::map<int, int> hist;  // cell size -> count
  for (const auto& [c, size] : sizes) ++hist[size];
  std::ostringstream out;
  out << "cells";
  for (const auto& [size, count] : hist) out << " " << count << "x" << size;
  return out.str();
}

struct Search {
  const Adj& adj;
  const Caps& caps;
  std::vector<int> color;
  std::vector<int> order;            // position -> vertex
  std::vector<std::vector<int>> cell;  // color -> member vertices, ascending
  std::vector<int> image, preimage;  // partial bijection, -1 when unset
  std::vector<char> used;
  long long nodes = 0;
  std::vector<Perm> found;

  explicit Search(const Adj& a, const Caps& c) : adj(a), caps(c) {}

  // Adjacency-first vertex order: prefer vertices already touching the
  // ordered prefix, then small color cells, so most assignments are forced.
  void plan_order() {
    int n = adj.n;
    std::vector<char> placed(static_cast<size_t>(n), 0);
    std::vector<char> touched(static_cast<size_t>(n), 0);
    std::vector<int> cell_size(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++cell_size[static_cast<size_t>(color[static_cast<size_t>(v)])];

    auto key = [&](int v) {
      return std::tuple<int, int, int>(
          touched[static_cast<size_t>(v)] ? 0 : 1,
          cell_size[static_cast<size_t>(color[static_cast<size_t>(v)])], v);
    };
    std::set<std::tuple<int, int, int>> pool;
    for (int v = 0; v < n; ++v) pool.insert(key(v));
    while (!pool.empty()) {
      int v = std::get<2>(*pool.begin());
      pool.erase(pool.begin());
      placed[static_cast<size_t>(v)] = 1;
      order.push_back(v);
      for (int w : adj.nbrs[static_cast<size_t>(v)]) {
        if (placed[static_cast<size_t>(w)] || touched[static_cast<size_t>(w)]) continue;
        pool.erase(key(w));
        touched[static_cast<size_t>(w)] = 1;
        pool.insert(key(w));
      }
    }
  }

  bool consistent(int v, int c) {
    ++nodes;
    if (nodes > caps.graph_search)
      fail(Errc::search_cap_exceeded,
           "node budget " + std::to_string(caps.graph_search) + " exhausted (" +
               cell_histogram(color) + ")");
    for (int l = 0; l < adj.nlabels; ++l) {
      for (int w : adj.out[static_cast<size_t>(l)][static_cast<size_t>(v)]) {
        int iw = image[static_cast<size_t>(w)];
        if (iw >= 0 && !adj.has(l, c, iw)) return false;
        if (w == v && !adj.has(l, c, c)) return false;
      }
      for (int w : adj.in[static_cast<size_t>(l)][static_cast<size_t>(v)]) {
        int iw = image[static_cast<size_t>(w)];
        if (iw >= 0 && !adj.has(l, iw, c)) return false;
      }
      for (int x : adj.out[static_cast<size_t>(l)][static_cast<size_t>(c)]) {
        int u = preimage[static_cast<size_t>(x)];
        if (u >= 0 && !adj.has(l, v, u)) return false;
        if (x == c && !adj.has(l, v, v)) return false;
      }
      for (int x : adj.in[static_cast<size_t>(l)][static_cast<size_t>(c)]) {
        int u = preimage[static_cast<size_t>(x)];
        if (u >= 0 && !adj.has(l, u, v)) return false;
      }
    }
    return true;
  }

  void run(size_t pos) {
    if (pos == order.size()) {
      Perm p;
      p.img = image;
      found.push_back(p);
      return;
    }
    int v = order[pos];
    for (int c : cell[static_cast<size_t>(color[static_cast<size_t>(v)])]) {
      if (used[static_cast<size_t>(c)]) continue;
      if (!consistent(v, c)) continue;
      image[static_cast<size_t>(v)] = c;
      preimage[static_cast<size_t>(c)] = v;
      used[static_cast<size_t>(c)] = 1;
      run(pos + 1);
      image[static_cast<size_t>(v)] = -1;
      preimage[static_cast<size_t>(c)] = -1;
      used[static_cast<size_t>(c)] = 0;
    }
  }
};

}  // namespace

std::vector<Perm> automorphisms(const BinarySystem& s, const Caps& caps) {
  Adj adj = build_adj(s);
  if (adj.n == 0) return {Perm{}};

  std::vector<int> color = refine_colors(adj);
  int ncolors = 1 + *std::max_element(color.begin(), color.end());
  if (ncolors == 1 && adj.n > caps.graph_unpruned)
    fail(Errc::search_cap_exceeded,
         "refinement left a single cell of " + std::to_string(adj.n) +
             " vertices (unpruned limit " + std::to_string(caps.graph_unpruned) + ")");

  Search search(adj, caps);
  search.color = color;
  search.cell.resize(static_cast<size_t>(ncolors));
  for (int v = 0; v < adj.n; ++v)
    search.cell[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
  search.image.assign(static_cast<size_t>(adj.n), -1);
  search.preimage.assign(static_cast<size_t>(adj.n), -1);
  search.used.assign(static_cast<size_t>(adj.n), 0);
  search.plan_order();
  search.run(0);

  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace coalg
