#pragma once

#include "errors.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hs {

enum class Color { Red, Blue };

constexpr const char* to_string(Color c) { return c == Color::Red ? "r" : "b"; }

// Simple undirected graph; edges keep their input order, stored with u < v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(Errc::MalformedInput, "edge endpoint out of range");
    if (u == v) fail(Errc::MalformedInput, "self loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (index_.count({u, v})) fail(Errc::MalformedInput, "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v});
    index_[{u, v}] = id;
    adj_[u].push_back({v, id});
    adj_[v].push_back({u, id});
    return id;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  // (neighbor, edge id)
  const std::vector<std::pair<int, int>>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = index_.find({u, v});
    return it == index_.end() ? -1 : it->second;
  }
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
  int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// connectivity of g with the vertices flagged in `removed` deleted
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int start = -1, alive = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adj(v))
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == alive;
}

inline bool is_3_connected(const Graph& g) {
  if (g.n() < 4) return false;
  std::vector<char> removed(g.n(), 0);
  if (!connected_without(g, removed)) return false;
  for (int a = 0; a < g.n(); ++a) {
    removed[a] = 1;
    if (!connected_without(g, removed)) return false;
    for (int b = a + 1; b < g.n(); ++b) {
      removed[b] = 1;
      bool ok = connected_without(g, removed);
      removed[b] = 0;
      if (!ok) return false;
    }
    removed[a] = 0;
  }
  return true;
}

inline bool is_planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.n());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// 1-skeleton of a 3-polytope (Steinitz)
inline bool is_polyhedral(const Graph& g) { return is_3_connected(g) && is_planar(g); }

// Hamiltonian cycle of the subgraph induced on `verts` (size >= 3), by backtracking.
inline std::optional<std::vector<int>> induced_hamiltonian_cycle(const Graph& g, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  if (k < 3) return std::nullopt;
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < k; ++i) local[verts[i]] = i;
  std::vector<std::vector<int>> nb(k);
  for (int i = 0; i < k; ++i) {
    for (auto [w, e] : g.adj(verts[i]))
      if (local[w] >= 0) nb[i].push_back(local[w]);
    if (nb[i].size() < 2) return std::nullopt;
    std::sort(nb[i].begin(), nb[i].end());
  }
  std::vector<int> path{0};
  std::vector<char> used(k, 0);
  used[0] = 1;
  // adjacency to the start vertex, for closing the cycle
  std::vector<char> to_start(k, 0);
  for (int w : nb[0]) to_start[w] = 1;
  auto rec = [&](auto&& self, int v) -> bool {
    if (static_cast<int>(path.size()) == k) return to_start[v];
    for (int w : nb[v]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<int> out;
  for (int i : path) out.push_back(verts[i]);
  return out;
}

}  // namespace hs
