#pragma once

#include "graph.hpp"
#include "random.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace hs {

// Combinatorial embedding: rot[v] lists the neighbours of v in cyclic order.
struct RotationSystem {
  std::vector<std::vector<int>> rot;

  int n() const { return static_cast<int>(rot.size()); }

  int pos(int v, int w) const {
    const auto& r = rot[v];
    return static_cast<int>(std::find(r.begin(), r.end(), w) - r.begin());
  }
  int succ(int v, int w) const {
    const auto& r = rot[v];
    return r[(pos(v, w) + 1) % r.size()];
  }

  // faces as vertex cycles; the dart u->v is followed by v->succ_v(u)
  std::vector<std::vector<int>> faces() const {
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> out;
    for (int u = 0; u < n(); ++u)
      for (int v : rot[u]) {
        if (used.count({u, v})) continue;
        std::vector<int> f;
        int a = u, b = v;
        while (!used.count({a, b})) {
          used.insert({a, b});
          f.push_back(a);
          int c = succ(b, a);
          a = b;
          b = c;
        }
        out.push_back(f);
      }
    return out;
  }

  Graph graph() const {
    Graph g(n());
    for (int u = 0; u < n(); ++u)
      for (int v : rot[u])
        if (u < v) g.add_edge(u, v);
    return g;
  }
};

inline RotationSystem wheel(int spokes) {
  RotationSystem R;
  const int k = spokes;
  R.rot.assign(k + 1, {});
  for (int i = 0; i < k; ++i) R.rot[k].push_back(i);
  for (int i = 0; i < k; ++i) R.rot[i] = {(i + 1) % k, k, (i + k - 1) % k};
  return R;
}

// Lexicographically least BFS code over all starting darts and both orientations.
// For 3-connected planar graphs this identifies the graph up to isomorphism.
inline std::vector<int> canonical_code(const RotationSystem& R) {
  std::vector<int> best;
  const int n = R.n();
  for (int u = 0; u < n; ++u)
    for (int v0 : R.rot[u])
      for (int dir : {1, -1}) {
        std::vector<int> label(n, -1), ref(n, -1), code;
        std::deque<int> queue{u};
        label[u] = 0;
        ref[u] = v0;
        int next = 1;
        bool worse = false;
        while (!queue.empty() && !worse) {
          int x = queue.front();
          queue.pop_front();
          const auto& r = R.rot[x];
          int d = static_cast<int>(r.size()), p = R.pos(x, ref[x]);
          for (int k = 0; k < d; ++k) {
            int y = r[((p + dir * k) % d + d) % d];
            if (label[y] < 0) {
              label[y] = next++;
              ref[y] = x;
              queue.push_back(y);
            }
            code.push_back(label[y]);
          }
          code.push_back(-1);
          if (!best.empty()) {
            // prune as soon as the prefix is already larger
            size_t len = std::min(code.size(), best.size());
            auto cmp = std::lexicographical_compare_three_way(code.begin(), code.begin() + len, best.begin(), best.begin() + len);
            if (cmp > 0) worse = true;
          }
        }
        if (!worse && (best.empty() || code < best)) best = code;
      }
  return best;
}

// add the chord a-b inside face f (a, b non-consecutive on it)
inline RotationSystem add_chord(const RotationSystem& R, const std::vector<int>& f, int ia, int ib) {
  RotationSystem S = R;
  const int k = static_cast<int>(f.size());
  auto insert_at = [&](int i, int other) {
    int x = f[(i + k - 1) % k], v = f[i];
    auto& r = S.rot[v];
    r.insert(r.begin() + S.pos(v, x) + 1, other);
  };
  insert_at(ia, f[ib]);
  insert_at(ib, f[ia]);
  return S;
}

// split v: the new vertex takes `len` consecutive neighbours starting at position `start`
inline RotationSystem split_vertex(const RotationSystem& R, int v, int start, int len) {
  RotationSystem S = R;
  const int d = static_cast<int>(R.rot[v].size()), w = R.n();
  std::vector<int> mine, rest;
  for (int k = 0; k < d; ++k) (k < len ? mine : rest).push_back(R.rot[v][(start + k) % d]);
  rest.push_back(w);
  mine.push_back(v);
  S.rot[v] = rest;
  S.rot.push_back(mine);
  for (int x : mine)
    if (x != v) S.rot[x][S.pos(x, v)] = w;
  return S;
}

// Every graph obtainable by one chord addition or one vertex split.
template <class F>
void for_each_extension(const RotationSystem& R, F&& visit) {
  for (const auto& f : R.faces()) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        auto dup = R.rot[f[i]];
        if (std::find(dup.begin(), dup.end(), f[j]) != dup.end()) continue;
        visit(add_chord(R, f, i, j));
      }
  }
  for (int v = 0; v < R.n(); ++v) {
    const int d = static_cast<int>(R.rot[v].size());
    for (int len = 2; len <= d - 2; ++len)
      for (int s = 0; s < d; ++s) visit(split_vertex(R, v, s, len));
  }
}

// All 3-connected planar graphs on n vertices (4 <= n <= 9), one embedding each.
inline std::vector<RotationSystem> polyhedral_graphs(int n) {
  if (n < 4 || n > 9) fail(Errc::TooLarge, "enumeration supports 4..9 vertices");
  std::vector<std::map<std::vector<int>, RotationSystem>> layers(n + 1);
  for (int k = 3; k + 1 <= n; ++k) {
    auto w = wheel(k);
    layers[k + 1].emplace(canonical_code(w), w);
  }
  for (int size = 4; size <= n; ++size) {
    // chords stay in the layer, so sweep it until nothing new appears
    std::vector<RotationSystem> todo;
    for (auto& [c, R] : layers[size]) todo.push_back(R);
    while (!todo.empty()) {
      auto R = todo.back();
      todo.pop_back();
      for_each_extension(R, [&](const RotationSystem& S) {
        if (S.n() > n) return;
        auto& layer = layers[S.n()];
        auto code = canonical_code(S);
        if (layer.count(code)) return;
        if (!is_3_connected(S.graph())) return;
        layer.emplace(std::move(code), S);
        if (S.n() == size) todo.push_back(S);
      });
    }
  }
  std::vector<RotationSystem> out;
  for (auto& [c, R] : layers[n]) out.push_back(R);
  return out;
}

// Random 3-connected planar graph: a random wheel grown by random splits and chords.
inline RotationSystem random_polyhedral_graph(int n, Rng& rng, double chord_rate = 0.3) {
  if (n < 4) fail(Errc::MalformedInput, "need at least 4 vertices");
  auto try_chord = [&](RotationSystem& R) {
    auto fs = R.faces();
    const auto& f = fs[rng.integer(0, static_cast<int>(fs.size()) - 1)];
    const int k = static_cast<int>(f.size());
    if (k < 4) return;
    int i = rng.integer(0, k - 1), j = (i + rng.integer(2, k - 2)) % k;
    if (!R.graph().has_edge(f[i], f[j])) R = add_chord(R, f, std::min(i, j), std::max(i, j));
  };
  for (;;) {
    int spokes = n == 4 ? 3 : rng.integer(4, std::min(n - 1, 6));
    RotationSystem R = wheel(spokes);
    for (int guard = 0; R.n() < n && guard < 100 * n; ++guard) {
      int v = rng.integer(0, R.n() - 1);
      int d = static_cast<int>(R.rot[v].size());
      if (d < 4) {
        // a chord raises degrees so that later splits have room
        if (rng.uniform() < 0.2) try_chord(R);
        continue;
      }
      auto S = split_vertex(R, v, rng.integer(0, d - 1), rng.integer(2, d - 2));
      if (is_3_connected(S.graph())) R = S;
    }
    if (R.n() < n) continue;
    for (int c = 0; c < n && rng.uniform() < chord_rate; ++c) try_chord(R);
    return R;
  }
}

}  // namespace hs
