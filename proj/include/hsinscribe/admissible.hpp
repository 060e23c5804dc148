#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hs {

using Cover = std::array<std::vector<int>, 2>;

// Polyhedral graph with a two-cycle cover; red edges stay inside a cover cycle.
struct ColoredGraph {
  Graph g;
  std::vector<Color> color;
  Cover cover;

  int n() const { return g.n(); }
  int m() const { return g.m(); }

  // the vertex of a 1-cycle, or -1
  int apex() const {
    for (const auto& c : cover)
      if (c.size() == 1) return c[0];
    return -1;
  }

  int side(int v) const {
    for (int s = 0; s < 2; ++s)
      if (std::find(cover[s].begin(), cover[s].end(), v) != cover[s].end()) return s;
    return -1;
  }

  static ColoredGraph from_cover(Graph g, Cover cover) {
    ColoredGraph cg{std::move(g), {}, std::move(cover)};
    std::vector<int> side(cg.n(), -1);
    for (int s = 0; s < 2; ++s)
      for (int v : cg.cover[s]) {
        if (v < 0 || v >= cg.n() || side[v] >= 0) fail(Errc::InvalidCover, "cover is not a partition");
        side[v] = s;
      }
    for (int v = 0; v < cg.n(); ++v)
      if (side[v] < 0) fail(Errc::InvalidCover, "vertex " + std::to_string(v) + " not covered");
    for (auto [u, v] : cg.g.edges()) cg.color.push_back(side[u] == side[v] ? Color::Red : Color::Blue);
    cg.validate();
    return cg;
  }

  void validate() const {
    if (static_cast<int>(color.size()) != m()) fail(Errc::InvalidCover, "color list size mismatch");
    std::vector<int> sd(n(), -1);
    for (int s = 0; s < 2; ++s) {
      if (cover[s].empty()) fail(Errc::InvalidCover, "empty cover cycle");
      for (int v : cover[s]) {
        if (v < 0 || v >= n() || sd[v] >= 0) fail(Errc::InvalidCover, "cover is not a partition");
        sd[v] = s;
      }
    }
    for (int v = 0; v < n(); ++v)
      if (sd[v] < 0) fail(Errc::InvalidCover, "vertex " + std::to_string(v) + " not covered");
    for (int e = 0; e < m(); ++e) {
      auto [u, v] = g.edge(e);
      Color want = sd[u] == sd[v] ? Color::Red : Color::Blue;
      if (color[e] != want) fail(Errc::InvalidCover, "edge color disagrees with the cover");
    }
    for (const auto& c : cover) {
      if (c.size() == 2 && !g.has_edge(c[0], c[1])) fail(Errc::InvalidCover, "2-cycle without its edge");
      if (c.size() >= 3)
        for (size_t k = 0; k < c.size(); ++k)
          if (!g.has_edge(c[k], c[(k + 1) % c.size()])) fail(Errc::InvalidCover, "cover cycle uses a non-edge");
    }
  }
};

// Weights in units of pi when pi_units is set (needed for the apex constraint).
struct WeightedGraph {
  ColoredGraph cg;
  std::vector<Rational> w;
  bool pi_units = false;
  std::vector<char> zero_ok;  // edges allowed to carry weight 0

  bool zero_allowed(int e) const { return !zero_ok.empty() && zero_ok[e]; }
};

inline Rational vertex_sum(const WeightedGraph& wg, int v) {
  Rational s = 0;
  for (auto [u, e] : wg.cg.g.adj(v)) s += wg.w[e];
  return s;
}

struct WeightCheck {
  bool w1 = true, w2 = true;
  std::vector<int> bad_edges, bad_vertices;
  bool ok() const { return w1 && w2; }
};

// Independent exact check of W1 (signs) and W2 (vertex sums).
inline WeightCheck verify_weights(const WeightedGraph& wg) {
  WeightCheck r;
  const auto& cg = wg.cg;
  for (int e = 0; e < cg.m(); ++e) {
    const Rational& x = wg.w[e];
    bool good = cg.color[e] == Color::Red ? x > 0 : x < 0;
    if (!good && x == 0 && wg.zero_allowed(e)) good = true;
    if (!good) {
      r.w1 = false;
      r.bad_edges.push_back(e);
    }
  }
  int apex = cg.apex();
  for (int v = 0; v < cg.n(); ++v) {
    Rational target = 0;
    if (v == apex) target = -2;
    bool good = vertex_sum(wg, v) == target && (v != apex || wg.pi_units);
    if (!good) {
      r.w2 = false;
      r.bad_vertices.push_back(v);
    }
  }
  return r;
}

// ---- two-cycle covers ----

// All covers, one per vertex bipartition admitting cycles on both sides.
inline std::vector<Cover> all_two_cycle_covers(const Graph& g, int bound = 14, size_t limit = SIZE_MAX) {
  const int n = g.n();
  if (n > bound) fail(Errc::TooLarge, "cover search limited to n <= " + std::to_string(bound));
  std::vector<Cover> out;
  if (n < 2) return out;
  auto side_cycle = [&](const std::vector<int>& vs) -> std::optional<std::vector<int>> {
    if (vs.size() == 1) return vs;
    if (vs.size() == 2) {
      if (g.has_edge(vs[0], vs[1])) return vs;
      return std::nullopt;
    }
    return induced_hamiltonian_cycle(g, vs);
  };
  const uint32_t full = (1u << n) - 1;
  for (uint32_t mask = 1; mask < full; mask += 2) {  // vertex 0 always on side 0
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? a : b).push_back(v);
    auto ca = side_cycle(a);
    if (!ca) continue;
    auto cb = side_cycle(b);
    if (!cb) continue;
    out.push_back({*ca, *cb});
    if (out.size() >= limit) break;
  }
  return out;
}

// First cover honoring `colors` when given; red edges must stay inside a side.
inline std::optional<Cover> find_two_cycle_cover(const Graph& g, const std::vector<Color>* colors = nullptr,
                                                 int bound = 14) {
  if (!colors) {
    auto all = all_two_cycle_covers(g, bound, 1);
    if (all.empty()) return std::nullopt;
    return all[0];
  }
  // colors fix the partition: red components
  std::vector<int> comp(g.n(), -1);
  int nc = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (auto [w, e] : g.adj(v))
        if ((*colors)[e] == Color::Red && comp[w] < 0) {
          comp[w] = nc;
          st.push_back(w);
        }
    }
    ++nc;
  }
  if (nc != 2) return std::nullopt;
  Cover cov;
  std::array<std::vector<int>, 2> sides;
  for (int v = 0; v < g.n(); ++v) sides[comp[v]].push_back(v);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if ((comp[u] == comp[v]) != ((*colors)[e] == Color::Red)) return std::nullopt;
  }
  for (int s = 0; s < 2; ++s) {
    const auto& vs = sides[s];
    if (vs.size() <= 2) {
      if (vs.size() == 2 && !g.has_edge(vs[0], vs[1])) return std::nullopt;
      cov[s] = vs;
      continue;
    }
    auto c = induced_hamiltonian_cycle(g, vs);
    if (!c) return std::nullopt;
    cov[s] = *c;
  }
  return cov;
}

// ---- directed lift ----

// node 2v is v+, node 2v+1 is v-
struct DirectedLift {
  struct Arc {
    int from, to, edge;
  };
  int nodes = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // arc ids by tail

  static int plus(int v) { return 2 * v; }
  static int minus(int v) { return 2 * v + 1; }
  static int vertex(int node) { return node / 2; }
};

// red uv: u- -> v+, v- -> u+ ; blue uv: u+ -> v-, v+ -> u-
inline DirectedLift lift(const ColoredGraph& cg, const std::vector<char>* keep = nullptr) {
  DirectedLift L;
  L.nodes = 2 * cg.n();
  L.out.assign(L.nodes, {});
  for (int e = 0; e < cg.m(); ++e) {
    if (keep && !(*keep)[e]) continue;
    auto [u, v] = cg.g.edge(e);
    auto add = [&](int a, int b) {
      L.out[a].push_back(static_cast<int>(L.arcs.size()));
      L.arcs.push_back({a, b, e});
    };
    if (cg.color[e] == Color::Red) {
      add(DirectedLift::minus(u), DirectedLift::plus(v));
      add(DirectedLift::minus(v), DirectedLift::plus(u));
    } else {
      add(DirectedLift::plus(u), DirectedLift::minus(v));
      add(DirectedLift::plus(v), DirectedLift::minus(u));
    }
  }
  return L;
}

// Tarjan strongly connected components; returns component id per node
inline std::vector<int> strong_components(const DirectedLift& L) {
  int idx = 0, nc = 0;
  std::vector<int> index(L.nodes, -1), low(L.nodes, 0), comp(L.nodes, -1);
  std::vector<char> on(L.nodes, 0);
  std::vector<int> st;
  // iterative to keep the stack bounded
  for (int s = 0; s < L.nodes; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, size_t>> call{{s, 0}};
    index[s] = low[s] = idx++;
    st.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& [v, k] = call.back();
      if (k < L.out[v].size()) {
        int w = L.arcs[L.out[v][k++]].to;
        if (index[w] < 0) {
          index[w] = low[w] = idx++;
          st.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          for (;;) {
            int w = st.back();
            st.pop_back();
            on[w] = 0;
            comp[w] = nc;
            if (w == v) break;
          }
          ++nc;
        }
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
  }
  return comp;
}

// closed walk: edges[i] joins vertices[i] and vertices[i+1 mod k]
struct AlternatingCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// br alternation (even length, wrap included) or, with bbr = true, the pattern b,b,r repeated
inline bool is_alternating(const ColoredGraph& cg, const AlternatingCycle& c, bool bbr = false) {
  const size_t k = c.edges.size();
  if (k == 0 || c.vertices.size() != k) return false;
  for (size_t i = 0; i < k; ++i) {
    auto [u, v] = cg.g.edge(c.edges[i]);
    int a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (!((u == a && v == b) || (u == b && v == a))) return false;
  }
  if (!bbr) {
    if (k % 2) return false;
    for (size_t i = 0; i < k; ++i)
      if (cg.color[c.edges[i]] == cg.color[c.edges[(i + 1) % k]]) return false;
    return true;
  }
  if (k % 3) return false;
  for (size_t r = 0; r < 3; ++r) {
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i) {
      Color want = (i + r) % 3 == 2 ? Color::Red : Color::Blue;
      ok = cg.color[c.edges[i]] == want;
    }
    if (ok) return true;
  }
  return false;
}

namespace detail {

// shortest directed cycle through arc a, as a list of arc ids
inline std::optional<std::vector<int>> cycle_through_arc(const DirectedLift& L, int a) {
  int src = L.arcs[a].to, dst = L.arcs[a].from;
  std::vector<int> via(L.nodes, -2);
  std::deque<int> q{src};
  via[src] = -1;
  while (!q.empty() && via[dst] == -2) {
    int v = q.front();
    q.pop_front();
    for (int id : L.out[v]) {
      int w = L.arcs[id].to;
      if (via[w] != -2) continue;
      via[w] = id;
      q.push_back(w);
    }
  }
  if (via[dst] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = dst; v != src; v = L.arcs[via[v]].from) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  path.insert(path.begin(), a);
  return path;
}

inline AlternatingCycle project(const DirectedLift& L, const std::vector<int>& arcs) {
  AlternatingCycle c;
  for (int id : arcs) {
    c.vertices.push_back(DirectedLift::vertex(L.arcs[id].from));
    c.edges.push_back(L.arcs[id].edge);
  }
  return c;
}

inline Rational color_sign(Color c) { return c == Color::Red ? 1 : -1; }

}  // namespace detail

struct C2Result {
  bool ok = false;
  bool apex_case = false;
  std::vector<AlternatingCycle> witnesses;
  std::vector<int> failing_edges;
  std::string note;
};

inline C2Result check_C2(const ColoredGraph& cg) {
  cg.validate();
  C2Result r;
  int apex = cg.apex();
  if (apex >= 0) {
    r.apex_case = true;
    bool dominates = cg.g.degree(apex) == cg.n() - 1;
    for (int e = 0; e < cg.m(); ++e) {
      if (cg.color[e] != Color::Red) continue;
      auto [a, b] = cg.g.edge(e);
      int ea = cg.g.edge_id(apex, a), eb = cg.g.edge_id(apex, b);
      if (ea < 0 || eb < 0) {
        r.failing_edges.push_back(e);
        continue;
      }
      r.witnesses.push_back({{apex, a, b}, {ea, e, eb}});
    }
    if (!dominates)
      for (int e = 0; e < cg.m(); ++e)
        if (cg.color[e] == Color::Blue) {
          // a spoke survives only if some witness triangle uses it
          bool used = false;
          for (auto& w : r.witnesses) used |= std::count(w.edges.begin(), w.edges.end(), e) > 0;
          if (!used) r.failing_edges.push_back(e);
        }
    std::sort(r.failing_edges.begin(), r.failing_edges.end());
    r.ok = dominates && r.failing_edges.empty();
    r.note = dominates ? "apex dominates" : "apex is not adjacent to every vertex";
    return r;
  }
  auto L = lift(cg);
  auto comp = strong_components(L);
  std::vector<char> on_cycle(cg.m(), 0);
  for (const auto& a : L.arcs)
    if (comp[a.from] == comp[a.to]) on_cycle[a.edge] = 1;
  std::vector<char> covered(cg.m(), 0);
  for (int e = 0; e < cg.m(); ++e) {
    if (!on_cycle[e]) {
      r.failing_edges.push_back(e);
      continue;
    }
    if (covered[e]) continue;
    std::optional<std::vector<int>> best;
    for (size_t id = 0; id < L.arcs.size(); ++id) {
      if (L.arcs[id].edge != e) continue;
      auto c = detail::cycle_through_arc(L, static_cast<int>(id));
      if (c && (!best || c->size() < best->size())) best = c;
    }
    if (!best) fail(Errc::StructureViolation, "component test and cycle search disagree");
    auto cyc = detail::project(L, *best);
    if (!is_alternating(cg, cyc)) fail(Errc::StructureViolation, "lifted cycle does not alternate");
    for (int f : cyc.edges) covered[f] = 1;
    r.witnesses.push_back(std::move(cyc));
  }
  r.ok = r.failing_edges.empty();
  r.note = r.ok ? "every edge lies on an alternating cycle" : "some edges lie on no alternating cycle";
  return r;
}

// Sum of witness cycles (red +, blue -); apex case scaled to the -2 pi apex sum.
inline WeightedGraph synthesize_by_cycles(const ColoredGraph& cg) {
  auto c2 = check_C2(cg);
  if (!c2.ok) fail(Errc::NotAdmissible, "graph fails the alternating-cycle condition");
  WeightedGraph wg{cg, std::vector<Rational>(cg.m(), 0), false, {}};
  for (const auto& c : c2.witnesses)
    for (int e : c.edges) wg.w[e] += detail::color_sign(cg.color[e]);
  if (c2.apex_case) {
    Rational apex_sum = vertex_sum(wg, cg.apex());
    for (auto& x : wg.w) x *= Rational(-2) / apex_sum;
    wg.pi_units = true;
  }
  return wg;
}

// scaled copy with blue sum -2*omega0 (pi units); with a 1-cycle the apex fixes the scale
inline WeightedGraph normalize(const WeightedGraph& wg, std::optional<Rational> omega0 = std::nullopt) {
  int apex = wg.cg.apex();
  Rational t;
  if (apex >= 0) {
    if (omega0) fail(Errc::ApexConflict, "a 1-cycle forces the scale; omega0 must not be given");
    Rational s = vertex_sum(wg, apex);
    if (s >= 0) fail(Errc::NotAdmissible, "apex sum must be negative");
    t = Rational(-2) / s;
  } else {
    Rational om = omega0 ? *omega0 : Rational(1, 2);
    if (om <= 0 || om >= 1) fail(Errc::InfeasibleInput, "omega0 must lie in (0, pi)");
    Rational blue = 0;
    for (int e = 0; e < wg.cg.m(); ++e)
      if (wg.cg.color[e] == Color::Blue) blue += wg.w[e];
    if (blue >= 0) fail(Errc::NotAdmissible, "blue sum must be negative");
    t = -2 * om / blue;
  }
  WeightedGraph out = wg;
  for (auto& x : out.w) x *= t;
  out.pi_units = true;
  return out;
}

// ---- LP oracle ----

struct LpResult {
  bool feasible = false;
  Rational margin;                   // optimal margin (feasible iff > 0)
  std::optional<WeightedGraph> witness;
  std::vector<Rational> certificate;  // lambda per vertex when infeasible
};

// Motzkin alternative: c_e = s_e (l_u + l_v) >= 0, b.l <= 0, not all zero
inline bool verify_certificate(const ColoredGraph& cg, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != cg.n()) return false;
  int apex = cg.apex();
  Rational bl = apex >= 0 ? -2 * lambda[apex] : Rational(0);
  if (bl > 0) return false;
  bool strict = bl < 0;
  for (int e = 0; e < cg.m(); ++e) {
    auto [u, v] = cg.g.edge(e);
    Rational c = detail::color_sign(cg.color[e]) * (lambda[u] + lambda[v]);
    if (c < 0) return false;
    if (c > 0) strict = true;
  }
  return strict;
}

inline LpResult lp_feasible(const ColoredGraph& cg) {
  cg.validate();
  const int m = cg.m(), n = cg.n(), apex = cg.apex();
  LpResult res;
  {
    // y_e = |w_e|, margin mu: y_e >= mu, vertex sums, mu <= 1
    lp::Problem P;
    P.nvars = m + 1;
    P.c.assign(m + 1, 0);
    P.c[m] = 1;
    for (int e = 0; e < m; ++e) {
      std::vector<Rational> a(m + 1, 0);
      a[e] = 1;
      a[m] = -1;
      P.add(a, lp::Rel::GE, 0);
    }
    for (int v = 0; v < n; ++v) {
      std::vector<Rational> a(m + 1, 0);
      for (auto [w, e] : cg.g.adj(v)) a[e] = detail::color_sign(cg.color[e]);
      P.add(a, lp::Rel::EQ, v == apex ? Rational(-2) : Rational(0));
    }
    std::vector<Rational> a(m + 1, 0);
    a[m] = 1;
    P.add(a, lp::Rel::LE, 1);
    auto sol = lp::maximize(P);
    if (sol.status == lp::Status::Optimal) {
      res.margin = sol.value;
      if (sol.value > 0) {
        res.feasible = true;
        WeightedGraph wg{cg, std::vector<Rational>(m), apex >= 0, {}};
        for (int e = 0; e < m; ++e) wg.w[e] = detail::color_sign(cg.color[e]) * sol.x[e];
        res.witness = std::move(wg);
        return res;
      }
    }
  }
  // certificate: lambda = lp - lm, maximize sum c_e - b.lambda with bounds
  lp::Problem Q;
  Q.nvars = 2 * n;
  Q.c.assign(2 * n, 0);
  auto lam_row = [&](int v, Rational coef, std::vector<Rational>& a) {
    a[v] += coef;
    a[n + v] -= coef;
  };
  for (int e = 0; e < m; ++e) {
    auto [u, v] = cg.g.edge(e);
    Rational s = detail::color_sign(cg.color[e]);
    std::vector<Rational> a(2 * n, 0);
    lam_row(u, s, a);
    lam_row(v, s, a);
    Q.add(a, lp::Rel::GE, 0);
    Q.add(a, lp::Rel::LE, 1);
    for (int j = 0; j < 2 * n; ++j) Q.c[j] += a[j];
  }
  if (apex >= 0) {
    std::vector<Rational> a(2 * n, 0);  // -b.lambda = 2 lambda_apex
    lam_row(apex, 2, a);
    Q.add(a, lp::Rel::GE, 0);
    Q.add(a, lp::Rel::LE, 1);
    for (int j = 0; j < 2 * n; ++j) Q.c[j] += a[j];
  }
  auto sol = lp::maximize(Q);
  if (sol.status == lp::Status::Optimal && sol.value > 0) {
    res.certificate.resize(n);
    for (int v = 0; v < n; ++v) res.certificate[v] = sol.x[v] - sol.x[n + v];
  }
  return res;
}

// ---- minimal alternating cycles ----

struct CycleVector {
  AlternatingCycle cycle;
  std::vector<int> counts;  // signed visit counts, red +, blue -
};

// Inclusion-minimal alternating cycles from simple cycles of the lift.
// With a 1-cycle present, the apex has no red edge and only br cycles avoiding it are listed.
inline std::vector<CycleVector> minimal_alternating_cycles(const ColoredGraph& cg, int bound = 12,
                                                           size_t cap = 200000) {
  if (cg.n() > bound) fail(Errc::TooLarge, "minimal cycle search limited to n <= " + std::to_string(bound));
  auto L = lift(cg);
  std::map<std::vector<int>, AlternatingCycle> found;
  std::vector<char> blocked(L.nodes, 0);
  std::vector<int> path;
  size_t visited = 0;
  for (int s = 0; s < L.nodes; ++s) {
    auto rec = [&](auto&& self, int v) -> void {
      if (++visited > cap * 20) fail(Errc::TooLarge, "cycle enumeration exceeded its budget");
      for (int id : L.out[v]) {
        int w = L.arcs[id].to;
        if (w < s) continue;
        if (w == s) {
          path.push_back(id);
          auto cyc = detail::project(L, path);
          std::vector<int> cnt(cg.m(), 0);
          for (int e : cyc.edges) cnt[e] += cg.color[e] == Color::Red ? 1 : -1;
          if (!found.count(cnt)) {
            found.emplace(cnt, std::move(cyc));
            if (found.size() > cap) fail(Errc::TooLarge, "too many alternating cycles");
          }
          path.pop_back();
          continue;
        }
        if (blocked[w]) continue;
        blocked[w] = 1;
        path.push_back(id);
        self(self, w);
        path.pop_back();
        blocked[w] = 0;
      }
    };
    blocked[s] = 1;
    rec(rec, s);
    blocked[s] = 0;
  }
  std::vector<CycleVector> all;
  for (auto& [cnt, cyc] : found) all.push_back({cyc, cnt});
  auto support_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0 && b[i] == 0) return false;
    return true;
  };
  std::vector<CycleVector> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < all.size() && minimal; ++j) {
      if (i == j) continue;
      if (support_subset(all[j].counts, all[i].counts) && !support_subset(all[i].counts, all[j].counts))
        minimal = false;
    }
    if (!minimal) continue;
    bool dup = false;  // same support as an earlier minimal cycle: same ray
    for (auto& o : out) dup |= support_subset(o.counts, all[i].counts) && support_subset(all[i].counts, o.counts);
    if (!dup) out.push_back(all[i]);
  }
  return out;
}

// union of supports covers every edge
inline bool cycles_cover_all_edges(const ColoredGraph& cg, const std::vector<CycleVector>& cyc) {
  std::vector<char> hit(cg.m(), 0);
  for (auto& c : cyc)
    for (int e = 0; e < cg.m(); ++e)
      if (c.counts[e] != 0) hit[e] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

// Subtract multiples of alternating cycles inside the support until w vanishes.
// Returns the number of steps (at most |E|). Requires zero vertex sums everywhere.
inline int peel_cycles(WeightedGraph wg) {
  const auto& cg = wg.cg;
  int steps = 0;
  for (;;) {
    std::vector<char> keep(cg.m(), 0);
    bool any = false;
    for (int e = 0; e < cg.m(); ++e)
      if (wg.w[e] != 0) keep[e] = any = 1;
    if (!any) return steps;
    if (steps > cg.m()) fail(Errc::StructureViolation, "peeling did not terminate");
    auto L = lift(cg, &keep);
    std::optional<std::vector<int>> cyc;
    for (size_t id = 0; id < L.arcs.size() && !cyc; ++id) cyc = detail::cycle_through_arc(L, static_cast<int>(id));
    if (!cyc) fail(Errc::NotAdmissible, "no alternating cycle in the support");
    std::map<int, int> n_e;
    for (int id : *cyc) ++n_e[L.arcs[id].edge];
    std::optional<Rational> alpha;
    for (auto [e, k] : n_e) {
      Rational a = abs(wg.w[e]) / k;
      if (!alpha || a < *alpha) alpha = a;
    }
    for (auto [e, k] : n_e) wg.w[e] -= *alpha * k * detail::color_sign(cg.color[e]);
    ++steps;
  }
}

// ---- positive parts and the greedy belt ----

// Positive weights on an outerplanar graph: the q-cycle 0..q-1 plus non-crossing diagonals.
struct OuterplanarWeights {
  int q = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> w;  // pi units

  Rational total() const {
    Rational s = 0;
    for (auto& x : w) s += x;
    return s;
  }
  Rational at(int v) const {
    Rational s = 0;
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].first == v || edges[i].second == v) s += w[i];
    return s;
  }
};

inline bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [a0, a1] = std::minmax(a.first, a.second);
  auto [b0, b1] = std::minmax(b.first, b.second);
  if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
  bool b0in = a0 < b0 && b0 < a1, b1in = a0 < b1 && b1 < a1;
  return b0in != b1in;
}

inline bool is_outerplanar_layout(const OuterplanarWeights& ow) {
  for (size_t i = 0; i < ow.edges.size(); ++i)
    for (size_t j = i + 1; j < ow.edges.size(); ++j)
      if (diagonals_cross(ow.edges[i], ow.edges[j])) return false;
  return true;
}

// (1-t) theta0 + t theta1, theta0 on the cycle, theta1 on random non-crossing diagonals; total 1 (= pi)
inline OuterplanarWeights sample_positive_part(int q, const Rational& t, uint64_t seed) {
  if (q < 1) fail(Errc::InfeasibleInput, "q must be positive");
  if (t < 0 || t >= 1) fail(Errc::InfeasibleInput, "t must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  auto rint = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
  OuterplanarWeights ow;
  ow.q = q;
  if (q == 1) return ow;
  if (q == 2) {
    ow.edges.push_back({0, 1});
    ow.w.push_back(1);
    return ow;
  }
  std::vector<std::pair<int, int>> cyc, diag;
  for (int k = 0; k < q; ++k) cyc.push_back(std::minmax(k, (k + 1) % q));
  // random triangulation of the polygon 0..q-1 by recursive splitting
  auto split = [&](auto&& self, int a, int b) -> void {  // polygon a..b along the boundary
    if (b - a < 2) return;
    int c = rint(a + 1, b - 1);
    if (c - a >= 2) diag.push_back({a, c});
    if (b - c >= 2) diag.push_back({c, b});
    self(self, a, c);
    self(self, c, b);
  };
  split(split, 0, q - 1);
  std::vector<std::pair<int, int>> chosen;
  for (auto& d : diag)
    if (rng() % 2) chosen.push_back(d);
  if (chosen.empty() && !diag.empty()) chosen.push_back(diag[rng() % diag.size()]);
  auto random_simplex = [&](size_t k) {
    std::vector<Rational> x(k);
    Rational s = 0;
    for (auto& v : x) {
      v = rint(1, 1000);
      s += v;
    }
    for (auto& v : x) v /= s;
    return x;
  };
  auto w0 = random_simplex(cyc.size());
  std::vector<Rational> w1;
  const auto& d_edges = chosen.empty() ? cyc : chosen;
  w1 = random_simplex(d_edges.size());
  std::map<std::pair<int, int>, Rational> acc;
  for (size_t i = 0; i < cyc.size(); ++i) acc[cyc[i]] += (1 - t) * w0[i];
  for (size_t i = 0; i < d_edges.size(); ++i) acc[d_edges[i]] += t * w1[i];
  for (auto& [e, x] : acc)
    if (x != 0) {
      ow.edges.push_back(e);
      ow.w.push_back(x);
    }
  return ow;
}

inline OuterplanarWeights scaled(OuterplanarWeights ow, const Rational& f) {
  for (auto& x : ow.w) x *= f;
  return ow;
}

// Blue belt between the two positive parts. Vertex k of `plus` is (k+1)+, vertex k of
// `minus` is (k+1)-; output vertices: plus 0..p-1, minus p..p+q-1.
inline WeightedGraph greedy_belt(const OuterplanarWeights& plus, const OuterplanarWeights& minus,
                                 const Rational& s, int sigma) {
  const int p = plus.q, q = minus.q;
  if (p < 2 || q < 2) fail(Errc::InfeasibleInput, "greedy belt needs two cycles of length >= 2");
  for (auto& x : plus.w)
    if (x <= 0) fail(Errc::InfeasibleInput, "red weights must be positive");
  for (auto& x : minus.w)
    if (x <= 0) fail(Errc::InfeasibleInput, "red weights must be positive");
  Rational omega = plus.total();
  if (omega != minus.total()) fail(Errc::InfeasibleInput, "red sums differ between the components");
  if (omega <= 0 || omega >= 1) fail(Errc::InfeasibleInput, "component sum must lie in (0, pi)");
  std::vector<Rational> rp(p), rm(q);
  for (int k = 0; k < p; ++k) rp[k] = plus.at(k);
  for (int k = 0; k < q; ++k) rm[k] = minus.at(k);
  if (s > 0 || s < -std::min(rp[0], rm[0])) fail(Errc::InfeasibleInput, "first-step weight out of range");

  std::map<std::pair<int, int>, Rational> blue;  // (plus index, minus index)
  std::vector<std::pair<int, int>> order;
  auto put = [&](int i, int j, const Rational& x) {
    auto key = std::pair{i, j};
    if (!blue.count(key)) order.push_back(key);
    blue[key] += x;
  };
  put(0, 0, s);
  rp[0] += s;
  rm[0] += s;
  int i = sigma > 0 ? 1 : 0, j = sigma > 0 ? 0 : 1;
  Rational left = 0;
  for (auto& x : rp) left += x;
  while (left > 0) {
    for (int g = 0; g < p && rp[i % p] == 0; ++g) ++i;
    for (int g = 0; g < q && rm[j % q] == 0; ++g) ++j;
    Rational a = std::min(rp[i % p], rm[j % q]);
    if (a <= 0) fail(Errc::StructureViolation, "greedy walk stalled");
    put(i % p, j % q, -a);
    rp[i % p] -= a;
    rm[j % q] -= a;
    left -= a;
    bool zi = rp[i % p] == 0, zj = rm[j % q] == 0;
    if (zi) ++i;
    if (zj) ++j;
  }
  for (auto& x : rm)
    if (x != 0) fail(Errc::StructureViolation, "residual weight left on the minus side");

  Graph g(p + q);
  std::vector<Rational> w;
  std::vector<char> zero_ok;
  for (size_t k = 0; k < plus.edges.size(); ++k) {
    g.add_edge(plus.edges[k].first, plus.edges[k].second);
    w.push_back(plus.w[k]);
    zero_ok.push_back(0);
  }
  for (size_t k = 0; k < minus.edges.size(); ++k) {
    g.add_edge(p + minus.edges[k].first, p + minus.edges[k].second);
    w.push_back(minus.w[k]);
    zero_ok.push_back(0);
  }
  for (auto key : order) {
    g.add_edge(key.first, p + key.second);
    w.push_back(blue[key]);
    zero_ok.push_back(blue[key] == 0);
  }
  Cover cov;
  for (int k = 0; k < p; ++k) cov[0].push_back(k);
  for (int k = 0; k < q; ++k) cov[1].push_back(p + k);
  WeightedGraph wg{ColoredGraph::from_cover(std::move(g), cov), std::move(w), true, std::move(zero_ok)};
  return wg;
}

}  // namespace hs
