#pragma once

#include "admissible.hpp"
#include "ideal_polyhedron.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace hs {

struct NamedPolyhedron {
  std::string name;
  IdealPolyhedron P;
};

// Bundled polyhedra; sizes run from 4 to 10 vertices.
inline std::vector<NamedPolyhedron> polyhedron_corpus() {
  std::vector<NamedPolyhedron> out;
  auto add = [&](std::string name, IdealPolyhedron P) { out.push_back({std::move(name), std::move(P)}); };
  for (int q = 3; q <= 6; ++q) add("pyramid_1_" + std::to_string(q), generate_two_circle(1, q, 2.0));
  add("two_circle_2_2", generate_two_circle(2, 2, 1.8));
  add("two_circle_2_3", generate_two_circle(2, 3, std::sqrt(2.0)));
  add("two_circle_3_3", generate_two_circle(3, 3, 2.0));
  add("two_circle_2_5", generate_two_circle(2, 5, 1.5));
  add("two_circle_3_4", generate_two_circle(3, 4, 2.0));
  add("two_circle_4_4", generate_two_circle(4, 4, 2.5));
  add("two_circle_4_6", generate_two_circle(4, 6, 2.0));
  add("random_2_4", generate_random(2, 4, 1.7, 11));
  add("random_3_4", generate_random(3, 4, 1.7, 7));
  add("random_1_6", generate_random(1, 6, 2.0, 5));
  add("random_3_5", generate_random(3, 5, 2.2, 3));
  add("random_5_5", generate_random(5, 5, 1.9, 13));
  return out;
}

inline ColoredGraph colored(int n, const std::vector<std::pair<int, int>>& edges, Cover cover) {
  return ColoredGraph::from_cover(Graph(n, edges), std::move(cover));
}

// square pyramid: the apex is a 1-cycle adjacent to everything
inline ColoredGraph wheel4_graph() {
  return colored(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{{0}, {1, 2, 3, 4}}});
}

// cube with top and bottom squares as the cover, matching edges blue
inline ColoredGraph cube_matching_graph() {
  return colored(8,
                 {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                 {{{0, 1, 2, 3}, {4, 5, 6, 7}}});
}

// Two nested squares, inner 0..3 and outer 4..7, joined by four rungs and two
// diagonals 4-1 and 6-3. Rebuilt from a figure; the two diagonals lie on no
// alternating cycle.
inline ColoredGraph nested_squares_graph() {
  return colored(8,
                 {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                  {0, 4}, {1, 5}, {2, 6}, {3, 7}, {1, 4}, {3, 6}},
                 {{{0, 1, 2, 3}, {4, 5, 6, 7}}});
}

}  // namespace hs
