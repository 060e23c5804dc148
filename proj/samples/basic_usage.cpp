// Build a square pyramid with its apex on the upper sheet, read off its angles,
// then check a graph and a horocyclic polygon.
#include "hsinscribe/admissible.hpp"
#include "hsinscribe/corpus.hpp"
#include "hsinscribe/hs_metric.hpp"
#include "hsinscribe/ideal_polyhedron.hpp"

#include <cstdio>

using namespace hs;

int main() {
  auto P = generate_two_circle(1, 4, 2.0);
  auto g = dihedral_angles(P);
  for (size_t e = 0; e < g.edges.size(); ++e)
    std::printf("edge %d-%d  %s  theta = %+.6f\n", g.edges[e].first, g.edges[e].second, to_string(g.colors[e]),
                g.theta[e]);
  std::printf("apex sum %.12f (-2pi = %.12f)\n", g.vertex_sum(g.apex()), -2 * kPi);

  auto report = verify_admissible(g);
  for (const auto& c : report.conditions) std::printf("%s %s\n", c.name.c_str(), c.pass ? "ok" : "FAILED");

  auto rel = verify_vertex_relations(shape_parameters(P));
  std::printf("shape product residual %.1e, closure residual %.1e\n", rel.max_product, rel.max_closure);

  // weights for the cube with a blue perfect matching, scaled so the blue sum is -pi
  auto w = normalize(synthesize_by_cycles(cube_matching_graph()));
  std::printf("cube weights: red %s pi, blue %s pi\n", to_string(w.w[0]).c_str(), to_string(w.w[8]).c_str());

  auto poly = horocyclic_polygon({0.0, -2.0, -4.0}, {4.0, 4.0, 4.0});
  std::printf("horocyclic triangle cone angle %.6f\n", cone_angle(poly));
  return 0;
}
