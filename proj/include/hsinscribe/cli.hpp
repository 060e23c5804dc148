#pragma once

#include "admissible.hpp"
#include "corpus.hpp"
#include "hs_metric.hpp"
#include "ideal_polyhedron.hpp"
#include "io.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hs::cli {

using io::Json;

enum Exit { kPass = 0, kViolated = 1, kInputError = 2 };

constexpr double kDefaultTol = 1e-9;

struct Options {
  double tol = kDefaultTol;
  uint64_t seed = 1;
  bool seeded = false;
  std::string format = "json";
  std::optional<double> deform;
  std::string mutate;  // "" or "angle-sign"
};

// --tol beats HS_INSCRIBE_TOL beats the default
inline double resolve_tol(std::optional<double> flag) {
  if (flag) {
    if (!(*flag > 0) || !std::isfinite(*flag)) fail(Errc::MalformedInput, "--tol must be a positive number");
    return *flag;
  }
  if (const char* env = std::getenv("HS_INSCRIBE_TOL")) {
    char* end = nullptr;
    double t = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(t > 0) || !std::isfinite(t))
      fail(Errc::MalformedInput, std::string("HS_INSCRIBE_TOL is not a positive number: ") + env);
    return t;
  }
  return kDefaultTol;
}

struct Report {
  Json j;
  int exit = kPass;
};

inline Json condition(const std::string& name, bool pass, double residual, const std::string& detail = "") {
  Json c = {{"name", name}, {"pass", pass}, {"residual", residual}};
  if (!detail.empty()) c["detail"] = detail;
  return c;
}

inline Report start(const std::string& command, const std::string& input, const std::string& bytes, double tol) {
  Report r;
  r.j["command"] = command;
  if (!input.empty()) r.j["input"] = input;
  if (!bytes.empty()) r.j["input_digest"] = io::digest(bytes);
  r.j["tol"] = tol;
  r.j["conditions"] = Json::array();
  return r;
}

inline void finish(Report& r) {
  bool ok = true;
  for (const auto& c : r.j["conditions"]) ok &= c["pass"].get<bool>();
  if (!ok && r.exit == kPass) r.exit = kViolated;
  r.j["exit_status"] = r.exit;
}

inline Report error_report(const std::string& command, const std::string& input, const Error& e) {
  Report r;
  r.j["command"] = command;
  if (!input.empty()) r.j["input"] = input;
  r.j["error"] = errc_name(e.code());
  r.j["message"] = e.what();
  r.exit = kInputError;
  r.j["exit_status"] = r.exit;
  return r;
}

inline Json cycles_json(const std::vector<AlternatingCycle>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(c.vertices);
  return out;
}

inline Json rationals_json(const std::vector<Rational>& xs, bool pi) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(io::to_json(x, pi));
  return out;
}

// ---- check-graph ----

inline Report check_colored(Report r, const ColoredGraph& cg, const std::optional<std::vector<Rational>>& given,
                            bool given_pi) {
  auto c2 = check_C2(cg);
  r.j["cover"] = {cg.cover[0], cg.cover[1]};
  r.j["colors"] = Json::array();
  for (auto c : cg.color) r.j["colors"].push_back(to_string(c));
  r.j["conditions"].push_back(condition("C2", c2.ok, static_cast<double>(c2.failing_edges.size()), c2.note));
  r.j["witness"] = c2.note;
  r.j["witness_cycles"] = cycles_json(c2.witnesses);
  Json failing = Json::array();
  for (int e : c2.failing_edges) failing.push_back({cg.g.edge(e).first, cg.g.edge(e).second});
  r.j["failing_edges"] = failing;

  auto lp = lp_feasible(cg);
  r.j["lp"] = {{"feasible", lp.feasible}, {"margin", io::to_json(lp.margin, false)}};
  if (!lp.feasible) {
    bool ok = !lp.certificate.empty() && verify_certificate(cg, lp.certificate);
    r.j["lp"]["certificate"] = rationals_json(lp.certificate, false);
    r.j["lp"]["certificate_verified"] = ok;
  }
  r.j["conditions"].push_back(condition("LP", lp.feasible, 0.0, lp.feasible ? "strictly feasible" : "infeasible"));
  r.j["conditions"].push_back(condition("checker_agrees_with_lp", c2.ok == lp.feasible, 0.0));

  if (c2.ok) {
    auto wg = synthesize_by_cycles(cg);
    auto wc = verify_weights(wg);
    r.j["weights"] = rationals_json(wg.w, wg.pi_units);
    r.j["conditions"].push_back(condition("W1", wc.w1, static_cast<double>(wc.bad_edges.size())));
    r.j["conditions"].push_back(condition("W2", wc.w2, static_cast<double>(wc.bad_vertices.size())));
    auto nw = normalize(wg);
    r.j["normalized_weights"] = rationals_json(nw.w, true);
  }
  if (given) {
    WeightedGraph wg{cg, *given, given_pi, {}};
    auto wc = verify_weights(wg);
    r.j["conditions"].push_back(condition("input_W1", wc.w1, static_cast<double>(wc.bad_edges.size())));
    r.j["conditions"].push_back(condition("input_W2", wc.w2, static_cast<double>(wc.bad_vertices.size())));
  }
  return r;
}

inline Report cmd_check_graph(const std::string& path, const Options& o) {
  try {
    auto bytes = io::read_file(path);
    auto in = io::graph_from_json(io::parse(bytes));
    Report r = start("check-graph", path, bytes, o.tol);
    if (!in.note.empty()) r.j["note"] = in.note;
    bool poly = is_polyhedral(in.g);
    r.j["conditions"].push_back(condition("polyhedral", poly, 0.0, poly ? "3-connected planar" : "not 3-connected planar"));
    if (!poly) {
      finish(r);
      return r;
    }
    std::optional<ColoredGraph> cg;
    if (in.cover) {
      cg = ColoredGraph::from_cover(in.g, *in.cover);
      if (in.colors && *in.colors != cg->color) fail(Errc::InvalidCover, "edge colors disagree with the given cycles");
    } else if (auto cover = find_two_cycle_cover(in.g, in.colors ? &*in.colors : nullptr)) {
      cg = ColoredGraph::from_cover(in.g, *cover);
    }
    r.j["conditions"].push_back(condition("C1", cg.has_value(), 0.0, cg ? "two-cycle cover" : "no two-cycle cover"));
    if (cg) r = check_colored(std::move(r), *cg, in.weights, in.pi_units);
    finish(r);
    return r;
  } catch (const Error& e) {
    return error_report("check-graph", path, e);
  }
}

// ---- verify ----

inline AngleGraph mutate_angles(AngleGraph g, const std::string& mutate) {
  if (mutate == "angle-sign")
    for (auto& t : g.theta) t = std::abs(t);
  return g;
}

inline void polyhedron_checks(Report& r, const IdealPolyhedron& P, const Options& o, bool verbose) {
  auto g = mutate_angles(dihedral_angles(P, o.tol), o.mutate);
  auto adm = verify_admissible(g, o.tol);
  for (const auto& c : adm.conditions) r.j["conditions"].push_back(condition(c.name, c.pass, c.residual, c.detail));
  auto c2 = check_C2(P.colored());
  r.j["conditions"].push_back(condition("C2", c2.ok, static_cast<double>(c2.failing_edges.size()), c2.note));

  auto sp = shape_parameters(P);
  auto rel = verify_vertex_relations(sp);
  auto sh = shearings(sp);
  const double eq_tol = 10 * o.tol;
  r.j["conditions"].push_back(condition("shape_product", rel.max_product < eq_tol, rel.max_product));
  r.j["conditions"].push_back(condition("shape_closure", rel.max_closure < eq_tol, rel.max_closure));
  r.j["conditions"].push_back(condition("shearing_sums", sh.max_abs_sum < eq_tol, sh.max_abs_sum));
  double mis = red_angle_mismatch(P, sp, g);
  r.j["conditions"].push_back(condition("red_arg_tau", mis < 1e-7, mis, "arg tau against theta on red edges"));

  r.j["p"] = P.p;
  r.j["q"] = P.q;
  r.j["blue_sum"] = adm.blue_sum;
  r.j["blue_sum_gap"] = adm.blue_sum + 2 * kPi;
  if (!verbose) return;
  r.j["vertex_sums"] = adm.vertex_sums;
  Json angles = Json::array();
  for (size_t e = 0; e < g.edges.size(); ++e)
    angles.push_back({{"u", g.edges[e].first}, {"v", g.edges[e].second}, {"color", to_string(g.colors[e])}, {"theta", g.theta[e]}});
  r.j["angles"] = angles;
  Json shapes = Json::array(), blue = Json::array();
  for (size_t e = 0; e < sp.tau.size(); ++e) {
    auto [a, b] = sp.tri.edges[e];
    shapes.push_back({{"u", a}, {"v", b}, {"re", sp.tau[e].real()}, {"im", sp.tau[e].imag()}, {"sigma", sp.sigma[e]}, {"phi", sp.phi[e]}});
    int he = sp.tri.hull_edge[e] ? P.hull.edge_index(a, b) : -1;
    if (he >= 0 && P.colors[he] == Color::Blue)
      blue.push_back({{"u", a}, {"v", b}, {"phi", sp.phi[e]}, {"theta", g.theta[he]}});
  }
  r.j["shape_parameters"] = shapes;
  r.j["blue_edges_report"] = blue;
  r.j["vertex_residuals"] = {{"product", rel.product}, {"closure", rel.closure}, {"shearing", sh.vertex_sums}};
}

inline Report cmd_verify(const std::string& path, const Options& o) {
  try {
    auto bytes = io::read_file(path);
    auto vs = io::vertices_from_json(io::parse(bytes), o.tol);
    auto P = build(std::move(vs), o.tol);
    Report r = start("verify", path, bytes, o.tol);
    polyhedron_checks(r, P, o, true);
    finish(r);
    return r;
  } catch (const Error& e) {
    return error_report("verify", path, e);
  }
}

// ---- generate ----

struct Generated {
  Json polyhedron;
  int exit = kPass;
  std::string error;
};

inline Generated cmd_generate(int p, int q, double t, const Options& o) {
  try {
    auto P = o.seeded ? generate_random(p, q, t, o.seed) : generate_two_circle(p, q, t);
    if (o.deform) P = deform_toward_planes(P, *o.deform);
    return {io::to_json(P), kPass, ""};
  } catch (const Error& e) {
    return {Json(), kInputError, std::string(e.what())};
  }
}

// ---- horogon ----

inline void polygon_checks(Report& r, const HorocyclicPolygon& poly, double tol, bool verbose) {
  double cone = cone_angle(poly);
  double worst_id = 0, worst_delta = 0;
  Json corners = Json::array();
  for (int i = 0; i < poly.p(); ++i) {
    auto c = corner(poly, i);
    worst_id = std::max(worst_id, c.identity);
    worst_delta = std::max(worst_delta, std::abs(c.delta - c.delta_direct) / std::max(1.0, c.delta));
    corners.push_back({{"alpha", c.alpha}, {"delta", c.delta}, {"delta_direct", c.delta_direct}, {"identity", c.identity}});
  }
  r.j["conditions"].push_back(condition("cone_angle_below_2pi", cone < 2 * kPi, 2 * kPi - cone));
  r.j["conditions"].push_back(condition("corner_identity", worst_id < tol, worst_id, "cosh(delta) sin(alpha/2) = 1"));
  r.j["conditions"].push_back(condition("delta_agreement", worst_delta < tol, worst_delta));
  r.j["p"] = poly.p();
  r.j["cone_angle"] = cone;
  if (verbose) r.j["corners"] = corners;
}

inline Report cmd_horogon(const std::string& path, const Options& o) {
  try {
    auto bytes = io::read_file(path);
    auto in = io::horogon_from_json(io::parse(bytes));
    auto poly = horocyclic_polygon(in.bases, in.sizes, o.tol);
    Report r = start("horogon", path, bytes, o.tol);
    polygon_checks(r, poly, o.tol, true);
    if (o.deform) {
      try {
        auto d = deform_polygon(poly, *o.deform, o.tol);
        r.j["conditions"].push_back(condition("common_horocycle", d.max_residual < o.tol, d.max_residual));
        r.j["deformed"] = io::to_json(d.poly);
        r.j["deformed_cone_angle"] = cone_angle(d.poly);
        r.j["common_horocycle_residuals"] = d.common_horocycle;
      } catch (const Error& e) {
        if (e.code() != Errc::VerticesMerge) throw;
        r.j["conditions"].push_back(condition("common_horocycle", false, 0.0, e.what()));
      }
    }
    finish(r);
    return r;
  } catch (const Error& e) {
    return error_report("horogon", path, e);
  }
}

// ---- corpus ----

inline Report cmd_corpus(const Options& o) {
  Report r = start("corpus", "", "", o.tol);
  Json cases = Json::array();
  auto run = [&](const std::string& name, auto&& body) {
    Report sub;
    sub.j["conditions"] = Json::array();
    try {
      body(sub);
    } catch (const Error& e) {
      sub.j["conditions"].push_back(condition("no_error", false, 0.0, std::string(e.what())));
    }
    bool ok = true;
    for (const auto& c : sub.j["conditions"]) ok &= c["pass"].get<bool>();
    Json failed = Json::array();
    for (const auto& c : sub.j["conditions"])
      if (!c["pass"].get<bool>()) failed.push_back(c["name"]);
    cases.push_back({{"name", name}, {"pass", ok}, {"failed", failed}});
    r.j["conditions"].push_back(condition(name, ok, 0.0));
  };

  for (const auto& [name, P] : polyhedron_corpus()) {
    run(name, [&, &P = P](Report& sub) {
      polyhedron_checks(sub, P, o, false);
      if (P.n() >= 4 && P.n() <= 10) {
        int rank = angle_jacobian_rank(P);
        sub.j["conditions"].push_back(condition("rank", rank == 2 * P.n() - 6, rank - (2.0 * P.n() - 6)));
      }
    });
  }
  run("wheel4", [&](Report& sub) {
    auto c2 = check_C2(wheel4_graph());
    sub.j["conditions"].push_back(condition("apex_dominates", c2.ok && c2.note == "apex dominates", 0.0));
  });
  run("cube_matching", [&](Report& sub) {
    auto cg = cube_matching_graph();
    auto wg = synthesize_by_cycles(cg);
    bool expected = true;
    for (int e = 0; e < cg.m(); ++e) expected &= wg.w[e] == (cg.color[e] == Color::Red ? 1 : -2);
    sub.j["conditions"].push_back(condition("weights_red_1_blue_-2", expected && verify_weights(wg).ok(), 0.0));
  });
  run("nested_squares_reconstruction", [&](Report& sub) {
    auto cg = nested_squares_graph();
    auto lp = lp_feasible(cg);
    bool cert = !lp.feasible && verify_certificate(cg, lp.certificate);
    sub.j["conditions"].push_back(condition("checker_infeasible", !check_C2(cg).ok, 0.0));
    sub.j["conditions"].push_back(condition("lp_infeasible_with_certificate", cert, 0.0));
  });
  Rng rng(o.seed);
  for (int p = 2; p <= 8; ++p)
    run("horogon_" + std::to_string(p), [&](Report& sub) {
      auto poly = random_horocyclic_polygon(p, rng);
      polygon_checks(sub, poly, o.tol, false);
      auto d = deform_polygon(poly, 0.5, o.tol);
      sub.j["conditions"].push_back(condition("common_horocycle", d.max_residual < o.tol, d.max_residual));
    });
  r.j["cases"] = cases;
  r.j["mutation"] = o.mutate.empty() ? "none" : o.mutate;
  finish(r);
  return r;
}

// ---- output ----

inline std::string render_text(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, val] : j.items()) {
    if (key == "conditions") {
      for (const auto& c : val) {
        out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (c.contains("residual")) out << "  residual=" << c["residual"].dump();
        if (c.contains("detail")) out << "  " << c["detail"].get<std::string>();
        out << "\n";
      }
    } else if (val.is_primitive()) {
      out << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    } else {
      out << key << ": " << val.dump() << "\n";
    }
  }
  return out.str();
}

inline std::string render(const Json& j, const std::string& format) {
  return format == "text" ? render_text(j) : j.dump(2) + "\n";
}

}  // namespace hs::cli
