#pragma once

#include "admissible.hpp"
#include "hs_metric.hpp"
#include "ideal_polyhedron.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hs::io {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, 64 bit
inline std::string digest(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedInput, std::string("bad JSON: ") + e.what());
  }
}

namespace detail {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::MalformedInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(Errc::MalformedInput, std::string("field '") + key + "' has the wrong type");
  }
}

inline double number(const Json& j, const char* key) {
  double x = get<double>(j, key);
  if (!std::isfinite(x)) fail(Errc::MalformedInput, std::string("field '") + key + "' is not finite");
  return x;
}

}  // namespace detail

// ---- polyhedra ----

// An optional "x2" is checked against the quadric and then dropped.
inline std::vector<IdealVertex> vertices_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail(Errc::MalformedInput, "expected an object with a 'vertices' array");
  std::vector<IdealVertex> vs;
  for (const auto& v : j["vertices"]) {
    auto s = detail::get<std::string>(v, "sheet");
    if (s != "+" && s != "-") fail(Errc::MalformedInput, "sheet must be \"+\" or \"-\"");
    IdealVertex x{s == "+" ? Sheet::Plus : Sheet::Minus, detail::number(v, "u0"), detail::number(v, "u1"), ""};
    if (v.contains("label")) x.label = detail::get<std::string>(v, "label");
    if (v.contains("x2")) {
      double x2 = detail::number(v, "x2"), want = sheet_height(x.sheet, x.u0, x.u1);
      if (std::abs(x2 - want) > tol * std::max(1.0, std::abs(want)))
        fail(Errc::NotOnQuadric, "vertex " + std::to_string(vs.size()) + " is off the quadric by " +
                                     std::to_string(std::abs(x2 - want)));
    }
    vs.push_back(std::move(x));
  }
  return vs;
}

inline Json to_json(const IdealPolyhedron& P) {
  Json vs = Json::array();
  for (const auto& v : P.vertices)
    vs.push_back({{"sheet", to_string(v.sheet)}, {"u0", v.u0}, {"u1", v.u1}, {"label", v.label}});
  return {{"vertices", vs}};
}

// ---- graphs ----

// integers that fit in 53 bits stay JSON numbers, larger ones become strings
inline Json big_json(const BigInt& x) {
  if (abs(x) < (BigInt(1) << 53)) return x.convert_to<long long>();
  return x.str();
}

inline Json to_json(const Rational& r, bool pi) {
  return {{"num", big_json(numerator(r))}, {"den", big_json(denominator(r))}, {"pi", pi}};
}

inline Rational rational_from_json(const Json& w) {
  auto part = [&](const char* key) -> BigInt {
    if (!w.contains(key)) fail(Errc::MalformedInput, std::string("weight without '") + key + "'");
    const auto& x = w[key];
    try {
      if (x.is_number_integer()) return BigInt(x.get<long long>());
      if (x.is_string()) return BigInt(x.get<std::string>());
    } catch (const std::exception&) {
    }
    fail(Errc::MalformedInput, std::string("weight field '") + key + "' must be an integer");
  };
  BigInt num = part("num"), den = part("den");
  if (den == 0) fail(Errc::MalformedInput, "zero denominator");
  return Rational(num, den);
}

struct GraphInput {
  Graph g;
  std::optional<std::vector<Color>> colors;
  std::optional<Cover> cover;
  std::optional<std::vector<Rational>> weights;
  bool pi_units = false;
  std::string note;
};

inline GraphInput graph_from_json(const Json& j) {
  GraphInput in;
  int n = detail::get<int>(j, "n");
  if (n < 1) fail(Errc::MalformedInput, "n must be positive");
  in.g = Graph(n);
  if (!j.contains("edges") || !j["edges"].is_array()) fail(Errc::MalformedInput, "missing 'edges' array");
  std::vector<Color> colors;
  std::vector<Rational> weights;
  int with_color = 0, with_weight = 0, with_pi = 0;
  for (const auto& e : j["edges"]) {
    in.g.add_edge(detail::get<int>(e, "u"), detail::get<int>(e, "v"));
    if (e.contains("color")) {
      auto c = detail::get<std::string>(e, "color");
      if (c != "r" && c != "b") fail(Errc::MalformedInput, "color must be \"r\" or \"b\"");
      colors.push_back(c == "r" ? Color::Red : Color::Blue);
      ++with_color;
    }
    if (e.contains("weight")) {
      weights.push_back(rational_from_json(e["weight"]));
      with_pi += e["weight"].value("pi", false) ? 1 : 0;
      ++with_weight;
    }
  }
  const int m = in.g.m();
  if (with_color != 0 && with_color != m) fail(Errc::MalformedInput, "colors must be given on all edges or none");
  if (with_weight != 0 && with_weight != m) fail(Errc::MalformedInput, "weights must be given on all edges or none");
  if (with_pi != 0 && with_pi != m) fail(Errc::MalformedInput, "weights mix pi and plain units");
  if (with_color) in.colors = colors;
  if (with_weight) {
    in.weights = weights;
    in.pi_units = with_pi == m;
  }
  if (j.contains("cycles")) {
    const auto& c = j["cycles"];
    if (!c.is_array() || c.size() != 2) fail(Errc::MalformedInput, "'cycles' must hold two vertex lists");
    Cover cover;
    try {
      cover = {c[0].get<std::vector<int>>(), c[1].get<std::vector<int>>()};
    } catch (const nlohmann::json::exception&) {
      fail(Errc::MalformedInput, "'cycles' must hold integer lists");
    }
    in.cover = cover;
  }
  if (j.contains("note")) in.note = detail::get<std::string>(j, "note");
  return in;
}

inline Json to_json(const ColoredGraph& cg, const std::vector<Rational>* w = nullptr, bool pi = false) {
  Json edges = Json::array();
  for (int e = 0; e < cg.m(); ++e) {
    Json x = {{"u", cg.g.edge(e).first}, {"v", cg.g.edge(e).second}, {"color", to_string(cg.color[e])}};
    if (w) x["weight"] = to_json((*w)[e], pi);
    edges.push_back(x);
  }
  return {{"n", cg.n()}, {"edges", edges}, {"cycles", {cg.cover[0], cg.cover[1]}}};
}

// ---- horocyclic polygons ----

struct HorogonInput {
  std::vector<double> bases, sizes;
};

inline HorogonInput horogon_from_json(const Json& j) {
  HorogonInput h;
  h.bases = detail::get<std::vector<double>>(j, "bases");
  h.sizes = detail::get<std::vector<double>>(j, "sizes");
  for (double x : h.bases)
    if (!std::isfinite(x)) fail(Errc::MalformedInput, "bases must be finite");
  return h;
}

inline Json to_json(const HorocyclicPolygon& poly) { return {{"bases", bases_of(poly)}, {"sizes", sizes_of(poly)}}; }

}  // namespace hs::io
