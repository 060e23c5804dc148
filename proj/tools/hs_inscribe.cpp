#include "hsinscribe/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace hs;

int main(int argc, char** argv) {
  CLI::App app{"hs-inscribe: weakly inscribed polyhedra, admissible graphs and horocyclic polygons"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tol_flag;
  cli::Options opt;
  uint64_t seed = 1;
  app.add_option("--tol", tol_flag, "numeric tolerance (default 1e-9, or HS_INSCRIBE_TOL)");
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands; generate then draws random phases");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  auto* check = app.add_subcommand("check-graph", "decide the alternating-cycle condition for a graph file");
  check->add_option("path", path, "graph JSON")->required();

  auto* verify = app.add_subcommand("verify", "angle and metric checks for a polyhedron file");
  verify->add_option("path", path, "polyhedron JSON")->required();

  int p = 0, q = 0;
  double t = 0;
  std::optional<double> deform;
  std::string out_path;
  auto* gen = app.add_subcommand("generate", "emit a two-circle polyhedron");
  gen->add_option("p", p, "vertices on the upper sheet")->required();
  gen->add_option("q", q, "vertices on the lower sheet")->required();
  gen->add_option("t", t, "ring height, > 1")->required();
  gen->add_option("--deform", deform, "slide vertices down to this height");
  gen->add_option("-o,--out", out_path, "write here instead of stdout");

  auto* horo = app.add_subcommand("horogon", "cone angle and corner data of a horocyclic polygon");
  horo->add_option("path", path, "polygon JSON")->required();
  horo->add_option("--deform", deform, "rescale cosh of the vertex distances by 1/k");
  horo->add_flag("--cone-angle", "report the cone angle (always on)");

  bool run_all = false;
  auto* corpus = app.add_subcommand("corpus", "run the bundled instances");
  corpus->add_flag("--run-all", run_all, "run every bundled check");
  corpus->add_option("--mutate", opt.mutate, "inject a known bug")->check(CLI::IsMember({"angle-sign"}));
  corpus->add_option("path", path, "unused");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  try {
    opt.tol = cli::resolve_tol(tol_flag);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return cli::kInputError;
  }
  opt.seed = seed;
  opt.seeded = seed_opt->count() > 0;
  opt.deform = deform;

  if (*gen) {
    auto g = cli::cmd_generate(p, q, t, opt);
    if (g.exit != cli::kPass) {
      std::cerr << g.error << "\n";
      return g.exit;
    }
    std::string text = g.polyhedron.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path);
      if (!(f << text)) {
        std::cerr << "cannot write " << out_path << "\n";
        return cli::kInputError;
      }
    }
    return cli::kPass;
  }

  cli::Report r;
  if (*check) r = cli::cmd_check_graph(path, opt);
  else if (*verify) r = cli::cmd_verify(path, opt);
  else if (*horo) r = cli::cmd_horogon(path, opt);
  else {
    if (!run_all) {
      std::cerr << "corpus: pass --run-all\n";
      return cli::kInputError;
    }
    r = cli::cmd_corpus(opt);
  }
  std::cout << cli::render(r.j, opt.format) << std::flush;
  if (r.exit == cli::kInputError && r.j.contains("message")) std::cerr << r.j["message"].get<std::string>() << "\n";
  return r.exit;
}
