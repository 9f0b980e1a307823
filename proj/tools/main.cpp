#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "su2knots/commands.hpp"
#include "su2knots/errors.hpp"

namespace {

int emit(const su2knots::CommandOutcome& outcome, const std::string& out_path) {
  const std::string text = outcome.doc.serialize();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return su2knots::kExitInvalidInput;
    }
    out << text;
  }
  return outcome.exit_code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw su2knots::InputError("cannot read presentation file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2) representation certificates for Montesinos knots, "
               "two-bridge censuses and torus-knot splices"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write the certificate to a file instead of stdout")
      ->capture_default_str();

  // montesinos-witness
  auto* witness = app.add_subcommand(
      "montesinos-witness",
      "Construct a trace-free non-dihedral representation witness");
  std::string tangles;
  std::string k_select;
  witness->add_option("--tangles", tangles, "Tangle list q1/p1,q2/p2,...")->required();
  witness->add_option("--k", k_select, "Angle selector triple k1,k2,k3");

  // two-bridge-census
  auto* census = app.add_subcommand(
      "two-bridge-census", "Enumerate trace-free characters of a two-bridge knot group");
  int p = 0, q = 0, grid = 1024;
  census->add_option("--p", p, "Two-bridge parameter p (odd, >= 3)")->required();
  census->add_option("--q", q, "Two-bridge parameter q (0 < q < p, coprime)")->required();
  census->add_option("--grid", grid, "Scan grid size (>= 256)")->capture_default_str();

  // splice-lspace
  auto* splice = app.add_subcommand(
      "splice-lspace", "Certify the L-space gluing criterion for a torus-knot splice");
  std::string k1, k2;
  int spot_checks = 100;
  splice->add_option("--k1", k1, "First torus knot p,q")->required();
  splice->add_option("--k2", k2, "Second torus knot p,q")->required();
  splice->add_option("--spot-checks", spot_checks, "Random exact membership checks")
      ->capture_default_str();

  // solve
  auto* solve = app.add_subcommand(
      "solve", "Random-restart search for SU(2) representations of a presentation");
  std::string presentation_path, trace_free;
  bool projective = false;
  int restarts = 100;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  solve->add_option("--presentation", presentation_path, "Presentation file")->required();
  solve->add_option("--trace-free", trace_free,
                    "Comma-separated generators constrained to trace zero");
  solve->add_flag("--projective", projective, "Accept relators up to sign");
  solve->add_option("--restarts", restarts, "Number of random restarts")
      ->capture_default_str();
  solve->add_option("--seed", seed, "Stream seed")->capture_default_str();
  solve->add_option("--tol", tol, "Acceptance residual")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (witness->parsed()) {
      return emit(su2knots::run_montesinos_witness(
                      tangles, k_select.empty()
                                   ? std::nullopt
                                   : std::optional<std::string>(k_select)),
                  out_path);
    }
    if (census->parsed()) {
      return emit(su2knots::run_two_bridge_census(p, q, grid), out_path);
    }
    if (splice->parsed()) {
      return emit(su2knots::run_splice_lspace(k1, k2, spot_checks), out_path);
    }
    if (solve->parsed()) {
      su2knots::SolveArgs args;
      args.presentation_text = read_file(presentation_path);
      args.trace_free = trace_free;
      args.projective = projective;
      args.restarts = restarts;
      args.seed = seed;
      args.tol = tol;
      return emit(su2knots::run_solve(args), out_path);
    }
  } catch (const su2knots::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return su2knots::kExitInvalidInput;
  } catch (const su2knots::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return su2knots::kExitNumerical;
  }
  return su2knots::kExitInvalidInput;
}
