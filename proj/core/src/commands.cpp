#include "su2knots/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "su2knots/census.hpp"
#include "su2knots/construct.hpp"
#include "su2knots/errors.hpp"
#include "su2knots/groups.hpp"
#include "su2knots/slopes.hpp"
#include "su2knots/solver.hpp"

namespace su2knots {

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos
                                                           : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

long long to_ll(const std::string& s, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<Tangle> parse_tangles(const std::string& text) {
  std::vector<Tangle> tangles;
  for (const std::string& piece : split(text, ',')) {
    const std::size_t slash = piece.find('/');
    if (slash == std::string::npos) {
      throw InputError("bad tangle '" + piece + "', expected q/p");
    }
    tangles.push_back({static_cast<int>(to_ll(piece.substr(0, slash), "tangle numerator")),
                       static_cast<int>(to_ll(piece.substr(slash + 1), "tangle denominator"))});
  }
  return tangles;
}

std::array<int, 3> parse_k_triple(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3) throw InputError("selector must be k1,k2,k3");
  return {static_cast<int>(to_ll(parts[0], "selector")),
          static_cast<int>(to_ll(parts[1], "selector")),
          static_cast<int>(to_ll(parts[2], "selector"))};
}

TorusKnotParams parse_torus_knot(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 2) throw InputError("torus knot parameters must be p,q");
  return TorusKnotParams::normalized(to_ll(parts[0], "torus knot p"),
                                     to_ll(parts[1], "torus knot q"));
}

std::string quaternion_field(const SU2& g) {
  return format_real(g.w()) + " " + format_real(g.x()) + " " + format_real(g.y()) +
         " " + format_real(g.z());
}

std::string join_ints(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]);
}

}  // namespace

CommandOutcome run_montesinos_witness(const std::string& tangles,
                                      const std::optional<std::string>& k_select) {
  const std::vector<Tangle> parsed = parse_tangles(tangles);
  const MontesinosKnot knot = montesinos_validate(parsed);
  std::optional<std::array<int, 3>> k;
  if (k_select) k = parse_k_triple(*k_select);

  const WitnessCertificate w = witness_montesinos(knot, k);
  const SimplicityReport report = classify_knot(knot);

  CertificateDocument doc(kSchemaVersion, "montesinos-witness");
  doc.add("input.tangles", tangles);
  doc.add("input.k", k_select ? *k_select : "auto");
  doc.add("result.tangle-count", std::to_string(knot.tangle_count()));
  doc.add("result.determinant", std::to_string(knot.determinant()));
  doc.add("result.verdict", to_string(report.verdict));
  doc.add("result.triangle-orders", join_ints(w.p));
  doc.add("result.k", join_ints(w.k));
  doc.add("result.lift-sign", std::to_string(w.lift_sign));
  doc.add("result.axis-separation", format_real(w.axis_separation));
  doc.add("result.image.a1", quaternion_field(w.images[0]));
  doc.add("result.image.a2", quaternion_field(w.images[1]));
  doc.add("result.image.a3", quaternion_field(w.images[2]));
  doc.add("result.image.t", quaternion_field(w.images[3]));
  doc.add("result.max-relator-residual", format_real(w.max_relator_residual));
  doc.add("result.meridian-trace", format_real(w.meridian_trace));
  doc.add("result.delta-image-cyclic", w.delta_image_cyclic ? "true" : "false");
  doc.add("result.conjugator-nullity", std::to_string(w.conjugator_nullity));

  const double axis_margin =
      norm3(cross3(w.images[0].axis(), w.images[1].axis()));
  doc.add_check("relator-residual", w.max_relator_residual < 1e-9,
                format_real(w.max_relator_residual));
  doc.add_check("meridian-trace", std::abs(w.meridian_trace) < 1e-9,
                format_real(w.meridian_trace));
  doc.add_check("delta-image-noncyclic", !w.delta_image_cyclic,
                format_real(axis_margin));
  doc.add_check("conjugator-nullity", w.conjugator_nullity == 1,
                std::to_string(w.conjugator_nullity));

  return {doc.all_checks_pass() ? kExitVerified : kExitNumerical, std::move(doc)};
}

CommandOutcome run_two_bridge_census(int p, int q, int grid) {
  int projective_only = 0;
  int tangencies = 0;
  const std::vector<TraceFreeCharacter> roots =
      trace_free_census(p, q, grid, 1e-9, &projective_only, &tangencies);
  const std::vector<TraceFreeCharacter> doubled = trace_free_census(p, q, 2 * grid);
  const SimplicityReport report = classify_knot_two_bridge(p, q);
  const int expected = expected_binary_dihedral_count(report.determinant);

  double min_axis_margin = 2.0;
  bool all_irreducible = true;
  bool all_binary_dihedral = true;
  for (const TraceFreeCharacter& root : roots) {
    const SU2 a = census_generator_a();
    const SU2 b = census_generator_b(root.t);
    const std::vector<SU2> pair{a, b};
    all_irreducible = all_irreducible && is_irreducible_pair(a, b);
    all_binary_dihedral = all_binary_dihedral && is_binary_dihedral_image(pair);
    min_axis_margin = std::min(min_axis_margin, norm3(cross3(a.axis(), b.axis())));
  }

  CertificateDocument doc(kSchemaVersion, "two-bridge-census");
  doc.add("input.p", std::to_string(p));
  doc.add("input.q", std::to_string(q));
  doc.add("input.grid", std::to_string(grid));
  doc.add("result.determinant", std::to_string(report.determinant));
  doc.add("result.verdict", to_string(report.verdict));
  doc.add("result.expected-count", std::to_string(expected));
  doc.add("result.count", std::to_string(roots.size()));
  doc.add("result.count-doubled-grid", std::to_string(doubled.size()));
  doc.add("result.projective-only-roots", std::to_string(projective_only));
  doc.add("result.tangency-warnings", std::to_string(tangencies));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    doc.add("result.character." + std::to_string(i + 1),
            "t=" + format_real(roots[i].t) + " trace-ab=" + format_real(roots[i].trace_ab) +
                " residual=" + format_real(roots[i].residual));
  }

  doc.add_check("count-matches-expected",
                static_cast<int>(roots.size()) == expected,
                std::to_string(static_cast<int>(roots.size()) - expected));
  doc.add_check("grid-doubling-stable", doubled.size() == roots.size(),
                std::to_string(static_cast<long long>(doubled.size()) -
                               static_cast<long long>(roots.size())));
  doc.add_check("all-irreducible", all_irreducible, format_real(min_axis_margin));
  doc.add_check("all-binary-dihedral", all_binary_dihedral,
                all_binary_dihedral ? "1" : "0");

  return {doc.all_checks_pass() ? kExitVerified : kExitNumerical, std::move(doc)};
}

CommandOutcome run_splice_lspace(const std::string& k1, const std::string& k2,
                                 int spot_checks) {
  const TorusKnotParams t1 = parse_torus_knot(k1);
  const TorusKnotParams t2 = parse_torus_knot(k2);
  if (spot_checks < 0) throw InputError("spot-checks must be >= 0");

  const SpliceReport report = classify_splice(t1, t2, spot_checks);
  const LSpaceCertificate& cert = report.lspace;
  const GluingMatrix glue = gluing_matrix(t1, t2);

  CertificateDocument doc(kSchemaVersion, "splice-lspace");
  doc.add("input.k1", std::to_string(t1.p) + "," + std::to_string(t1.q));
  doc.add("input.k2", std::to_string(t2.p) + "," + std::to_string(t2.q));
  doc.add("result.case", std::to_string(cert.case_tag));
  doc.add("result.seifert-slope.1", std::to_string(t1.seifert_slope()));
  doc.add("result.seifert-slope.2", std::to_string(t2.seifert_slope()));
  doc.add("result.lspace-interval.1", to_string(lspace_interval(t1)));
  doc.add("result.lspace-interval.2", to_string(lspace_interval(t2)));
  doc.add("result.complement.2", complement_to_string(cert));
  doc.add("result.image-interval",
          "[" + to_string(cert.image_lo) + ", " + to_string(cert.image_hi) + "]");
  doc.add("result.su2-cyclic", report.su2_cyclic ? "true" : "false");
  doc.add("result.alternating-dbc", report.alternating_dbc ? "true" : "false");
  doc.add("result.conjecture-instance", report.conjecture_instance ? "true" : "false");

  std::ostringstream det_os;
  det_os << glue.det();
  doc.add_check("gluing-det", glue.det() == -1, det_os.str());
  doc.add_check("pole-outside-complement", cert.pole_outside_complement,
                cert.pole_outside_complement ? "1" : "0");
  doc.add_check("containment", cert.containment, cert.containment ? "1" : "0");
  doc.add_check("spot-checks", cert.spot_checks_pass,
                std::to_string(cert.spot_checks));

  return {doc.all_checks_pass() ? kExitVerified : kExitNegative, std::move(doc)};
}

CommandOutcome run_solve(const SolveArgs& args) {
  SolveProblem problem;
  problem.presentation = parse_presentation(args.presentation_text);
  problem.projective = args.projective;
  problem.restarts = args.restarts;
  problem.seed = args.seed;
  problem.tol = args.tol;
  if (!args.trace_free.empty()) {
    for (const std::string& name : split(args.trace_free, ',')) {
      const int gen = problem.presentation.generator_index(name);
      if (gen < 0) throw InputError("trace-free: unknown generator '" + name + "'");
      problem.trace_constraints.push_back({gen, 0.0});
    }
  }

  const std::vector<SolveResult> results = solve(problem);
  int irreducible = 0;
  for (const SolveResult& r : results) {
    if (r.irreducible) ++irreducible;
  }

  CertificateDocument doc(kSchemaVersion, "solve");
  doc.add("input.presentation", presentation_to_line(problem.presentation));
  doc.add("input.trace-free", args.trace_free.empty() ? "none" : args.trace_free);
  doc.add("input.projective", args.projective ? "true" : "false");
  doc.add("input.restarts", std::to_string(args.restarts));
  doc.add("input.seed", std::to_string(args.seed));
  doc.add("input.tol", format_real(args.tol));
  doc.add("result.count", std::to_string(results.size()));
  doc.add("result.irreducible-count", std::to_string(irreducible));
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SolveResult& r = results[i];
    doc.add("result.character." + std::to_string(i + 1),
            "residual=" + format_real(r.residual) +
                " irreducible=" + (r.irreducible ? std::string("true") : "false") +
                " key=" + character_key_to_string(r.character_key));
  }

  return {results.empty() ? kExitNegative : kExitVerified, std::move(doc)};
}

}  // namespace su2knots
