#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "su2knots/certificate.hpp"

namespace su2knots {

// Exit-code contract shared by every command:
//   0 = verified, 1 = verified-negative or empty result,
//   2 = invalid input, 3 = numerical failure.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNumerical = 3;

struct CommandOutcome {
  int exit_code;
  CertificateDocument doc;
};

// Tangle list "q1/p1,q2/p2,..."; optional selector "k1,k2,k3".
CommandOutcome run_montesinos_witness(const std::string& tangles,
                                      const std::optional<std::string>& k_select);

CommandOutcome run_two_bridge_census(int p, int q, int grid);

// Torus knot parameters as "p,q" pairs.
CommandOutcome run_splice_lspace(const std::string& k1, const std::string& k2,
                                 int spot_checks);

struct SolveArgs {
  std::string presentation_text;
  std::string trace_free;  // comma-separated generator names, may be empty
  bool projective = false;
  int restarts = 100;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

CommandOutcome run_solve(const SolveArgs& args);

}  // namespace su2knots
