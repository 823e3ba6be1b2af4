#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freudlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadConfig = 2,
  kPrecisionCap = 3,
  kVerifyFailed = 4,
};

struct RunConfig {
  std::string command;
  int n_max = 30;
  /// Positional masses lambda_0, lambda_1, ... on derivatives 0, 1, ... at
  /// the origin. Empty selects the command default.
  std::vector<std::string> lambdas;
  long prec_bits = 256;
  std::string method = "newton";
  std::string format = "json";
  /// Empty means standard output.
  std::string out_path;
  std::string tol = "1e-20";
  /// Complex sample points "1.5", "2+0.5i", "1-i".
  std::vector<std::string> xs;
  std::vector<int> ns;
  int r = 2;
  /// Largest Gram-Schmidt index for `limits` with derivative masses.
  int gs_n_max = 120;
  /// `ratio`: emit n^(1/4) P_{n-1}/P_n samples instead of P_n/Q_n.
  bool p_ratio = false;
};

/// Parses argv into a config. Returns kOk with `config` filled, or the exit
/// code to use (help requests give kOk with an empty command).
int parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
               std::ostream& err);

/// Runs one command, writing the table to config.out_path or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace freudlab::cli
