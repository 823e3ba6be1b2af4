#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  freudlab::cli::RunConfig config;
  const int rc = freudlab::cli::parse_args(argc, argv, config, std::cout, std::cerr);
  if (rc != freudlab::cli::kOk || config.command.empty()) return rc;
  return freudlab::cli::run(config, std::cout, std::cerr);
}
