#pragma once

#include "flagiso/classify.hpp"
#include "flagiso/rootsys.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace flagiso::cli {

struct CliConfig {
  std::string command;
  char family = 'A';
  int rank = 1;
  std::vector<int> theta;  // 1-based simple-root indices
  std::string format = "table";
  bool verify = false;
  int max_rank = 4;
  std::string families = "ABCDEFG";
  int jobs = 0;  // 0: hardware concurrency
};

/// Entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

std::string cmd_mclasses(DynkinType dynkin, const std::string& format);
/// Returns false on an oracle disagreement (only possible with verify).
bool cmd_classify(const CliConfig& cfg, std::ostream& out);
bool cmd_sweep(const CliConfig& cfg, std::ostream& out);

} // namespace flagiso::cli
