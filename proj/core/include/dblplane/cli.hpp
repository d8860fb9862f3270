#ifndef DBLPLANE_CLI_HPP
#define DBLPLANE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dblplane/classify.hpp"

namespace dblplane {

enum class Command { Classify, Verify, PlaneModel, Moduli, Selftest };

struct RunConfig {
  Command command = Command::Classify;
  unsigned bounds_n = 12;
  std::size_t r_cap = 8;
  std::size_t order_cap = 1000;
  std::uint64_t seed = 1;
  std::string format = "table";  // or "json"
  std::string out;               // empty = stdout
  unsigned threads = 1;
  std::string input;             // candidate/spec file, or "I"/"II"
  std::string write_candidates;  // directory, classify only
};

// Exit codes: 0 success and all expectations met, 1 verification mismatch,
// 2 input error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);  // stdout/stderr

}  // namespace dblplane

#endif
