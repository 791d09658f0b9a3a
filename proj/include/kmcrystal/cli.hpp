#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kmcrystal/cartan.hpp"

namespace kmcrystal {

/// One command-line job.
struct JobSpec {
  std::string command;  ///< crystal, tensor, order, series, lr, verify-mult, classify
  std::string type_string;
  std::string lambda;  ///< "1,0" or "1,0:-2" (delta suffix, affine only)
  std::string mu;
  std::optional<int> depth;
  std::string order_mode = "minword";
  std::string output = "table";  ///< json, dot or table
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  int threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for malformed input that is not a domain error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated <h_i, w> values with an optional ":d" delta suffix.
WeightVector parse_weight(const CartanData& cd, const std::string& text);

/// Runs a job, writing the artifact to `out` and diagnostics to `err`.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmcrystal
