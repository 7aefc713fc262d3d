#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcycle/length_set.hpp"

namespace lcycle::cli {

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string length_spec = "all";
  LengthSet L = LengthSet::all_at_least(3);
  std::optional<std::int64_t> k;
  bool all_k = false;
  std::int64_t kmax = 5;
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::int64_t nodes = 4096;
  unsigned bits = 128;
  std::optional<std::int64_t> rmax;
  std::optional<double> radius;
  std::optional<double> mu;
  bool brute_force = false;
  Format format = Format::Json;
  std::string csv_path;
  std::string dump_edges;
};

/// Bad command line. `flag` names the offending option when one is known.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, std::string flag = {})
      : std::runtime_error(message), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// argv[0] is the program name. Throws UsageError, or UnsupportedRegime for
/// (n, M) above the critical window on subcommands that need a limit law.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Runs one subcommand; the result goes to `out`, an error object to `err`.
/// Returns the process exit code: 0 on success, 2 for usage errors, 1 otherwise.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

struct Output {
  nlohmann::json json;
  std::string csv;  // simulate and compare only
};

/// Computes a subcommand's result without printing it.
Output execute(const RunConfig& cfg);

}  // namespace lcycle::cli
