#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grasslab::cli {

enum ExitCode : int {
  kOk = 0,
  kBadArgs = 1,
  kBudget = 2,
  kDiscrepancy = 3,  // enumeration succeeded and contradicts a claimed value
  kNotInduced = 4,
  kDegenerate = 5,
};

/// Runs one grasslab command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory of the enumeration cache: the flag value when given, else
/// $GRASSLAB_CACHE, else empty (caching off).
std::string resolve_cache_dir(const std::string& flag_value);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void write_file_atomic(const std::string& path, const std::string& content);

inline constexpr int kCacheFormatVersion = 1;

}  // namespace grasslab::cli
