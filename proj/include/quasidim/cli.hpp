#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "quasidim/latcount.hpp"

namespace quasidim::cli {

enum class Command { EhrhartSimplex, EhrhartPolytope, Dimset, System, Count };
enum class CountKind { Simplex, Polytope, VA, VARecursive, Exact };
enum class OutputMode { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitGuardRail = 2;

struct RunConfig {
  Command command = Command::EhrhartSimplex;
  CountKind count_kind = CountKind::Simplex;
  std::string weights;  // "2,1"
  std::string points;   // "2,1;0,3"
  std::string file;     // JSON input path
  std::int64_t r = 0;   // argument for count subcommands
  OutputMode output = OutputMode::Text;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Executes one command. Returns 0 on success, 1 on parse/validation errors,
/// 2 when a guard rail (enumeration cap, subset explosion) is exceeded.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quasidim::cli
