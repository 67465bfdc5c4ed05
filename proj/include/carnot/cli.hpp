#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace carnot::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Seed used when --seed is absent: CARNOT_SEED if set, else kDefaultSeed.
std::uint64_t default_seed();

/// Parses `key = value` lines; `#` starts a comment. Throws ConfigError on
/// lines without '='.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carnot::cli
