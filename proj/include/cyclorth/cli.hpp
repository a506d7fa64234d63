#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclorth/structure.hpp"

namespace cyclorth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the cache directory when --cache-dir
/// is absent.
inline constexpr const char* kCacheDirEnv = "CYCLORTH_CACHE_DIR";
inline constexpr const char* kCacheFileName = "phi.cache";

/// In-process seams for tests; the shipped binary passes none.
struct Hooks {
  OperandHook operand_hook;
};

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 a violation was found, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace cyclorth::cli
