#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diracbox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

/// Entry point of the `diracbox` tool; `args` excludes the program name.
/// Returns 0 on success, 1 on a usage error (message on `err`), 2 on a
/// numerical or acceptance failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diracbox::cli
