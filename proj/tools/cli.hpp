#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kgscatter::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCheckFailed = 3,
  kNumerical = 4,
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kgscatter::cli
