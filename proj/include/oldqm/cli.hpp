#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oldqm {

inline constexpr const char* artifact_version = "0.1.0";

// Dispatch one command line (without the program name). Data goes to out,
// diagnostics to err. Returns 0 on success, 2 on usage errors, 1 on domain
// errors (supercritical coupling, empty classical band, bracketing failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oldqm
