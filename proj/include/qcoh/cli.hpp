#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcoh {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // parse failure, bad flags, unknown demo
inline constexpr int kExitValidation = 3;  // input is not a valid state / channel
inline constexpr int kExitUnknownF = 4;    // f_spec rejected by the registry
inline constexpr int kExitDimension = 5;
inline constexpr int kExitSuiteFailed = 6;
inline constexpr int kExitInternal = 1;

// args excludes the program name. JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcoh
