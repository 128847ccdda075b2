#pragma once

#include <ostream>

namespace ontofit {

// Exit codes.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitLimit = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ontofit
