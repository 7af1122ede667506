#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kipas::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;       // found, holds, exact, passed
inline constexpr int kNegative = 1; // absent, counterexample, interval, failed
inline constexpr int kError = 2;    // usage, capability or domain error

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace kipas::cli
