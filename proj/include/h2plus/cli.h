#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/// Command-line front end. Commands: levels, spectrum, rate, cavity, validate, fit.
namespace h2plus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kValidation = 3 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace h2plus::cli
