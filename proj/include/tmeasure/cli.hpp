#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmeasure::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command line (without the program name). The JSON report goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace tmeasure::cli
