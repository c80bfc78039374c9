#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcamce::cli {

/// Process exit codes; stable across releases.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,   // bad flags, bad parameters or malformed input files
  kIo = 3,      // unreadable input or refused output
  kReject = 4,  // decryption returned the rejection symbol
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcamce::cli
