#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <typent/serialize.hpp>

namespace typent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

// Runs the tool on argv (argv[0] is the program name). Reports go to the
// --output file or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 10000;
  int states = 1000;
  unsigned threads = 0;
};

// Each returns a result object with a top-level boolean "pass".
Json verify_pauli_identities(const VerifyOptions& options);
Json verify_gram_invariance(const VerifyOptions& options);
Json verify_classical_subsystem(const VerifyOptions& options);
Json verify_boxworld(const VerifyOptions& options);

}  // namespace typent::cli
