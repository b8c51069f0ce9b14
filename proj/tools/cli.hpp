#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaussindex/moves.hpp"

namespace gaussindex::cli {

/// Exit codes of the gaussindex tool.
enum ExitCode : int {
  kOk = 0,          // success; also an INCONCLUSIVE comparison
  kDistinct = 1,    // compare found a differing invariant
  kParseError = 2,  // bad Gauss code, flag, predicate or trace
  kCapExceeded = 3,
  kFuzzFailure = 4,
};

/// Runs one command line (without the program name). Codes given as
/// arguments are optional for `compute` and `bound`; stdin is read instead.
/// `fuzz_invariants` is what `fuzz` checks; tests substitute a broken one.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const InvariantFunction& fuzz_invariants = invariant_set);

}  // namespace gaussindex::cli
