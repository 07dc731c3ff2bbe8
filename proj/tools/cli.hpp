#pragma once

#include <atomic>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace homx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

struct Environment {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    /// Worker count when --jobs is absent.
    unsigned default_jobs = 1;
    /// Raised by an interrupt handler; searches stop and report what they have.
    const std::atomic<bool>* stop = nullptr;
};

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, Environment env);

/// HOMX_JOBS parsed as a positive integer; 1 when unset.
/// ParameterError on anything else.
unsigned jobs_from_environment(const char* value);

}  // namespace homx::cli
