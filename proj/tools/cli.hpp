#pragma once

#include "poramsey/coloring_search.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace poramsey::cli {

struct RunConfig {
    BigInt max_colorings = BigInt(1) << 32;
    int max_ground_size = 1024;
    int jobs = 1;
    std::uint64_t seed = 20240611;
    std::string format = "json";  // json | table | dot

    SearchLimits limits() const;
};

/// Defaults overridden by PORAMSEY_MAX_COLORINGS, PORAMSEY_MAX_GROUND_SIZE and PORAMSEY_JOBS.
RunConfig config_from_environment();

enum ExitCode { ok = 0, usage = 1, infeasible = 2, internal = 3 };

/// Parses argv, runs one subcommand and writes its artifact to `out`.
/// Returns 0 on a verdict (counterexamples included), 1 on usage or malformed input,
/// 2 when a feasibility ceiling refuses the request, 3 on an internal consistency failure.
int dispatch(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace poramsey::cli
