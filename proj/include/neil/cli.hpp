#pragma once

// Command-line front end: evaluate distances and metrics (closed form or
// oracle), emit grid tables for plotting, list gap sets, and run the
// verification suites.  Output is byte-deterministic for identical
// (argv, seed).

#include "neil/disc.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace neil::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { Dist, Inner, Metric, Gamma0, Kobayashi, Gapset, Cross, Table, Verify };
enum class Method { Closed, Oracle, Both };
enum class Format { Json, Csv };

struct CliConfig {
    Command command = Command::Dist;
    int m = 2, n = 3;
    cplx lambda{0.0, 0.0};
    cplx mu{0.0, 0.0};
    cplx X1{0.0, 0.0}, X2{0.0, 0.0};
    Method method = Method::Closed;
    int degree = -1;
    int starts = 64;
    std::uint64_t seed = 0;
    Format format = Format::Json;
    int grid = 20;
    std::string suite = "all";      // verify
    std::string quantity = "dist";  // table
    std::string cross_op = "dist";  // cross sub-operation
    cplx z1{0.0, 0.0}, w1{0.0, 0.0}, z2{0.0, 0.0}, w2{0.0, 0.0};
};

// throws UsageError on bad flags or invalid parameter combinations; the
// NEIL_SEED environment variable overrides --seed
CliConfig parse_args(const std::vector<std::string>& argv);

// exit code 0 on success, 1 on computation failure, 3 on verify failure
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// parse + run; exit code 2 on usage errors
int main_entry(int argc, char** argv);

}  // namespace neil::cli
