#pragma once

// Deterministic derivative-free maximization: seeded multi-start
// Nelder-Mead with restart rounds, golden-section line search, and a
// cyclic coordinate polish.  Every random stream is derived from
// (seed, start index), so results do not depend on scheduling.

#include <cstdint>
#include <functional>
#include <vector>

namespace neil::opt {

// splitmix64: tiny, portable, bit-stable across platforms
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// per-start stream derived from (seed, index)
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index);

using Objective = std::function<double(const std::vector<double>&)>;

// score for infeasible/degenerate evaluations
inline constexpr double kRejected = -1e300;

struct NmOptions {
    int max_evals = 2000;   // total across restart rounds
    int restarts = 2;       // extra rounds around the incumbent, shrinking step
    double step = 0.25;     // initial simplex edge
    double ftol_rel = 1e-11;
    double ftol_abs = 1e-13;
};

struct NmResult {
    std::vector<double> x;
    double f = kRejected;
    long evals = 0;
    bool converged = false;
};

NmResult nelder_mead_max(const Objective& f, const std::vector<double>& x0,
                         const NmOptions& opt);

struct MultiStartOptions {
    int starts = 64;
    std::uint64_t seed = 0;
    double init_radius = 0.8;  // random starts drawn uniformly from [-r, r]^dim
    NmOptions nm;
    bool parallel = true;
};

struct MultiStartResult {
    NmResult best;
    long total_evals = 0;
    int best_start = -1;
};

// seeded_starts are run first (indices 0..), then random starts fill up to
// opt.starts; ties in the final reduction go to the lowest start index
MultiStartResult multi_start_max(int dim, const Objective& f,
                                 const std::vector<std::vector<double>>& seeded_starts,
                                 const MultiStartOptions& opt);

// golden-section maximization on [lo, hi]
double golden_max(const std::function<double(double)>& g, double lo, double hi,
                  int iters, double* arg = nullptr);

// cyclic golden-section refinement coordinate by coordinate, then along the
// caller-supplied directions; span shrinks each cycle
NmResult coordinate_polish(const Objective& f, std::vector<double> x, double span,
                           int cycles,
                           const std::vector<std::vector<double>>& extra_dirs = {});

}  // namespace neil::opt
