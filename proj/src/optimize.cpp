#include "neil/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace neil::opt {

SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mixer.next();
    return mixer;
}

namespace {

struct Tracker {
    const Objective& f;
    long evals = 0;
    double best_f = kRejected;
    std::vector<double> best_x;

    explicit Tracker(const Objective& fn) : f(fn) {}

    double operator()(const std::vector<double>& x) {
        ++evals;
        const double v = f(x);
        if (v > best_f) {
            best_f = v;
            best_x = x;
        }
        return v;
    }
};

bool run_simplex_round(Tracker& tr, std::vector<double> start, double step,
                       long eval_budget, const NmOptions& opt) {
    const int n = static_cast<int>(start.size());
    std::vector<std::vector<double>> X(n + 1, start);
    std::vector<double> F(n + 1);
    F[0] = tr(X[0]);
    for (int i = 1; i <= n; ++i) {
        X[i][i - 1] += step;
        F[i] = tr(X[i]);
    }

    auto order = [&]() {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return F[a] > F[b]; });
        std::vector<std::vector<double>> X2(n + 1);
        std::vector<double> F2(n + 1);
        for (int i = 0; i <= n; ++i) {
            X2[i] = X[idx[i]];
            F2[i] = F[idx[i]];
        }
        X.swap(X2);
        F.swap(F2);
    };

    const long limit = tr.evals + eval_budget;
    while (tr.evals < limit) {
        order();
        const double spread = F[0] - F[n];
        if (spread <= opt.ftol_abs + opt.ftol_rel * std::max(std::abs(F[0]), 1e-300))
            return true;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) centroid[j] += X[i][j] / n;

        auto affine = [&](double t) {
            std::vector<double> y(n);
            for (int j = 0; j < n; ++j) y[j] = centroid[j] + t * (centroid[j] - X[n][j]);
            return y;
        };

        const std::vector<double> xr = affine(1.0);
        const double fr = tr(xr);
        if (fr > F[0]) {
            const std::vector<double> xe = affine(2.0);
            const double fe = tr(xe);
            if (fe > fr) {
                X[n] = xe;
                F[n] = fe;
            } else {
                X[n] = xr;
                F[n] = fr;
            }
        } else if (fr > F[n - 1]) {
            X[n] = xr;
            F[n] = fr;
        } else {
            const bool outside = fr > F[n];
            const std::vector<double> xc = affine(outside ? 0.5 : -0.5);
            const double fc = tr(xc);
            if (fc > (outside ? fr : F[n])) {
                X[n] = xc;
                F[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j) X[i][j] = X[0][j] + 0.5 * (X[i][j] - X[0][j]);
                    F[i] = tr(X[i]);
                }
            }
        }
    }
    return false;
}

}  // namespace

NmResult nelder_mead_max(const Objective& f, const std::vector<double>& x0,
                         const NmOptions& opt) {
    Tracker tr(f);
    tr(x0);

    const int rounds = std::max(1, opt.restarts + 1);
    const long per_round = std::max<long>(opt.max_evals / rounds, 16);
    double step = opt.step;
    bool converged = false;
    for (int r = 0; r < rounds; ++r) {
        const std::vector<double> start = tr.best_x.empty() ? x0 : tr.best_x;
        converged = run_simplex_round(tr, start, step, per_round, opt);
        step *= 0.35;
    }

    NmResult res;
    res.x = tr.best_x.empty() ? x0 : tr.best_x;
    res.f = tr.best_f;
    res.evals = tr.evals;
    res.converged = converged;
    return res;
}

MultiStartResult multi_start_max(int dim, const Objective& f,
                                 const std::vector<std::vector<double>>& seeded_starts,
                                 const MultiStartOptions& opt) {
    const int nstarts = std::max<int>(opt.starts, static_cast<int>(seeded_starts.size()));
    std::vector<NmResult> results(nstarts);

    auto run_one = [&](int idx) {
        std::vector<double> x0;
        if (idx < static_cast<int>(seeded_starts.size())) {
            x0 = seeded_starts[idx];
        } else {
            SplitMix64 rng = derive_stream(opt.seed, static_cast<std::uint64_t>(idx));
            x0.resize(dim);
            for (int j = 0; j < dim; ++j)
                x0[j] = rng.uniform(-opt.init_radius, opt.init_radius);
        }
        results[idx] = nelder_mead_max(f, x0, opt.nm);
    };

    unsigned threads = opt.parallel ? std::thread::hardware_concurrency() : 1;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nstarts)));
    if (threads <= 1) {
        for (int i = 0; i < nstarts; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (int i = static_cast<int>(t); i < nstarts; i += static_cast<int>(threads))
                    run_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    MultiStartResult out;
    for (int i = 0; i < nstarts; ++i) {
        out.total_evals += results[i].evals;
        if (out.best_start < 0 || results[i].f > out.best.f) {
            out.best = results[i];
            out.best_start = i;
        }
    }
    return out;
}

double golden_max(const std::function<double(double)>& g, double lo, double hi,
                  int iters, double* arg) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = g(xm);
    double bx = xm, bf = fm;
    if (f1 > bf) { bf = f1; bx = x1; }
    if (f2 > bf) { bf = f2; bx = x2; }
    if (arg) *arg = bx;
    return bf;
}

NmResult coordinate_polish(const Objective& f, std::vector<double> x, double span,
                           int cycles, const std::vector<std::vector<double>>& extra_dirs) {
    Tracker tr(f);
    tr(x);

    const int n = static_cast<int>(x.size());
    double width = span;
    for (int c = 0; c < cycles; ++c) {
        for (int j = 0; j < n; ++j) {
            const std::vector<double> base = tr.best_x;
            auto line = [&](double t) {
                std::vector<double> y = base;
                y[j] += t;
                return tr(y);
            };
            golden_max(line, -width, width, 40);
        }
        for (const auto& d : extra_dirs) {
            const std::vector<double> base = tr.best_x;
            auto line = [&](double t) {
                std::vector<double> y = base;
                for (int j = 0; j < n; ++j) y[j] += t * d[j];
                return tr(y);
            };
            golden_max(line, -width, width, 40);
        }
        width *= 0.3;
    }

    NmResult res;
    res.x = tr.best_x;
    res.f = tr.best_f;
    res.evals = tr.evals;
    res.converged = true;
    return res;
}

}  // namespace neil::opt
