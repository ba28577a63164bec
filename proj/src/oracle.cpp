#include "neil/oracle.hpp"

#include "neil/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace neil::oracle {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// real parameter vector <-> masked coefficient vector
struct MaskedFamily {
    int N = 0;
    std::vector<int> free_idx;

    MaskedFamily(const ParabolaParams& p, int degree, bool shifted) : N(degree) {
        const auto mask = coefficient_mask(p, degree, shifted);
        for (int j = 0; j <= degree; ++j)
            if (!mask[j]) free_idx.push_back(j);
    }

    int dim() const { return 2 * static_cast<int>(free_idx.size()); }

    std::vector<cplx> unpack(const std::vector<double>& x) const {
        std::vector<cplx> c(N + 1, cplx(0.0, 0.0));
        for (std::size_t t = 0; t < free_idx.size(); ++t)
            c[free_idx[t]] = cplx(x[2 * t], x[2 * t + 1]);
        return c;
    }

    // one unit start per free coefficient
    std::vector<std::vector<double>> monomial_starts(int lead_idx = -1) const {
        std::vector<std::vector<double>> starts;
        if (lead_idx >= 0) {
            for (std::size_t t = 0; t < free_idx.size(); ++t) {
                if (free_idx[t] == lead_idx) {
                    std::vector<double> x(dim(), 0.0);
                    x[2 * t] = 1.0;
                    starts.push_back(std::move(x));
                }
            }
        }
        for (std::size_t t = 0; t < free_idx.size(); ++t) {
            if (free_idx[t] == lead_idx) continue;
            std::vector<double> x(dim(), 0.0);
            x[2 * t] = 1.0;
            starts.push_back(std::move(x));
        }
        return starts;
    }
};

// search-time boundary sup: grid sized to the degree, refined like the
// public 4096-point version
double search_sup(const std::vector<cplx>& coeffs) {
    const int M = std::max(128, 8 * static_cast<int>(coeffs.size()));
    return boundary_sup(coeffs, M);
}

double search_divisor(const std::vector<cplx>& coeffs) {
    const double s = search_sup(coeffs);
    return (s <= 1.0 + 1e-12) ? 1.0 : s * (1.0 + 1e-9);
}

double coeff_scale(const std::vector<cplx>& coeffs) {
    double mx = 0.0;
    for (const cplx& c : coeffs) mx = std::max(mx, std::abs(c));
    return mx;
}

opt::MultiStartOptions make_ms_options(const OracleConfig& cfg, int default_evals,
                                       int restarts = 2, double step = 0.3) {
    opt::MultiStartOptions ms;
    ms.starts = cfg.starts;
    ms.seed = cfg.seed;
    ms.parallel = cfg.parallel;
    ms.nm.max_evals = cfg.max_evals > 0 ? cfg.max_evals : default_evals;
    ms.nm.restarts = restarts;
    ms.nm.step = step;
    return ms;
}

}  // namespace

int default_degree(const ParabolaParams& p) {
    return std::max(p.m() * p.n() - p.m() - p.n(), 8) + 4;
}

// ---------------------------------------------------------------------------
// Caratheodory lower bound

double caratheodory_value_at(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                             const std::vector<double>& argmax, int degree) {
    const int N = degree > 0 ? degree : default_degree(p);
    const MaskedFamily fam(p, N, false);
    const auto coeffs = fam.unpack(argmax);
    const SchurFunction h = normalize_to_schur(coeffs);
    return moebius_pseudodistance(h.eval(lambda.value()), h.eval(mu.value()));
}

OracleResult caratheodory_lower(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                                const OracleConfig& cfg) {
    const int N = cfg.degree > 0 ? cfg.degree : default_degree(p);
    const MaskedFamily fam(p, N, false);
    const cplx lv = lambda.value(), mv = mu.value();

    auto objective = [&fam, lv, mv](const std::vector<double>& x) {
        const auto c = fam.unpack(x);
        if (coeff_scale(c) < 1e-9) return opt::kRejected;
        const double div = search_divisor(c);
        return moebius_pseudodistance(horner(c, lv) / div, horner(c, mv) / div);
    };

    const auto ms = make_ms_options(cfg, 40 * fam.dim() + 400);
    auto res = opt::multi_start_max(fam.dim(), objective, fam.monomial_starts(p.m()), ms);

    OracleResult out;
    out.argmax = res.best.x;
    out.evaluations = res.total_evals;
    out.converged = res.best.converged;
    // certified value: re-normalize the argmax through the public path
    out.value = caratheodory_value_at(p, lambda, mu, res.best.x, N);
    return out;
}

// ---------------------------------------------------------------------------
// Knese two-parameter family

OracleResult knese_family_check(DiscPoint lambda, DiscPoint mu, const OracleConfig& cfg) {
    const cplx lv = lambda.value(), mv = mu.value();
    const cplx l2 = lv * lv, m2 = mv * mv;
    const double boundary = poincare_distance(l2, m2);

    // continuous total objective: beyond the open disc the Blaschke factor
    // degenerates to a unimodular constant and the value is the boundary one
    auto objective = [&](const std::vector<double>& x) {
        const cplx a(x[0], x[1]);
        if (std::abs(a) >= 1.0 - 1e-12) return boundary;
        const MobiusMap phi(a);
        return poincare_distance(l2 * phi(lv), m2 * phi(mv));
    };

    auto ms = make_ms_options(cfg, 400, 2, 0.25);
    ms.starts = std::min(ms.starts, 24);
    ms.init_radius = 0.9;
    const std::vector<std::vector<double>> seeds = {{0.0, 0.0}};
    auto res = opt::multi_start_max(2, objective, seeds, ms);

    OracleResult out;
    out.argmax = res.best.x;
    out.evaluations = res.total_evals;
    out.converged = res.best.converged;
    out.value = std::max(res.best.f, boundary);
    return out;
}

// ---------------------------------------------------------------------------
// Reiffen metric lower bound

double reiffen_value_at(const ParabolaParams& p, DiscPoint lambda,
                        const std::vector<double>& argmax, int degree) {
    const int N = degree > 0 ? degree : default_degree(p);
    const MaskedFamily fam(p, N, false);
    const SchurFunction h = normalize_to_schur(fam.unpack(argmax));
    const double ah = std::abs(h.eval(lambda.value()));
    const double den = 1.0 - ah * ah;
    if (den < 1e-15) return 0.0;
    return std::abs(h.deriv(lambda.value())) / den;
}

OracleResult reiffen_lower(const ParabolaParams& p, DiscPoint lambda,
                           const OracleConfig& cfg) {
    const int N = cfg.degree > 0 ? cfg.degree : default_degree(p);
    const MaskedFamily fam(p, N, false);
    const cplx lv = lambda.value();

    auto objective = [&fam, lv](const std::vector<double>& x) {
        const auto c = fam.unpack(x);
        if (coeff_scale(c) < 1e-9) return opt::kRejected;
        const double div = search_divisor(c);
        const double ah = std::abs(horner(c, lv)) / div;
        const double den = 1.0 - ah * ah;
        if (den < 1e-15) return opt::kRejected;  // degenerate: unimodular value
        return (std::abs(horner_deriv(c, lv)) / div) / den;
    };

    auto ms = make_ms_options(cfg, 30 * fam.dim() + 300);
    auto res = opt::multi_start_max(fam.dim(), objective, fam.monomial_starts(p.m()), ms);

    OracleResult out;
    out.argmax = res.best.x;
    out.evaluations = res.total_evals;
    out.converged = res.best.converged;
    out.value = reiffen_value_at(p, lambda, res.best.x, N);
    return out;
}

// ---------------------------------------------------------------------------
// Origin Caratheodory-Reiffen metric

namespace {

int origin_default_degree(const ParabolaParams& p) {
    return std::max(p.m() * p.n() - 2 * p.m() - p.n() + 1, 5);
}

struct OriginProblem {
    MaskedFamily fam;
    cplx X1n, X2n;  // direction of unit norm
    int obj_idx;    // n - m

    OriginProblem(const ParabolaParams& p, cplx X1, cplx X2, int degree)
        : fam(p, degree, true), obj_idx(p.n() - p.m()) {
        const double norm = std::hypot(std::abs(X1), std::abs(X2));
        X1n = X1 / norm;
        X2n = X2 / norm;
    }

    // largest singular value of the upper-triangular Toeplitz matrix of c
    static double toeplitz_sigma_max(const std::vector<cplx>& c) {
        const int n = static_cast<int>(c.size());
        std::vector<cplx> mstarm(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                cplx s(0.0, 0.0);
                for (int k = 0; k <= i; ++k) s += std::conj(c[i - k]) * c[j - k];
                mstarm[static_cast<std::size_t>(i) * n + j] = s;
                mstarm[static_cast<std::size_t>(j) * n + i] = std::conj(s);
            }
        }
        return std::sqrt(std::max(0.0, hermitian_eigenvalues(std::move(mstarm), n).back()));
    }

    // the feasible set is convex with 0 interior and the Toeplitz matrix is
    // linear in c, so the ray through c stays feasible up to 1/sigma_max and
    // the linear objective is maximal there: maximize |l(c)| / sigma_max(c),
    // a smooth scale-invariant function with the same supremum
    double operator()(const std::vector<double>& x) const {
        const auto c = fam.unpack(x);
        if (coeff_scale(c) < 1e-9) return opt::kRejected;
        const double sigma = toeplitz_sigma_max(c);
        return std::abs(X1n * c[obj_idx] + X2n * c[0]) / sigma;
    }

    // boundary prefix attaining the reported value
    std::vector<cplx> boundary_prefix(const std::vector<double>& x) const {
        auto c = fam.unpack(x);
        const double sigma = toeplitz_sigma_max(c);
        for (auto& v : c) v /= sigma;
        return c;
    }
};

}  // namespace

double origin_gamma_value_at(const ParabolaParams& p, cplx X1, cplx X2,
                             const std::vector<double>& argmax, int degree) {
    const int N = degree > 0 ? degree : origin_default_degree(p);
    const OriginProblem prob(p, X1, X2, N);
    const double norm = std::hypot(std::abs(X1), std::abs(X2));
    const double v = prob(argmax);
    return v <= opt::kRejected ? 0.0 : norm * v;
}

double origin_gamma_margin_at(const ParabolaParams& p, cplx X1, cplx X2,
                              const std::vector<double>& argmax, int degree) {
    const int N = degree > 0 ? degree : origin_default_degree(p);
    const OriginProblem prob(p, X1, X2, N);
    const auto boundary = prob.boundary_prefix(argmax);
    return hermitian_min_eigenvalue(schur_gram(boundary),
                                    static_cast<int>(boundary.size()));
}

OracleResult origin_gamma_lower(const ParabolaParams& p, cplx X1, cplx X2,
                                const OracleConfig& cfg) {
    if (X1 == cplx(0.0, 0.0) && X2 == cplx(0.0, 0.0))
        throw std::invalid_argument("origin_gamma_lower: zero tangent vector");
    const int N = cfg.degree > 0 ? cfg.degree : origin_default_degree(p);
    const OriginProblem prob(p, X1, X2, N);
    const double norm = std::hypot(std::abs(X1), std::abs(X2));
    const int dim = prob.fam.dim();

    auto objective = [&prob](const std::vector<double>& x) { return prob(x); };

    // aligned-phase seeds for the two objective coefficients
    std::vector<std::vector<double>> seeds;
    int slot0 = -1, slot1 = -1;
    for (std::size_t t = 0; t < prob.fam.free_idx.size(); ++t) {
        if (prob.fam.free_idx[t] == 0) slot0 = static_cast<int>(t);
        if (prob.fam.free_idx[t] == prob.obj_idx) slot1 = static_cast<int>(t);
    }
    auto aligned_seed = [&](double w0, double w1) {
        std::vector<double> x(dim, 0.0);
        if (slot0 >= 0) {
            const cplx a0 = w0 * std::conj(prob.X2n) / std::max(std::abs(prob.X2n), 1e-9);
            x[2 * slot0] = a0.real();
            x[2 * slot0 + 1] = a0.imag();
        }
        if (slot1 >= 0) {
            const cplx a1 = w1 * std::conj(prob.X1n) / std::max(std::abs(prob.X1n), 1e-9);
            x[2 * slot1] = a1.real();
            x[2 * slot1 + 1] = a1.imag();
        }
        return x;
    };
    seeds.push_back(aligned_seed(0.9, 0.0));
    seeds.push_back(aligned_seed(0.0, 0.9));
    seeds.push_back(aligned_seed(0.5, 0.5));
    seeds.push_back(aligned_seed(0.3, 0.6));

    auto ms = make_ms_options(cfg, 60 * dim + 600, 3, 0.3);
    ms.init_radius = 0.4;
    auto res = opt::multi_start_max(dim, objective, seeds, ms);

    // alternating refinement around the incumbent with shrinking steps
    opt::NmResult best = res.best;
    long extra = 0;
    for (int round = 0; round < 3; ++round) {
        const double width = 0.12 * std::pow(0.3, round);
        auto pol = opt::coordinate_polish(objective, best.x, width, 4);
        extra += pol.evals;
        if (pol.f > best.f) best = pol;
        opt::NmOptions fine;
        fine.max_evals = 1500;
        fine.restarts = 1;
        fine.step = 0.25 * width;
        auto nm2 = opt::nelder_mead_max(objective, best.x, fine);
        extra += nm2.evals;
        if (nm2.f > best.f) best = nm2;
    }

    OracleResult out;
    out.argmax = best.x;
    out.evaluations = res.total_evals + extra;
    out.converged = res.best.converged;
    out.value = norm * best.f;
    return out;
}

// ---------------------------------------------------------------------------
// rho^(m)

OracleResult rho_m(int m, DiscPoint lambda, DiscPoint mu, const OracleConfig& cfg) {
    if (m < 1) throw std::invalid_argument("rho_m: need m >= 1");
    const cplx lm = cpow_int(lambda.value(), m);
    const cplx mm = cpow_int(mu.value(), m);
    const double r0 = moebius_pseudodistance(lambda, mu);

    // pairs (z, w) with m_D(z, w) = r0: w free, z on the m_D-sphere around w
    auto objective = [&](const std::vector<double>& x) {
        const cplx w(x[0], x[1]);
        if (std::abs(w) >= 1.0 - 1e-9) return opt::kRejected;
        const MobiusMap phi(w);
        const cplx z = phi(std::polar(r0, x[2]));
        return poincare_distance(lm * z, mm * w);
    };

    auto ms = make_ms_options(cfg, 600, 2, 0.3);
    ms.starts = std::min(ms.starts, 32);
    ms.init_radius = 0.7;
    std::vector<std::vector<double>> seeds;
    for (double ang : {0.0, kTau / 4, kTau / 2, 3 * kTau / 4})
        seeds.push_back({lambda.value().real(), lambda.value().imag(), ang});
    auto res = opt::multi_start_max(3, objective, seeds, ms);

    // unimodular family z = w = e^{i theta}
    auto boundary = [&](double th) {
        const cplx u = std::polar(1.0, th);
        return poincare_distance(lm * u, mm * u);
    };
    double btheta = 0.0, bval = 0.0;
    for (int j = 0; j < 128; ++j) {
        const double th = kTau * j / 128;
        const double v = boundary(th);
        if (v > bval) {
            bval = v;
            btheta = th;
        }
    }
    bval = std::max(bval, opt::golden_max(boundary, btheta - kTau / 128, btheta + kTau / 128, 60));

    OracleResult out;
    out.argmax = res.best.x;
    out.evaluations = res.total_evals + 128 + 62;
    out.converged = res.best.converged;
    out.value = std::max(res.best.f, bval);
    return out;
}

// ---------------------------------------------------------------------------
// Inner distance by curve length

namespace {

struct TrackingFailure {};

// continuous m-th root of the Poincare geodesic from a = |lambda|^m to
// b = mu'^m, branch fixed by root(t=0) = |lambda|
std::vector<cplx> tracked_root_nodes(cplx a, cplx b, int m, int nodes) {
    std::vector<cplx> z(nodes);
    const DiscPoint pa{a}, pb{b};
    for (int i = 0; i < nodes; ++i)
        z[i] = geodesic(pa, pb, static_cast<double>(i) / (nodes - 1)).value();

    std::vector<cplx> root(nodes);
    double theta = std::arg(a);  // = 0 after rotation
    root[0] = std::polar(std::pow(std::abs(a), 1.0 / m), theta / m);
    for (int i = 1; i < nodes; ++i) {
        if (std::abs(z[i]) < 1e-11 || std::abs(z[i - 1]) < 1e-11) throw TrackingFailure{};
        const double step = std::arg(z[i] / z[i - 1]);
        if (std::abs(step) > std::numbers::pi / 8.0) throw TrackingFailure{};
        theta += step;
        root[i] = std::polar(std::pow(std::abs(z[i]), 1.0 / m), theta / m);
    }
    return root;
}

double radial_leg_length(cplx endpoint, const MetricFn& metric, int nodes) {
    if (std::abs(endpoint) == 0.0) return 0.0;
    std::vector<cplx> pts(nodes);
    for (int i = 0; i < nodes; ++i)
        pts[i] = endpoint * (static_cast<double>(i) / (nodes - 1));
    return curve_length(SampledCurve::uniform(std::move(pts)), metric).value;
}

}  // namespace

OracleResult inner_length_oracle(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                                 const OracleConfig& cfg) {
    (void)cfg;
    OracleResult out;
    out.converged = true;
    if (lambda.value() == mu.value()) return out;

    const int m = p.m();
    const MetricFn metric = [m](cplx pt, cplx v) {
        const double r = std::abs(pt);
        double rm1 = 1.0;
        for (int i = 0; i < m - 1; ++i) rm1 *= r;
        return m * rm1 * std::abs(v) / (1.0 - rm1 * rm1 * r * r);
    };

    // family (ii): radial concatenation p(lambda) -> 0 -> p(mu)
    const double through_origin = radial_leg_length(lambda.value(), metric, 801) +
                                  radial_leg_length(mu.value(), metric, 801);
    double best = through_origin;

    if (sector_condition(p, lambda, mu) && lambda.value() != cplx(0.0, 0.0) &&
        mu.value() != cplx(0.0, 0.0)) {
        // rotate so lambda sits on [0,1); the integral is rotation invariant
        const cplx rot = std::conj(lambda.value()) / lambda.abs();
        const cplx a = cpow_int(lambda.abs(), m);
        const cplx b = cpow_int(mu.value() * rot, m);
        // a = b would force lambda = mu inside the sector; already excluded
        for (int nodes = 1024; std::abs(a - b) > 0.0 && nodes <= (1 << 15); nodes *= 4) {
            try {
                const auto root = tracked_root_nodes(a, b, m, nodes);
                const auto len = curve_length(SampledCurve::uniform(root), metric);
                best = std::min(best, len.value);
                out.converged = out.converged && len.converged;
                break;
            } catch (const TrackingFailure&) {
                if (nodes * 4 > (1 << 15)) out.converged = false;  // fall back to (ii)
            }
        }
    }

    out.value = best;
    return out;
}

// ---------------------------------------------------------------------------
// Origin ratio and strict-inequality witnesses

double origin_ratio(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                    const OracleConfig& cfg) {
    if (lambda.value() == mu.value())
        throw std::invalid_argument("origin_ratio: coincident points");
    const cplx X1 = cpow_int(lambda.value(), p.n()) - cpow_int(mu.value(), p.n());
    const cplx X2 = cpow_int(lambda.value(), p.m()) - cpow_int(mu.value(), p.m());
    const double c = std::atanh(caratheodory_lower(p, lambda, mu, cfg).value);
    const double g = origin_gamma_lower(p, X1, X2, cfg).value;
    return c / g;
}

StrictPair find_strict_points(const ParabolaParams& p, const OracleConfig& cfg) {
    if (p.m() < 2)
        throw std::invalid_argument("find_strict_points: requires m >= 2");

    int budget = 8;  // oracle evaluations are the expensive part
    for (double r : {0.18, 0.25, 0.32}) {
        for (double phase : {0.0, 0.9}) {
            const cplx lv = std::polar(r, phase);
            // solve lambda^m - mu^m = lambda^n - mu^n by Newton from a ring of starts
            for (int s = 1; s < 8; ++s) {
                cplx muv = lv * std::polar(1.0, kTau * s / 8.0);
                bool ok = false;
                for (int it = 0; it < 60; ++it) {
                    const cplx g = (cpow_int(lv, p.m()) - cpow_int(muv, p.m())) -
                                   (cpow_int(lv, p.n()) - cpow_int(muv, p.n()));
                    const cplx dg = -static_cast<double>(p.m()) * cpow_int(muv, p.m() - 1) +
                                    static_cast<double>(p.n()) * cpow_int(muv, p.n() - 1);
                    if (std::abs(dg) < 1e-14) break;
                    const cplx next = muv - g / dg;
                    if (std::abs(next - muv) < 1e-15) {
                        muv = next;
                        ok = true;
                        break;
                    }
                    muv = next;
                    if (std::abs(muv) > 0.95) break;
                }
                if (!ok || std::abs(muv) > 0.9 || std::abs(muv - lv) < 1e-3) continue;
                const cplx g = (cpow_int(lv, p.m()) - cpow_int(muv, p.m())) -
                               (cpow_int(lv, p.n()) - cpow_int(muv, p.n()));
                if (std::abs(g) > 1e-12 || std::abs(cpow_int(lv, p.m()) - cpow_int(muv, p.m())) < 1e-9)
                    continue;

                const DiscPoint lam(lv), mup(muv);
                const double c = std::atanh(caratheodory_lower(p, lam, mup, cfg).value);
                const double rhs = std::max(
                    poincare_distance(cpow_int(lv, p.m()), cpow_int(muv, p.m())),
                    poincare_distance(cpow_int(lv, p.m() + 1), cpow_int(muv, p.m() + 1)));
                if (c > rhs + 1e-6) return {lam, mup, c, rhs};
                if (--budget <= 0)
                    throw StrictPairNotFound("find_strict_points: budget exhausted");
            }
        }
    }
    throw StrictPairNotFound("find_strict_points: no witness found within budget");
}

// ---------------------------------------------------------------------------
// Two-point interpolation in the masked class

InterpResult masked_interpolation(int k, DiscPoint lambda, cplx eta, cplx zeta,
                                  const OracleConfig& cfg) {
    const auto params = make_params(2, 2 * k + 1);
    const int N = std::max(cfg.degree > 0 ? cfg.degree : default_degree(params), 2 * k + 2);
    const MaskedFamily fam(params, N, false);
    const cplx lv = lambda.value();
    if (std::abs(lv) < 1e-6)
        return {moebius_pseudodistance(eta, zeta) <= 1e-6,
                moebius_pseudodistance(eta, zeta)};

    // the two interpolation constraints are linear in the coefficients:
    // solve them exactly for the anchors a_0 and a_{2k+1} (both unmasked)
    // and search the remaining free coefficients for boundary sup <= 1
    const cplx pivot = cpow_int(lv, 2 * k + 1);

    auto complete = [&](const std::vector<double>& x) {
        auto c = fam.unpack(x);
        c[0] = cplx(0.0, 0.0);
        c[2 * k + 1] = cplx(0.0, 0.0);
        const cplx rest_p = horner(c, lv);
        const cplx rest_m = horner(c, -lv);
        const cplx A = eta - rest_p;   // = a_0 + a_{2k+1} pivot
        const cplx B = zeta - rest_m;  // = a_0 - a_{2k+1} pivot
        c[0] = 0.5 * (A + B);
        c[2 * k + 1] = 0.5 * (A - B) / pivot;
        return c;
    };

    const int dim = fam.dim();
    auto objective = [&](const std::vector<double>& x) {
        return -search_sup(complete(x));
    };

    auto ms = make_ms_options(cfg, 30 * dim + 300, 2, 0.2);
    ms.starts = std::min(ms.starts, 16);
    ms.init_radius = 0.25;
    const std::vector<std::vector<double>> seeds = {std::vector<double>(dim, 0.0)};
    auto res = opt::multi_start_max(dim, objective, seeds, ms);
    auto polished = opt::coordinate_polish(objective, res.best.x, 0.1, 3);
    const auto& bx = polished.f >= res.best.f ? polished.x : res.best.x;

    // certified residual through the public normalization path
    const SchurFunction h = normalize_to_schur(complete(bx));
    const double residual = std::max(moebius_pseudodistance(h.eval(lv), eta),
                                     moebius_pseudodistance(h.eval(-lv), zeta));
    return {residual <= 1e-6, residual};
}

}  // namespace neil::oracle
