#include "neil/verify.hpp"

#include "neil/cross.hpp"
#include "neil/oracle.hpp"
#include "neil/optimize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace neil::verify {

namespace {

using oracle::OracleConfig;
constexpr double kTau = 2.0 * std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

OracleConfig cfg_for(std::uint64_t seed, std::uint64_t idx, int starts) {
    OracleConfig cfg;
    cfg.seed = opt::derive_stream(seed, idx).next();
    cfg.starts = starts;
    return cfg;
}

DiscPoint random_disc_point(opt::SplitMix64& rng, double radius) {
    const double r = radius * std::sqrt(rng.uniform());
    return DiscPoint(std::polar(r, rng.uniform(0.0, kTau)));
}

// --- criterion 1 -----------------------------------------------------------

CriterionResult c1_knese(std::uint64_t seed) {
    const auto p23 = make_params(2, 3);
    double max_family_err = 0.0, max_deficit = 0.0, max_overshoot = 0.0;
    int small_branch = 0;

    for (int i = 0; i < 10; ++i) {
        const double ri = 0.08 + 0.72 * i / 9.0;
        const DiscPoint lam(std::polar(ri, kTau * i / 10.0));
        for (int j = 0; j < 10; ++j) {
            const double rj = 0.08 + 0.72 * j / 9.0;
            const DiscPoint mu(
                std::polar(rj, kTau * j / 10.0 + std::numbers::pi * (j % 2)));

            const auto kd = knese_distance_23(lam, mu);
            if (kd.branch == Branch::SmallAlpha) ++small_branch;

            const auto fam = oracle::knese_family_check(lam, mu, cfg_for(seed, 100 + 10 * i + j, 24));
            max_family_err = std::max(max_family_err, std::abs(fam.value - kd.value));

            auto cfg = cfg_for(seed, 10 * i + j, 64);
            cfg.degree = 12;
            const auto low = oracle::caratheodory_lower(p23, lam, mu, cfg);
            const double c_rho = std::atanh(low.value);
            max_deficit = std::max(max_deficit, kd.value - c_rho);
            max_overshoot = std::max(max_overshoot, c_rho - kd.value);
        }
    }

    CriterionResult r;
    r.id = 1;
    r.name = "knese agreement on (2,3)";
    r.pass = max_family_err <= 1e-6 && max_deficit <= 5e-3 && max_overshoot <= 1e-9 &&
             small_branch > 0;
    r.detail = fmt("family_err=%.3e deficit=%.3e overshoot=%.3e", max_family_err,
                   max_deficit, max_overshoot) +
               fmt(" small_branch_pairs=%.0f", static_cast<double>(small_branch));
    return r;
}

// --- criterion 2 -----------------------------------------------------------

CriterionResult c2_reiffen(std::uint64_t seed) {
    double max_over = -1.0, max_under = -1.0;
    int idx = 0;
    for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 7; ++n) {
            if (std::gcd(m, n) != 1) continue;
            const auto p = make_params(m, n);
            for (double r : {0.15, 0.35, 0.55, 0.75}) {
                for (int a = 0; a < 5; ++a) {
                    const DiscPoint lam(std::polar(r, kTau * a / 5.0));
                    auto cfg = cfg_for(seed, idx++, 8);
                    const auto low = oracle::reiffen_lower(p, lam, cfg);
                    const double closed = reiffen_metric(p, lam);
                    max_over = std::max(max_over, low.value - closed);
                    max_under = std::max(max_under, closed - low.value);
                }
            }
        }
    }

    CriterionResult r;
    r.id = 2;
    r.name = "reiffen metric vs extremal oracle";
    r.pass = max_over <= 1e-9 && max_under <= 1e-12;
    r.detail = fmt("overshoot=%.3e attain_gap=%.3e", max_over, max_under);
    return r;
}

// --- criterion 3 -----------------------------------------------------------

CriterionResult c3_inner(std::uint64_t seed) {
    auto rng = opt::derive_stream(seed, 3);
    double max_err = 0.0;
    int sector = 0, through = 0;
    bool tags_ok = true;

    for (int t = 0; t < 100; ++t) {
        const auto p = make_params(t < 60 ? 2 : 3, t < 60 ? 3 : 4);
        const DiscPoint lam = random_disc_point(rng, 0.8);
        const DiscPoint mu = random_disc_point(rng, 0.8);
        if (lam.value() == mu.value()) continue;

        const auto closed = inner_distance(p, lam, mu);
        const bool sec = sector_condition(p, lam, mu);
        tags_ok = tags_ok && (closed.branch == (sec ? Branch::Sector : Branch::ThroughOrigin));
        (sec ? sector : through)++;

        const auto len = oracle::inner_length_oracle(p, lam, mu);
        max_err = std::max(max_err, std::abs(len.value - closed.value));
    }

    CriterionResult r;
    r.id = 3;
    r.name = "inner distance vs curve-length oracle";
    r.pass = max_err <= 1e-4 && tags_ok && sector > 0 && through > 0;
    r.detail = fmt("max_err=%.3e sector=%.0f through=%.0f", max_err, sector, through);
    return r;
}

// --- criterion 4 -----------------------------------------------------------

CriterionResult c4_corollary(std::uint64_t seed) {
    const auto p23 = make_params(2, 3);
    auto rng = opt::derive_stream(seed, 4);
    int mismatches = 0;

    for (int t = 0; t < 1000; ++t) {
        const DiscPoint lam = random_disc_point(rng, 0.85);
        const DiscPoint mu = random_disc_point(rng, 0.85);
        const double kd = knese_distance_23(lam, mu).value;
        const double id = inner_distance(p23, lam, mu).value;
        const bool close = std::abs(kd - id) < 1e-10;
        if (close != c_equals_ci(p23, lam, mu)) ++mismatches;
    }

    // strict-inequality witness: c not inner for m = 2
    const DiscPoint wl(0.5), wm(-0.5);
    const double wk = knese_distance_23(wl, wm).value;
    const double wi = inner_distance(p23, wl, wm).value;
    const bool witness = wi > wk + 1e-3 && !c_equals_ci(p23, wl, wm);

    CriterionResult r;
    r.id = 4;
    r.name = "c = c^i characterization on (2,3)";
    r.pass = mismatches == 0 && witness;
    r.detail = fmt("mismatches=%.0f witness_gap=%.6f", mismatches, wi - wk);
    return r;
}

// --- criterion 5 -----------------------------------------------------------

CriterionResult c5_origin34(std::uint64_t seed) {
    int disagreements = 0;
    for (int i = 0; i < 200; ++i) {
        const double sa = static_cast<double>(i) / 199.0;
        for (int j = 0; j < 200; ++j) {
            const double sb = static_cast<double>(j) / 199.0;
            const bool rc = region_C_membership(sa * sa, sb * sb);
            const auto fs = schur_feasible(SchurPrefix({cplx(sa), cplx(sb), cplx(0.0)}));
            if ((rc && fs.margin < -1e-9) || (!rc && fs.margin > 1e-9)) ++disagreements;
        }
    }

    // closed form against the 1-d reduction max_t |X1|(1-t)sqrt(1+t) + |X2| t
    double max_formula_err = 0.0;
    for (int q = 0; q < 50; ++q) {
        const double c = 1.0 + (2.0 * std::numbers::sqrt2 - 1.0) * (q + 0.5) / 50.0;
        const double x1 = 1.0, x2 = c / 2.0;
        auto f = [&](double t) { return x1 * (1.0 - t) * std::sqrt(1.0 + t) + x2 * t; };
        double bt = 0.0, bv = -1.0;
        for (int g = 0; g <= 20000; ++g) {
            const double t = g / 20000.0;
            const double v = f(t);
            if (v > bv) {
                bv = v;
                bt = t;
            }
        }
        bv = std::max(bv, opt::golden_max(f, std::max(0.0, bt - 1e-4),
                                          std::min(1.0, bt + 1e-4), 60));
        max_formula_err = std::max(max_formula_err,
                                   std::abs(gamma34_origin(x1, x2).value - bv));
    }

    const auto p34 = make_params(3, 4);
    double max_oracle_err = 0.0;
    const cplx xs[5][2] = {{cplx(1.0), cplx(0.0)},
                           {cplx(0.0), cplx(1.0)},
                           {cplx(1.0), cplx(1.0)},
                           {cplx(1.0), cplx(0.65)},
                           {cplx(0.45), cplx(1.0)}};
    for (int t = 0; t < 5; ++t) {
        const auto low = oracle::origin_gamma_lower(p34, xs[t][0], xs[t][1],
                                                    cfg_for(seed, 50 + t, 48));
        max_oracle_err = std::max(
            max_oracle_err, std::abs(low.value - gamma34_origin(xs[t][0], xs[t][1]).value));
    }

    CriterionResult r;
    r.id = 5;
    r.name = "(3,4) origin metric: region C, formula, oracle";
    r.pass = disagreements == 0 && max_formula_err <= 1e-6 && max_oracle_err <= 1e-5;
    r.detail = fmt("disagreements=%.0f formula_err=%.3e oracle_err=%.3e",
                   disagreements, max_formula_err, max_oracle_err);
    return r;
}

// --- criterion 6 -----------------------------------------------------------

CriterionResult c6_opposite(std::uint64_t seed) {
    double max_err = 0.0;
    int idx = 0;
    for (int k = 1; k <= 3; ++k) {
        for (double r : {0.2, 0.45, 0.7}) {
            for (double ang : {0.0, 2.2, 4.0, 5.3}) {
                const DiscPoint lam(std::polar(r, ang));
                const cplx lv = lam.value();
                const cplx pw = cpow_int(lv, 2 * k);

                auto fam = [&](const std::vector<double>& x) {
                    const cplx a(x[0], x[1]);
                    if (std::abs(a) >= 1.0 - 1e-12) return 0.0;
                    const MobiusMap phi(a);
                    return moebius_pseudodistance(pw * phi(lv), pw * phi(-lv));
                };
                auto ms = opt::MultiStartOptions{};
                ms.starts = 12;
                ms.seed = opt::derive_stream(seed, 600 + idx++).next();
                ms.init_radius = 0.9;
                ms.nm.max_evals = 400;
                const auto best =
                    opt::multi_start_max(2, fam, {{0.0, 0.0}}, ms);

                const double closed = opposite_points_2odd(k, lam);
                max_err = std::max(max_err, std::abs(best.best.f - closed));
            }
        }
    }

    // displayed bound of the remark on 1e4 random (alpha, lambda)
    auto rng = opt::derive_stream(seed, 6);
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 10000; ++t) {
        const int k = 1 + static_cast<int>(rng.next() % 3);
        const cplx a = random_disc_point(rng, 0.97).value();
        const cplx lv = random_disc_point(rng, 0.97).value();
        const cplx pw = cpow_int(lv, 2 * k);
        const MobiusMap phi(a);
        const double lhs = moebius_pseudodistance(pw * phi(lv), pw * phi(-lv));
        const double rhs = opposite_points_2odd(k, DiscPoint(lv));
        worst_slack = std::min(worst_slack, rhs - lhs);
    }

    CriterionResult r;
    r.id = 6;
    r.name = "opposite points on (2,2k+1)";
    r.pass = max_err <= 1e-6 && worst_slack >= -1e-12;
    r.detail = fmt("family_err=%.3e worst_slack=%.3e", max_err, worst_slack);
    return r;
}

// --- criterion 7 -----------------------------------------------------------

CriterionResult c7_kobayashi(std::uint64_t seed) {
    const auto p23 = make_params(2, 3);
    auto rng = opt::derive_stream(seed, 7);
    bool exact = true;
    double worst_slack = std::numeric_limits<double>::infinity();

    for (int t = 0; t < 1000; ++t) {
        const DiscPoint lam = random_disc_point(rng, 0.85);
        const DiscPoint mu = random_disc_point(rng, 0.85);
        const double kb = kobayashi_distance(p23, lam, mu);
        exact = exact && (kb == poincare_distance(lam, mu));

        const double lower = poincare_distance(lam.value() * lam.value(),
                                               mu.value() * mu.value());
        const double kd = knese_distance_23(lam, mu).value;
        const double id = inner_distance(p23, lam, mu).value;
        worst_slack = std::min({worst_slack, kd - lower, id - kd, kb - id});
    }

    CriterionResult r;
    r.id = 7;
    r.name = "kobayashi distance and ordering chain";
    r.pass = exact && worst_slack >= -1e-10;
    r.detail = fmt("exact=%.0f worst_slack=%.3e", exact ? 1.0 : 0.0, worst_slack);
    return r;
}

// --- criterion 8 -----------------------------------------------------------

CriterionResult c8_origin_limit(std::uint64_t seed) {
    double worst = 0.0;
    int idx = 0;
    bool pass = true;
    for (int pi = 0; pi < 2; ++pi) {
        const auto p = pi == 0 ? make_params(2, 3) : make_params(3, 4);
        for (int si = 0; si < 2; ++si) {
            const double scale = si == 0 ? 1e-2 : 1e-3;
            const double tol = si == 0 ? 0.1 : 0.05;
            auto rng = opt::derive_stream(seed, 800 + 10 * pi + si);
            for (int d = 0; d < 20; ++d) {
                double a1 = rng.uniform(0.0, kTau), a2 = rng.uniform(0.0, kTau);
                while (std::abs(std::polar(1.0, a1) - std::polar(1.0, a2)) < 0.4)
                    a2 = rng.uniform(0.0, kTau);
                const DiscPoint lam(std::polar(scale, a1));
                const DiscPoint mu(std::polar(scale, a2));
                auto cfg = cfg_for(seed, 900 + idx++, 32);
                const double ratio = oracle::origin_ratio(p, lam, mu, cfg);
                worst = std::max(worst, std::abs(ratio - 1.0));
                pass = pass && std::abs(ratio - 1.0) <= tol;
            }
        }
    }

    CriterionResult r;
    r.id = 8;
    r.name = "origin limit ratio (desk scale)";
    r.pass = pass;
    r.detail = fmt("worst_dev=%.3e", worst);
    return r;
}

// --- criterion 9 -----------------------------------------------------------

CriterionResult c9_strict(std::uint64_t seed) {
    bool found23 = false, found34 = false;
    double margin23 = 0.0, margin34 = 0.0;
    try {
        const auto w = oracle::find_strict_points(make_params(2, 3), cfg_for(seed, 90, 48));
        found23 = true;
        margin23 = w.c_value - w.rhs_value;
    } catch (const oracle::StrictPairNotFound&) {
    }
    try {
        const auto w = oracle::find_strict_points(make_params(3, 4), cfg_for(seed, 91, 48));
        found34 = true;
        margin34 = w.c_value - w.rhs_value;
    } catch (const oracle::StrictPairNotFound&) {
    }

    const auto low = oracle::origin_gamma_lower(make_params(2, 3), cplx(1.0), cplx(1.0),
                                                cfg_for(seed, 92, 48));
    const bool quarter = std::abs(low.value - 1.25) <= 1e-6;

    // transcribed origin branch fires with the discrepancy flag raised
    const auto p23 = make_params(2, 3);
    const ParabolaPoint origin = parametrize(p23, DiscPoint(0.0));
    Tangent X;
    X.X1 = cplx(1.0);
    X.X2 = cplx(1.0);
    X.base = origin;
    const auto transcribed = knese_metric_23(origin, X);
    const bool flagged = transcribed.value == 1.0 && transcribed.discrepancy &&
                         low.value > transcribed.value + 0.2;

    CriterionResult r;
    r.id = 9;
    r.name = "strict inequality and origin discrepancy";
    r.pass = found23 && found34 && quarter && flagged;
    r.detail = fmt("margin23=%.3e margin34=%.3e gamma0_err=%.3e", margin23, margin34,
                   std::abs(low.value - 1.25));
    return r;
}

// --- criterion 10 ----------------------------------------------------------

CriterionResult c10_monotonicity(std::uint64_t seed) {
    auto rng = opt::derive_stream(seed, 10);
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 10000; ++t) {
        const double a = rng.uniform(0.0, 0.98);
        const double b = rng.uniform(0.0, 0.98);
        const double s = rng.uniform(0.02, 1.0);
        const double th = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double lhs = poincare_distance(cplx(a), b * std::polar(1.0, th));
        const double rhs = poincare_distance(cplx(std::pow(a, s)),
                                             std::pow(b, s) * std::polar(1.0, s * th));
        worst_slack = std::min(worst_slack, rhs - lhs);
    }

    CriterionResult r;
    r.id = 10;
    r.name = "power monotonicity of the Poincare distance";
    r.pass = worst_slack >= -1e-12;
    r.detail = fmt("worst_slack=%.3e", worst_slack);
    return r;
}

// --- criterion 11 ----------------------------------------------------------

CriterionResult c11_cross(std::uint64_t seed) {
    auto rng = opt::derive_stream(seed, 11);
    bool equal = true;
    for (int t = 0; t < 1000; ++t) {
        auto pick = [&]() {
            const int b = static_cast<int>(rng.next() % 3);
            const DiscPoint c = random_disc_point(rng, 0.9);
            if (b == 0) return CrossPoint::z_axis(c);
            if (b == 1) return CrossPoint::w_axis(c);
            return CrossPoint::origin();
        };
        const CrossPoint p = pick(), q = pick();
        equal = equal && (cross_caratheodory(p, q) == cross_kobayashi(p, q));
    }

    const bool gamma_ok = cross_gamma(CrossPoint::origin(), cplx(1.0), cplx(1.0)) == 2.0;
    const bool kappa_ok = std::isinf(cross_kappa(CrossPoint::origin(), cplx(1.0), cplx(1.0)));

    CriterionResult r;
    r.id = 11;
    r.name = "coordinate cross distances and metrics";
    r.pass = equal && gamma_ok && kappa_ok;
    r.detail = fmt("c_eq_k=%.0f gamma2=%.0f kappa_inf=%.0f", equal ? 1.0 : 0.0,
                   gamma_ok ? 1.0 : 0.0, kappa_ok ? 1.0 : 0.0);
    return r;
}

// --- criterion 12 ----------------------------------------------------------

CriterionResult c12_determinism(std::uint64_t seed) {
    auto bundle = [&]() {
        std::string s;
        for (const char* name : {"kobayashi", "cross", "opposite"})
            s += to_json(run_suite(name, seed));
        return s;
    };
    const std::string first = bundle();
    const std::string second = bundle();

    const auto p23 = make_params(2, 3);
    auto cfg = cfg_for(seed, 120, 16);
    const double v1 =
        oracle::caratheodory_lower(p23, DiscPoint(0.5), DiscPoint(-0.45), cfg).value;
    const double v2 =
        oracle::caratheodory_lower(p23, DiscPoint(0.5), DiscPoint(-0.45), cfg).value;

    CriterionResult r;
    r.id = 12;
    r.name = "byte-identical reports for identical seeds";
    r.pass = first == second && v1 == v2;
    r.detail = fmt("reports_equal=%.0f oracle_equal=%.0f", first == second ? 1.0 : 0.0,
                   v1 == v2 ? 1.0 : 0.0);
    return r;
}

using CriterionFn = CriterionResult (*)(std::uint64_t);

struct SuiteSpec {
    const char* name;
    std::vector<int> ids;
};

const std::vector<SuiteSpec>& suite_table() {
    static const std::vector<SuiteSpec> table = {
        {"knese", {1}},    {"reiffen", {2}},      {"inner", {3}},
        {"corollary", {4}}, {"schur", {5}},        {"opposite", {6}},
        {"kobayashi", {7}}, {"origin", {8}},       {"ineq", {9}},
        {"monotonicity", {10}}, {"cross", {11}},   {"determinism", {12}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
    };
    return table;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    static const CriterionFn fns[12] = {
        c1_knese,   c2_reiffen,      c3_inner, c4_corollary, c5_origin34,
        c6_opposite, c7_kobayashi,   c8_origin_limit, c9_strict, c10_monotonicity,
        c11_cross,  c12_determinism,
    };
    return fns[id - 1](seed);
}

}  // namespace

bool SuiteResult::pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suite_table()) v.push_back(s.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_table())
        if (name == s.name) return true;
    return false;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& s : suite_table()) {
        if (name != s.name) continue;
        SuiteResult out;
        out.suite = name;
        out.seed = seed;
        for (int id : s.ids) out.criteria.push_back(run_criterion(id, seed));
        return out;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::string to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["pass"] = r.pass();
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& c : r.criteria) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        j["criteria"].push_back(cj);
    }
    return j.dump();
}

}  // namespace neil::verify
