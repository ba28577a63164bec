#include "neil/cli.hpp"

#include "neil/cross.hpp"
#include "neil/oracle.hpp"
#include "neil/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>

namespace neil::cli {

namespace {

using nlohmann::ordered_json;

struct HelpShown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
        } else {
            re = std::stod(s.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument(s);
            const std::string rest = s.substr(comma + 1);
            im = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(s);
        }
    } catch (const std::exception&) {
        throw UsageError("cannot parse complex number '" + s + "' (expected re,im)");
    }
    return {re, im};
}

ordered_json json_number(double v) {
    if (std::isfinite(v)) return v;
    return "inf";
}

ordered_json json_complex(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

std::string csv_number(double v) {
    if (!std::isfinite(v)) return "inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const char* cross_branch_name(CrossBranch b) {
    switch (b) {
        case CrossBranch::ZAxis: return "ZAxis";
        case CrossBranch::WAxis: return "WAxis";
        case CrossBranch::Origin: return "Origin";
    }
    return "Origin";
}

struct ClosedEval {
    bool available = false;
    double value = 0.0;
    Branch branch = Branch::None;
};

ClosedEval closed_dist(const ParabolaParams& p, DiscPoint lam, DiscPoint mu) {
    if (p.m() == 2 && p.n() == 3) {
        const auto kd = knese_distance_23(lam, mu);
        return {true, kd.value, kd.branch};
    }
    if (p.m() == 2 && p.n() % 2 == 1 &&
        std::abs(mu.value() + lam.value()) <= 1e-12 * (lam.abs() + 1.0)) {
        const int k = (p.n() - 1) / 2;
        return {true, std::atanh(opposite_points_2odd(k, lam)), Branch::None};
    }
    return {};
}

ClosedEval closed_gamma0(const ParabolaParams& p, cplx X1, cplx X2) {
    if (p.m() == 3 && p.n() == 4) {
        const auto g = gamma34_origin(X1, X2);
        return {true, g.value, g.branch};
    }
    if (X1 == cplx(0.0, 0.0) || X2 == cplx(0.0, 0.0))
        return {true, std::hypot(std::abs(X1), std::abs(X2)), Branch::None};
    return {};
}

oracle::OracleConfig oracle_config(const CliConfig& c) {
    oracle::OracleConfig cfg;
    cfg.degree = c.degree;
    cfg.starts = c.starts;
    cfg.seed = c.seed;
    return cfg;
}

void attach_oracle_fields(ordered_json& j, const oracle::OracleResult& r,
                          const CliConfig& c) {
    j["evaluations"] = r.evaluations;
    j["converged"] = r.converged;
    j["seed"] = c.seed;
}

// closed/oracle/both dispatch shared by dist, inner, metric, gamma0
int emit_value(const CliConfig& c, std::ostream& out, ordered_json j,
               const ClosedEval& closed,
               const std::function<oracle::OracleResult()>& run_oracle,
               double oracle_to_value_scale_atanh) {
    auto oracle_value = [&](const oracle::OracleResult& r) {
        return oracle_to_value_scale_atanh ? std::atanh(r.value) : r.value;
    };

    if (c.method == Method::Closed && closed.available) {
        j["value"] = json_number(closed.value);
        j["branch"] = branch_name(closed.branch);
        j["method"] = "closed";
    } else if (c.method == Method::Both) {
        const auto r = run_oracle();
        const double ov = oracle_value(r);
        j["value"] = closed.available ? json_number(closed.value) : json_number(ov);
        j["branch"] = branch_name(closed.branch);
        j["method"] = "both";
        j["closed"] = closed.available ? json_number(closed.value) : ordered_json(nullptr);
        j["oracle"] = json_number(ov);
        j["difference"] =
            closed.available ? json_number(closed.value - ov) : ordered_json(nullptr);
        attach_oracle_fields(j, r, c);
    } else {
        const auto r = run_oracle();
        j["value"] = json_number(oracle_value(r));
        j["branch"] = branch_name(closed.branch);
        j["method"] = c.method == Method::Oracle ? "oracle" : "oracle-lower-bound";
        attach_oracle_fields(j, r, c);
    }
    out << j.dump() << "\n";
    return 0;
}

int run_dist(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    const DiscPoint lam(c.lambda), mu(c.mu);
    ordered_json j;
    j["command"] = "dist";
    j["m"] = c.m;
    j["n"] = c.n;
    j["lambda"] = json_complex(c.lambda);
    j["mu"] = json_complex(c.mu);
    return emit_value(c, out, std::move(j), closed_dist(p, lam, mu),
                      [&]() { return oracle::caratheodory_lower(p, lam, mu, oracle_config(c)); },
                      true);
}

int run_inner(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    const DiscPoint lam(c.lambda), mu(c.mu);
    const auto closed = inner_distance(p, lam, mu);
    ordered_json j;
    j["command"] = "inner";
    j["m"] = c.m;
    j["n"] = c.n;
    j["lambda"] = json_complex(c.lambda);
    j["mu"] = json_complex(c.mu);
    return emit_value(c, out, std::move(j), {true, closed.value, closed.branch},
                      [&]() { return oracle::inner_length_oracle(p, lam, mu, oracle_config(c)); },
                      false);
}

int run_metric(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    const DiscPoint lam(c.lambda);
    ordered_json j;
    j["command"] = "metric";
    j["m"] = c.m;
    j["n"] = c.n;
    j["lambda"] = json_complex(c.lambda);
    return emit_value(c, out, std::move(j), {true, reiffen_metric(p, lam), Branch::None},
                      [&]() { return oracle::reiffen_lower(p, lam, oracle_config(c)); }, false);
}

int run_gamma0(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    ordered_json j;
    j["command"] = "gamma0";
    j["m"] = c.m;
    j["n"] = c.n;
    j["X1"] = json_complex(c.X1);
    j["X2"] = json_complex(c.X2);
    return emit_value(c, out, std::move(j), closed_gamma0(p, c.X1, c.X2),
                      [&]() { return oracle::origin_gamma_lower(p, c.X1, c.X2, oracle_config(c)); },
                      false);
}

int run_kobayashi(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    const DiscPoint lam(c.lambda), mu(c.mu);
    ordered_json j;
    j["command"] = "kobayashi";
    j["m"] = c.m;
    j["n"] = c.n;
    j["lambda"] = json_complex(c.lambda);
    j["mu"] = json_complex(c.mu);
    j["value"] = json_number(kobayashi_distance(p, lam, mu));
    j["branch"] = branch_name(Branch::None);
    j["method"] = "closed";
    out << j.dump() << "\n";
    return 0;
}

int run_gapset(const CliConfig& c, std::ostream& out, bool json_format) {
    const auto p = make_params(c.m, c.n);
    if (json_format) {
        ordered_json j;
        j["command"] = "gapset";
        j["m"] = c.m;
        j["n"] = c.n;
        j["gap_set"] = p.gap_set();
        j["frobenius"] = p.frobenius() ? ordered_json(*p.frobenius()) : ordered_json("none");
        out << j.dump() << "\n";
        return 0;
    }
    std::string line;
    for (int s : p.gap_set()) {
        if (!line.empty()) line += ' ';
        line += std::to_string(s);
    }
    if (!line.empty()) line += ' ';
    line += "(frobenius ";
    line += p.frobenius() ? std::to_string(*p.frobenius()) : std::string("none");
    line += ")";
    out << line << "\n";
    return 0;
}

int run_cross(const CliConfig& c, std::ostream& out) {
    ordered_json j;
    j["command"] = "cross";
    j["op"] = c.cross_op;
    const CrossPoint p = CrossPoint::from_coordinates(c.z1, c.w1);
    std::string branch = cross_branch_name(p.branch());

    double value = 0.0;
    if (c.cross_op == "gamma" || c.cross_op == "kappa") {
        value = c.cross_op == "gamma" ? cross_gamma(p, c.X1, c.X2)
                                      : cross_kappa(p, c.X1, c.X2);
        j["X1"] = json_complex(c.X1);
        j["X2"] = json_complex(c.X2);
    } else {
        const CrossPoint q = CrossPoint::from_coordinates(c.z2, c.w2);
        branch += std::string("-") + cross_branch_name(q.branch());
        if (c.cross_op == "dist")
            value = cross_caratheodory(p, q);
        else if (c.cross_op == "lempert")
            value = cross_lempert(p, q);
        else
            value = cross_kobayashi(p, q);
    }
    j["value"] = json_number(value);
    j["branch"] = branch;
    j["method"] = "closed";
    out << j.dump() << "\n";
    return 0;
}

int run_table(const CliConfig& c, std::ostream& out) {
    const auto p = make_params(c.m, c.n);
    const DiscPoint mu(c.mu);
    const int g = c.grid;

    struct Row {
        double re, im, value;
        std::string branch;
    };
    std::vector<Row> rows;
    for (int i = 0; i < g; ++i) {
        for (int k = 0; k < g; ++k) {
            const double x = g == 1 ? 0.0 : -0.8 + 1.6 * i / (g - 1);
            const double y = g == 1 ? 0.0 : -0.8 + 1.6 * k / (g - 1);
            const cplx lv(x, y);
            if (std::abs(lv) >= 0.995) continue;
            const DiscPoint lam(lv);

            double value = 0.0;
            Branch branch = Branch::None;
            if (c.quantity == "dist") {
                const auto closed = closed_dist(p, lam, mu);
                if (closed.available) {
                    value = closed.value;
                    branch = closed.branch;
                } else {
                    value = std::atanh(
                        oracle::caratheodory_lower(p, lam, mu, oracle_config(c)).value);
                }
            } else if (c.quantity == "inner") {
                const auto v = inner_distance(p, lam, mu);
                value = v.value;
                branch = v.branch;
            } else if (c.quantity == "kobayashi") {
                value = kobayashi_distance(p, lam, mu);
            } else {  // metric
                value = reiffen_metric(p, lam);
            }
            rows.push_back({x, y, value, branch_name(branch)});
        }
    }

    if (c.format == Format::Json) {
        ordered_json j;
        j["command"] = "table";
        j["quantity"] = c.quantity;
        j["mu"] = json_complex(c.mu);
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back(ordered_json::array(
                {r.re, r.im, json_number(r.value), r.branch}));
        out << j.dump() << "\n";
        return 0;
    }
    out << "lambda_re,lambda_im,value,branch\n";
    for (const auto& r : rows)
        out << csv_number(r.re) << ',' << csv_number(r.im) << ',' << csv_number(r.value)
            << ',' << r.branch << "\n";
    return 0;
}

int run_verify(const CliConfig& c, std::ostream& out) {
    const auto result = verify::run_suite(c.suite, c.seed);
    out << verify::to_json(result) << "\n";
    return result.pass() ? 0 : 3;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& argv) {
    CliConfig cfg;
    std::string lambda_s = "0,0", mu_s = "0,0", x1_s = "0,0", x2_s = "0,0";
    std::string z1_s = "0,0", w1_s = "0,0", z2_s = "0,0", w2_s = "0,0";
    std::string method_s = "closed", format_s;
    std::string seed_s;

    CLI::App app{"invariant distances and metrics on generalized Neil parabolas"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_points) {
        sub->add_option("--m", cfg.m, "first exponent");
        sub->add_option("--n", cfg.n, "second exponent");
        if (with_points) {
            sub->add_option("--lambda", lambda_s, "disc parameter, re,im");
            sub->add_option("--mu", mu_s, "disc parameter, re,im");
        }
        sub->add_option("--method", method_s, "closed|oracle|both");
        sub->add_option("--N", cfg.degree, "oracle truncation degree");
        sub->add_option("--starts", cfg.starts, "oracle multistart count");
        sub->add_option("--seed", seed_s, "oracle seed");
        sub->add_option("--format", format_s, "json|csv");
    };

    add_common(app.add_subcommand("dist", "Caratheodory distance on A_{m,n}"), true);
    add_common(app.add_subcommand("inner", "inner Caratheodory distance"), true);
    add_common(app.add_subcommand("metric", "Caratheodory-Reiffen metric along p'"), true);
    auto* gamma0 = app.add_subcommand("gamma0", "origin Caratheodory-Reiffen metric");
    add_common(gamma0, false);
    gamma0->add_option("--X1", x1_s, "tangent component, re,im");
    gamma0->add_option("--X2", x2_s, "tangent component, re,im");
    add_common(app.add_subcommand("kobayashi", "Kobayashi distance"), true);
    add_common(app.add_subcommand("gapset", "gap set of <m,n>"), false);

    auto* cross = app.add_subcommand("cross", "coordinate cross V = {zw=0}");
    cross->add_option("--op", cfg.cross_op, "dist|lempert|kobayashi|gamma|kappa");
    cross->add_option("--z1", z1_s, "first point z, re,im");
    cross->add_option("--w1", w1_s, "first point w, re,im");
    cross->add_option("--z2", z2_s, "second point z, re,im");
    cross->add_option("--w2", w2_s, "second point w, re,im");
    cross->add_option("--X1", x1_s, "tangent component, re,im");
    cross->add_option("--X2", x2_s, "tangent component, re,im");
    cross->add_option("--format", format_s, "json|csv");

    auto* table = app.add_subcommand("table", "grid CSV of a quantity over lambda");
    add_common(table, true);
    table->add_option("--quantity", cfg.quantity, "dist|inner|kobayashi|metric");
    table->add_option("--grid", cfg.grid, "grid resolution per axis");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "suite name or 'all'");
    verify->add_option("--seed", seed_s, "suite seed");
    verify->add_option("--format", format_s, "json");

    std::vector<const char*> cargv;
    cargv.push_back("neil");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        throw HelpShown(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help());
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "dist") cfg.command = Command::Dist;
    else if (sub == "inner") cfg.command = Command::Inner;
    else if (sub == "metric") cfg.command = Command::Metric;
    else if (sub == "gamma0") cfg.command = Command::Gamma0;
    else if (sub == "kobayashi") cfg.command = Command::Kobayashi;
    else if (sub == "gapset") cfg.command = Command::Gapset;
    else if (sub == "cross") cfg.command = Command::Cross;
    else if (sub == "table") cfg.command = Command::Table;
    else cfg.command = Command::Verify;

    cfg.lambda = parse_complex(lambda_s);
    cfg.mu = parse_complex(mu_s);
    cfg.X1 = parse_complex(x1_s);
    cfg.X2 = parse_complex(x2_s);
    cfg.z1 = parse_complex(z1_s);
    cfg.w1 = parse_complex(w1_s);
    cfg.z2 = parse_complex(z2_s);
    cfg.w2 = parse_complex(w2_s);

    if (method_s == "closed") cfg.method = Method::Closed;
    else if (method_s == "oracle") cfg.method = Method::Oracle;
    else if (method_s == "both") cfg.method = Method::Both;
    else throw UsageError("unknown method '" + method_s + "'");

    if (!format_s.empty()) {
        if (format_s == "json") cfg.format = Format::Json;
        else if (format_s == "csv") cfg.format = Format::Csv;
        else throw UsageError("unknown format '" + format_s + "'");
    } else if (cfg.command == Command::Gapset) {
        cfg.format = Format::Csv;  // plain gap-set line by default
    }

    if (!seed_s.empty()) {
        try {
            cfg.seed = std::stoull(seed_s);
        } catch (const std::exception&) {
            throw UsageError("cannot parse seed '" + seed_s + "'");
        }
    }
    if (const char* env = std::getenv("NEIL_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("cannot parse NEIL_SEED value");
        }
    }

    // validate everything before dispatch
    try {
        switch (cfg.command) {
            case Command::Dist:
            case Command::Inner:
            case Command::Kobayashi:
                make_params(cfg.m, cfg.n);
                DiscPoint(cfg.lambda);
                DiscPoint(cfg.mu);
                break;
            case Command::Metric:
                make_params(cfg.m, cfg.n);
                DiscPoint(cfg.lambda);
                break;
            case Command::Gamma0:
                make_params(cfg.m, cfg.n);
                if (cfg.X1 == cplx(0.0, 0.0) && cfg.X2 == cplx(0.0, 0.0))
                    throw UsageError("gamma0: zero tangent vector");
                break;
            case Command::Gapset:
                make_params(cfg.m, cfg.n);
                break;
            case Command::Table:
                make_params(cfg.m, cfg.n);
                DiscPoint(cfg.mu);
                if (cfg.grid < 1 || cfg.grid > 4096) throw UsageError("grid out of range");
                if (cfg.quantity != "dist" && cfg.quantity != "inner" &&
                    cfg.quantity != "kobayashi" && cfg.quantity != "metric")
                    throw UsageError("unknown table quantity '" + cfg.quantity + "'");
                break;
            case Command::Cross:
                if (cfg.cross_op != "dist" && cfg.cross_op != "lempert" &&
                    cfg.cross_op != "kobayashi" && cfg.cross_op != "gamma" &&
                    cfg.cross_op != "kappa")
                    throw UsageError("unknown cross op '" + cfg.cross_op + "'");
                CrossPoint::from_coordinates(cfg.z1, cfg.w1);
                if (cfg.cross_op == "dist" || cfg.cross_op == "lempert" ||
                    cfg.cross_op == "kobayashi")
                    CrossPoint::from_coordinates(cfg.z2, cfg.w2);
                break;
            case Command::Verify:
                if (!verify::is_suite(cfg.suite))
                    throw UsageError("unknown suite '" + cfg.suite + "'");
                break;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (cfg.starts < 1 || cfg.starts > 4096) throw UsageError("starts out of range");
    return cfg;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Dist: return run_dist(config, out);
            case Command::Inner: return run_inner(config, out);
            case Command::Metric: return run_metric(config, out);
            case Command::Gamma0: return run_gamma0(config, out);
            case Command::Kobayashi: return run_kobayashi(config, out);
            case Command::Gapset:
                return run_gapset(config, out, config.format == Format::Json);
            case Command::Cross: return run_cross(config, out);
            case Command::Table: return run_table(config, out);
            case Command::Verify: return run_verify(config, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        const CliConfig cfg = parse_args(args);
        return run(cfg, std::cout, std::cerr);
    } catch (const HelpShown& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

}  // namespace neil::cli
