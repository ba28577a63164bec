#include "neil/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace neil {

namespace {

double ipow(double r, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= r;
    return acc;
}

// relative proportionality check |u - v| <= tol (|u| + |v|)
bool proportional(cplx u, cplx v, double tol = 1e-9) {
    return std::abs(u - v) <= tol * (std::abs(u) + std::abs(v) + 1e-300);
}

}  // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::None: return "None";
        case Branch::LargeAlpha: return "LargeAlpha";
        case Branch::SmallAlpha: return "SmallAlpha";
        case Branch::Sector: return "Sector";
        case Branch::ThroughOrigin: return "ThroughOrigin";
        case Branch::OriginX2: return "OriginX2";
        case Branch::OriginX1: return "OriginX1";
        case Branch::OffOrigin: return "OffOrigin";
        case Branch::BigX1: return "BigX1";
        case Branch::BigX2: return "BigX2";
        case Branch::MiddleC: return "MiddleC";
    }
    return "None";
}

Alpha0 alpha0(DiscPoint lambda, DiscPoint mu) {
    const cplx lv = lambda.value(), mv = mu.value();
    if (lv * mv == cplx(0.0, 0.0)) return {cplx(0.0, 0.0), true};
    const cplx a = 0.5 * (lv + 1.0 / std::conj(lv) + mv + 1.0 / std::conj(mv));
    return {a, false};
}

BranchedValue knese_distance_23(DiscPoint lambda, DiscPoint mu) {
    const cplx lv = lambda.value(), mv = mu.value();
    const cplx l2 = lv * lv, m2 = mv * mv;

    const Alpha0 a0 = alpha0(lambda, mu);
    if (a0.large_branch || std::abs(a0.value) >= 1.0)
        return {poincare_distance(l2, m2), Branch::LargeAlpha};

    const MobiusMap phi(a0.value);
    return {poincare_distance(l2 * phi(lv), m2 * phi(mv)), Branch::SmallAlpha};
}

BranchedValue knese_metric_23(const ParabolaPoint& point, const Tangent& X) {
    const cplx a = point.z, b = point.w;  // (a,b) = (lambda^3, lambda^2)
    const double x1 = std::abs(X.X1), x2 = std::abs(X.X2);

    if (a == cplx(0.0, 0.0) && b == cplx(0.0, 0.0)) {
        if (x2 >= 2.0 * x1) return {x2, Branch::OriginX2, false};
        return {x1, Branch::OriginX1, x1 > 0.0 && x2 > 0.0};
    }

    // X = c (3a, 2b): cross-multiplied proportionality 2 b X1 = 3 a X2
    if (!proportional(2.0 * b * X.X1, 3.0 * a * X.X2))
        throw std::invalid_argument("knese_metric_23: X is not tangent at the base point");
    // 2 |c b| / (1 - |b|^2) with c = X2 / (2 b)
    return {x2 / (1.0 - std::norm(b)), Branch::OffOrigin, false};
}

double reiffen_metric(const ParabolaParams& p, DiscPoint lambda) {
    const double r = lambda.abs();
    return p.m() * ipow(r, p.m() - 1) / (1.0 - ipow(r, 2 * p.m()));
}

namespace {

// cos(pi/m), exact where the closed forms quote an exact constant
double sector_cosine(int m) {
    if (m == 1) return -1.0;
    if (m == 2) return 0.0;
    return std::cos(std::numbers::pi / m);
}

}  // namespace

bool sector_condition(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu) {
    const cplx prod = lambda.value() * std::conj(mu.value());
    return prod.real() >= sector_cosine(p.m()) * std::abs(prod);
}

BranchedValue inner_distance(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu) {
    const cplx lm = cpow_int(lambda.value(), p.m());
    const cplx mm = cpow_int(mu.value(), p.m());
    if (sector_condition(p, lambda, mu))
        return {poincare_distance(lm, mm), Branch::Sector};
    return {std::atanh(std::abs(lm)) + std::atanh(std::abs(mm)), Branch::ThroughOrigin};
}

bool c_equals_ci(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu) {
    if (sector_condition(p, lambda, mu)) return true;
    const cplx t = cpow_int(lambda.value() * std::conj(mu.value()), p.m());
    // negative real within an angular tolerance of 1e-9
    return std::abs(t) > 1e-300 && std::numbers::pi - std::abs(std::arg(t)) < 1e-9;
}

BranchedValue gamma34_origin(cplx X1, cplx X2) {
    const double x1 = std::abs(X1), x2 = std::abs(X2);
    if (x1 == 0.0 && x2 == 0.0)
        throw std::invalid_argument("gamma34_origin: zero tangent vector");
    if (x1 >= 2.0 * x2) return {x1, Branch::BigX1};
    if (x2 >= std::numbers::sqrt2 * x1) return {x2, Branch::BigX2};
    const double c = 2.0 * x2 / x1;
    const double val = x1 * (c * c * c - 18.0 * c + std::pow(c * c + 24.0, 1.5)) / 108.0;
    return {val, Branch::MiddleC};
}

double opposite_points_2odd(int k, DiscPoint lambda) {
    if (k < 1) throw std::invalid_argument("opposite_points_2odd: need k >= 1");
    const double r = ipow(lambda.abs(), 2 * k + 1);
    return 2.0 * r / (1.0 + r * r);
}

double kobayashi_distance(const ParabolaParams&, DiscPoint lambda, DiscPoint mu) {
    return poincare_distance(lambda, mu);
}

double kobayashi_metric(const ParabolaParams& p, DiscPoint lambda, const Tangent& X) {
    const cplx lv = lambda.value();
    if (lv != cplx(0.0, 0.0)) {
        const cplx dz = static_cast<double>(p.n()) * cpow_int(lv, p.n() - 1);
        const cplx dw = static_cast<double>(p.m()) * cpow_int(lv, p.m() - 1);
        const cplx scale = X.X2 / dw;
        if (!proportional(X.X1, scale * dz))
            throw std::invalid_argument("kobayashi_metric: X is not tangent at the base point");
        return std::abs(scale) / (1.0 - std::norm(lv));
    }
    if (p.m() == 1) return std::abs(X.X2);
    if (X.X1 == cplx(0.0, 0.0) && X.X2 == cplx(0.0, 0.0)) return 0.0;
    return std::numeric_limits<double>::infinity();
}

double rho_m_special(int m_even, DiscPoint lambda) {
    if (m_even < 2 || m_even % 2 != 0)
        throw std::invalid_argument("rho_m_special: first argument must be even and positive");
    const cplx v = cpow_int(lambda.value(), m_even + 1);
    return poincare_distance(v, -v);
}

}  // namespace neil
