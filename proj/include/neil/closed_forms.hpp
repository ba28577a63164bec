#pragma once

// Closed-form distances and metrics on A_{m,n}: the Knese formulas for the
// (2,3) parabola, the Caratheodory-Reiffen metric along p', the inner
// Caratheodory distance with its sector/through-origin case split, the
// (3,4) origin metric, opposite-point distances on A_{2,2k+1}, and the
// Kobayashi distance/metric.

#include "neil/parabola.hpp"

namespace neil {

enum class Branch {
    None,
    LargeAlpha,     // |alpha0| >= 1 (or lambda*mu = 0)
    SmallAlpha,     // |alpha0| < 1
    Sector,         // Re(lambda conj(mu)) >= cos(pi/m) |lambda mu|
    ThroughOrigin,  // complementary inner-distance case
    OriginX2,       // a=b=0, |X2| >= 2|X1|
    OriginX1,       // a=b=0, |X2| < 2|X1|
    OffOrigin,
    BigX1,          // |X1| >= 2|X2|
    BigX2,          // |X2| >= sqrt(2) |X1|
    MiddleC,        // 1 < c = 2|X2|/|X1| < 2 sqrt(2)
};

const char* branch_name(Branch b);

struct BranchedValue {
    double value = 0.0;
    Branch branch = Branch::None;
    // origin middle branch of the transcribed (2,3) metric with X1 X2 != 0:
    // the value conflicts with the general origin formula (oracle is ground
    // truth); reported, never silently corrected
    bool discrepancy = false;
};

struct Alpha0 {
    cplx value{0.0, 0.0};
    bool large_branch = false;  // lambda*mu = 0: read as the |alpha0| >= 1 case
};

// alpha0 = (lambda + 1/conj(lambda) + mu + 1/conj(mu)) / 2
Alpha0 alpha0(DiscPoint lambda, DiscPoint mu);

// Knese's c_{A_{2,3}} along the parametrization, piecewise in |alpha0|
BranchedValue knese_distance_23(DiscPoint lambda, DiscPoint mu);

// transcribed gamma_{A_{2,3}}((a,b); X); off the origin X must be tangent
BranchedValue knese_metric_23(const ParabolaPoint& point, const Tangent& X);

// gamma_{A_{m,n}}(p(lambda); p'(lambda)) = m |lambda|^{m-1} / (1 - |lambda|^{2m})
double reiffen_metric(const ParabolaParams& p, DiscPoint lambda);

bool sector_condition(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu);

// inner Caratheodory distance along the parametrization
BranchedValue inner_distance(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu);

// c = c^i at the pair iff the sector condition holds or (lambda conj(mu))^m
// is a negative real
bool c_equals_ci(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu);

// gamma_{A_{3,4}}(0; X), three branches in c = 2|X2|/|X1|
BranchedValue gamma34_origin(cplx X1, cplx X2);

// m_{A_{2,2k+1}}(p(lambda), p(-lambda)) = 2|lambda|^{2k+1}/(1+|lambda|^{4k+2});
// extended to lambda = 0 by continuity with value 0
double opposite_points_2odd(int k, DiscPoint lambda);

// k_{A_{m,n}} = Lempert function = rho(lambda, mu)
double kobayashi_distance(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu);

// Kobayashi-Royden metric; off the origin X must be tangent, at the origin
// the value is |X2| for m = 1 and infinity for m >= 2, X != 0
double kobayashi_metric(const ParabolaParams& p, DiscPoint lambda, const Tangent& X);

// rho^{(2m)}(lambda, -lambda) = rho(lambda^{2m+1}, -lambda^{2m+1}) with
// 2m = m_even
double rho_m_special(int m_even, DiscPoint lambda);

}  // namespace neil
