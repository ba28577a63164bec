#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "neil/closed_forms.hpp"
#include "neil/optimize.hpp"

#include <cmath>

using namespace neil;

namespace {
DiscPoint rand_pt(opt::SplitMix64& rng, double radius = 0.85) {
    return DiscPoint(std::polar(radius * std::sqrt(rng.uniform()), rng.uniform(0.0, 6.2831853)));
}
}  // namespace

TEST_CASE("alpha0") {
    const auto a = alpha0(DiscPoint(0.5), DiscPoint(0.5));
    CHECK_FALSE(a.large_branch);
    CHECK(std::abs(a.value - cplx(2.5)) < 1e-14);

    const auto b = alpha0(DiscPoint(0.5), DiscPoint(-0.5));
    CHECK(std::abs(b.value) < 1e-14);

    CHECK(alpha0(DiscPoint(0.3), DiscPoint(0.0)).large_branch);
}

TEST_CASE("knese distance on (2,3)") {
    const DiscPoint l(cplx(0.2, 0.4));
    const auto same = knese_distance_23(l, l);
    CHECK(same.value == doctest::Approx(0.0));
    CHECK(same.branch == Branch::LargeAlpha);

    const auto half = knese_distance_23(DiscPoint(0.5), DiscPoint(0.0));
    CHECK(half.value == doctest::Approx(0.2554128118829953).epsilon(1e-12));
    CHECK(half.branch == Branch::LargeAlpha);

    const auto opp = knese_distance_23(DiscPoint(0.5), DiscPoint(-0.5));
    CHECK(opp.value == doctest::Approx(0.2513144282809061).epsilon(1e-12));
    CHECK(opp.branch == Branch::SmallAlpha);

    // symmetry and the lower bound rho(l^2, mu^2) on random pairs
    auto rng = opt::derive_stream(41, 0);
    for (int t = 0; t < 2000; ++t) {
        const DiscPoint lam = rand_pt(rng), mu = rand_pt(rng);
        const auto ab = knese_distance_23(lam, mu);
        const auto ba = knese_distance_23(mu, lam);
        CHECK(std::abs(ab.value - ba.value) < 1e-12);
        CHECK(ab.value >= poincare_distance(lam.value() * lam.value(),
                                            mu.value() * mu.value()) -
                              1e-12);
    }
}

TEST_CASE("knese metric on (2,3)") {
    const auto p23 = make_params(2, 3);
    const ParabolaPoint origin = parametrize(p23, DiscPoint(0.0));

    Tangent up;
    up.X1 = cplx(0.0);
    up.X2 = cplx(1.0);
    up.base = origin;
    const auto v1 = knese_metric_23(origin, up);
    CHECK(v1.value == doctest::Approx(1.0));
    CHECK(v1.branch == Branch::OriginX2);
    CHECK_FALSE(v1.discrepancy);

    Tangent right;
    right.X1 = cplx(1.0);
    right.X2 = cplx(0.0);
    right.base = origin;
    const auto v2 = knese_metric_23(origin, right);
    CHECK(v2.value == doctest::Approx(1.0));
    CHECK(v2.branch == Branch::OriginX1);
    CHECK_FALSE(v2.discrepancy);

    // mixed middle-branch vector carries the documented discrepancy flag
    Tangent mixed;
    mixed.X1 = cplx(1.0);
    mixed.X2 = cplx(1.0);
    mixed.base = origin;
    const auto v3 = knese_metric_23(origin, mixed);
    CHECK(v3.value == doctest::Approx(1.0));
    CHECK(v3.discrepancy);

    // off origin: X = lambda (3a, 2b) at lambda = 0.5
    const ParabolaPoint base = parametrize(p23, DiscPoint(0.5));
    Tangent tan;
    tan.X1 = 0.5 * 3.0 * base.z;
    tan.X2 = 0.5 * 2.0 * base.w;
    tan.base = base;
    const auto v4 = knese_metric_23(base, tan);
    CHECK(v4.value == doctest::Approx(0.26666666666666666).epsilon(1e-12));
    CHECK(v4.branch == Branch::OffOrigin);

    // consistency with the reiffen formula: X = p'(lambda)
    Tangent pprime = tangent_at(p23, DiscPoint(0.5), cplx(1.0));
    const auto v5 = knese_metric_23(base, pprime);
    CHECK(v5.value == doctest::Approx(reiffen_metric(p23, DiscPoint(0.5))).epsilon(1e-12));

    Tangent bad;
    bad.X1 = cplx(1.0);
    bad.X2 = cplx(0.3);
    bad.base = base;
    CHECK_THROWS_AS(knese_metric_23(base, bad), std::invalid_argument);
}

TEST_CASE("reiffen metric") {
    CHECK(reiffen_metric(make_params(1, 2), DiscPoint(0.0)) == doctest::Approx(1.0));
    CHECK(reiffen_metric(make_params(2, 3), DiscPoint(0.5)) ==
          doctest::Approx(1.0666666666666667).epsilon(1e-12));
    CHECK(reiffen_metric(make_params(3, 4), DiscPoint(0.0)) == doctest::Approx(0.0));
    CHECK(reiffen_metric(make_params(3, 4), DiscPoint(0.3)) ==
          doctest::Approx(0.27019697359374983).epsilon(1e-12));
}

TEST_CASE("inner distance") {
    const auto p23 = make_params(2, 3);
    const auto through = inner_distance(p23, DiscPoint(0.5), DiscPoint(-0.5));
    CHECK(through.branch == Branch::ThroughOrigin);
    CHECK(through.value == doctest::Approx(0.5108256237659907).epsilon(1e-12));

    const auto sector = inner_distance(p23, DiscPoint(0.5), DiscPoint(cplx(0.0, 0.5)));
    CHECK(sector.branch == Branch::Sector);
    CHECK(sector.value == doctest::Approx(0.5108256237659907).epsilon(1e-12));

    const DiscPoint l(cplx(0.3, -0.6));
    CHECK(inner_distance(p23, l, l).value == doctest::Approx(0.0));

    // m = 1: always the sector branch (c is inner)
    const auto p13 = make_params(1, 3);
    auto rng = opt::derive_stream(42, 0);
    for (int t = 0; t < 300; ++t)
        CHECK(inner_distance(p13, rand_pt(rng), rand_pt(rng)).branch == Branch::Sector);
}

TEST_CASE("c equals c^i characterization") {
    const auto p23 = make_params(2, 3);
    CHECK(c_equals_ci(p23, DiscPoint(0.5), DiscPoint(0.4)));
    CHECK(c_equals_ci(p23, DiscPoint(0.5), DiscPoint(cplx(0.0, 0.5))));
    CHECK_FALSE(c_equals_ci(p23, DiscPoint(0.5), DiscPoint(-0.5)));

    // random-pair equivalence against the closed forms
    auto rng = opt::derive_stream(43, 0);
    for (int t = 0; t < 2000; ++t) {
        const DiscPoint lam = rand_pt(rng), mu = rand_pt(rng);
        const bool eq = std::abs(knese_distance_23(lam, mu).value -
                                 inner_distance(p23, lam, mu).value) < 1e-10;
        CHECK(eq == c_equals_ci(p23, lam, mu));
    }
}

TEST_CASE("gamma34 origin") {
    CHECK(gamma34_origin(cplx(1.0), cplx(0.0)).value == doctest::Approx(1.0));
    CHECK(gamma34_origin(cplx(1.0), cplx(0.0)).branch == Branch::BigX1);
    CHECK(gamma34_origin(cplx(0.0), cplx(1.0)).value == doctest::Approx(1.0));
    CHECK(gamma34_origin(cplx(0.0), cplx(1.0)).branch == Branch::BigX2);

    const auto mid = gamma34_origin(cplx(1.0), cplx(1.0));
    CHECK(mid.branch == Branch::MiddleC);
    CHECK(mid.value == doctest::Approx(1.1126117909223805).epsilon(1e-10));

    // continuity across both branch boundaries
    for (double c : {1.0, 2.0 * std::numbers::sqrt2}) {
        const double lo = gamma34_origin(cplx(1.0), cplx((c - 1e-8) / 2.0)).value;
        const double hi = gamma34_origin(cplx(1.0), cplx((c + 1e-8) / 2.0)).value;
        CHECK(std::abs(hi - lo) < 1e-6);
    }

    CHECK_THROWS_AS(gamma34_origin(cplx(0.0), cplx(0.0)), std::invalid_argument);
}

TEST_CASE("opposite points on (2,2k+1)") {
    CHECK(opposite_points_2odd(1, DiscPoint(0.5)) ==
          doctest::Approx(0.24615384615384617).epsilon(1e-14));
    CHECK(opposite_points_2odd(2, DiscPoint(0.5)) ==
          doctest::Approx(0.0624390243902439).epsilon(1e-14));
    CHECK(opposite_points_2odd(3, DiscPoint(0.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(opposite_points_2odd(0, DiscPoint(0.5)), std::invalid_argument);
}

TEST_CASE("kobayashi distance and metric") {
    const auto p23 = make_params(2, 3);
    const DiscPoint l(cplx(0.2, -0.5));
    CHECK(kobayashi_distance(p23, l, l) == doctest::Approx(0.0));
    CHECK(kobayashi_distance(p23, DiscPoint(0.5), DiscPoint(0.0)) ==
          doctest::Approx(0.5493061443340548).epsilon(1e-12));
    CHECK(kobayashi_distance(p23, DiscPoint(0.5), DiscPoint(-0.5)) ==
          doctest::Approx(1.0986122886681098).epsilon(1e-12));
    CHECK(kobayashi_distance(p23, DiscPoint(0.5), DiscPoint(-0.5)) >
          knese_distance_23(DiscPoint(0.5), DiscPoint(-0.5)).value);

    const auto t = tangent_at(p23, DiscPoint(0.5), cplx(1.0));
    CHECK(kobayashi_metric(p23, DiscPoint(0.5), t) ==
          doctest::Approx(1.3333333333333333).epsilon(1e-12));

    Tangent origin_vec;
    origin_vec.X1 = cplx(1.0);
    origin_vec.X2 = cplx(0.0);
    origin_vec.base = parametrize(p23, DiscPoint(0.0));
    CHECK(std::isinf(kobayashi_metric(p23, DiscPoint(0.0), origin_vec)));

    Tangent zero_vec;
    zero_vec.base = origin_vec.base;
    CHECK(kobayashi_metric(p23, DiscPoint(0.0), zero_vec) == doctest::Approx(0.0));

    const auto p14 = make_params(1, 4);
    Tangent m1;
    m1.X1 = cplx(0.0);
    m1.X2 = cplx(0.7, 0.2);
    m1.base = parametrize(p14, DiscPoint(0.0));
    CHECK(kobayashi_metric(p14, DiscPoint(0.0), m1) ==
          doctest::Approx(std::abs(cplx(0.7, 0.2))).epsilon(1e-14));
}

TEST_CASE("rho^(m) special values") {
    CHECK(rho_m_special(2, DiscPoint(0.5)) ==
          doctest::Approx(0.2513144282809061).epsilon(1e-12));
    CHECK(rho_m_special(4, DiscPoint(0.5)) ==
          doctest::Approx(0.062520356981334).epsilon(1e-10));
    CHECK(rho_m_special(2, DiscPoint(0.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(rho_m_special(3, DiscPoint(0.5)), std::invalid_argument);
}

TEST_CASE("metric homogeneity and distance symmetry") {
    const auto p23 = make_params(2, 3);
    auto rng = opt::derive_stream(44, 0);
    for (int t = 0; t < 200; ++t) {
        const DiscPoint lam = rand_pt(rng, 0.8);
        if (lam.abs() < 1e-3) continue;
        const cplx scale(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const double factor = rng.uniform(0.1, 3.0);
        const auto t1 = tangent_at(p23, lam, scale);
        const auto t2 = tangent_at(p23, lam, factor * scale);
        CHECK(kobayashi_metric(p23, lam, t2) ==
              doctest::Approx(factor * kobayashi_metric(p23, lam, t1)).epsilon(1e-12));

        const auto base = parametrize(p23, lam);
        CHECK(knese_metric_23(base, t2).value ==
              doctest::Approx(factor * knese_metric_23(base, t1).value).epsilon(1e-12));

        const DiscPoint mu = rand_pt(rng, 0.8);
        CHECK(inner_distance(p23, lam, mu).value ==
              doctest::Approx(inner_distance(p23, mu, lam).value).epsilon(1e-13));
        CHECK(kobayashi_distance(p23, lam, mu) ==
              doctest::Approx(kobayashi_distance(p23, mu, lam)).epsilon(1e-13));
    }

    // gamma34 scales linearly in |t|
    const double g1 = gamma34_origin(cplx(1.0), cplx(1.0)).value;
    const double g3 = gamma34_origin(cplx(3.0), cplx(3.0)).value;
    CHECK(g3 == doctest::Approx(3.0 * g1).epsilon(1e-13));
}

TEST_CASE("ordering chain on random pairs") {
    const auto p23 = make_params(2, 3);
    auto rng = opt::derive_stream(45, 0);
    for (int t = 0; t < 1000; ++t) {
        const DiscPoint lam = rand_pt(rng), mu = rand_pt(rng);
        const double lower =
            poincare_distance(lam.value() * lam.value(), mu.value() * mu.value());
        const double kd = knese_distance_23(lam, mu).value;
        const double in = inner_distance(p23, lam, mu).value;
        const double kb = kobayashi_distance(p23, lam, mu);
        CHECK(kd - lower >= -1e-10);
        CHECK(in - kd >= -1e-10);
        CHECK(kb - in >= -1e-10);
    }
}
