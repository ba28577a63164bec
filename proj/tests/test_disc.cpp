#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "neil/disc.hpp"
#include "neil/optimize.hpp"

#include <cmath>
#include <numbers>

using namespace neil;

namespace {

const MetricFn poincare_density = [](cplx z, cplx v) {
    return std::abs(v) / (1.0 - std::norm(z));
};

SampledCurve geodesic_samples(DiscPoint a, DiscPoint b, int n) {
    std::vector<cplx> pts(n);
    for (int i = 0; i < n; ++i)
        pts[i] = geodesic(a, b, static_cast<double>(i) / (n - 1)).value();
    return SampledCurve::uniform(std::move(pts));
}

}  // namespace

TEST_CASE("disc point construction") {
    CHECK_NOTHROW(DiscPoint(0.999999));
    CHECK_THROWS_AS(DiscPoint(1.0), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(cplx(0.8, 0.7)), std::domain_error);
    CHECK_THROWS_AS(DiscPoint(1.0 - 1e-15), std::domain_error);
}

TEST_CASE("moebius pseudodistance") {
    const DiscPoint l(cplx(0.3, 0.2));
    CHECK(moebius_pseudodistance(l, l) == 0.0);
    CHECK(moebius_pseudodistance(DiscPoint(0.5), DiscPoint(0.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(moebius_pseudodistance(DiscPoint(0.5), DiscPoint(-0.5)) == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("poincare distance") {
    const DiscPoint l(cplx(-0.1, 0.6));
    CHECK(poincare_distance(l, l) == 0.0);
    CHECK(poincare_distance(DiscPoint(0.25), DiscPoint(0.0)) ==
          doctest::Approx(0.2554128118829953).epsilon(1e-12));
    CHECK(poincare_distance(DiscPoint(0.5), DiscPoint(-0.5)) ==
          doctest::Approx(1.0986122886681098).epsilon(1e-12));
}

TEST_CASE("moebius map basics") {
    const DiscPoint a(cplx(0.3, -0.4));
    CHECK(std::abs(apply_moebius(MobiusMap(a.value()), a).value) < 1e-15);
    CHECK(apply_moebius(MobiusMap(cplx(0.0)), DiscPoint(cplx(0.2, 0.1))).value ==
          cplx(-0.2, -0.1));
    CHECK(apply_moebius(MobiusMap(cplx(0.5)), DiscPoint(0.0)).value == cplx(0.5, 0.0));
    CHECK_FALSE(apply_moebius(MobiusMap(cplx(0.5)), DiscPoint(0.0)).degenerate);

    // |alpha| = 1 collapses to the constant alpha, flagged
    const MobiusMap boundary(std::polar(1.0, 0.7));
    const auto img = apply_moebius(boundary, DiscPoint(cplx(0.4, 0.1)));
    CHECK(img.degenerate);
    CHECK(std::abs(img.value - std::polar(1.0, 0.7)) < 1e-12);

    CHECK_THROWS_AS(MobiusMap(cplx(1.5)), std::domain_error);
}

TEST_CASE("moebius invariance of m_D") {
    auto rng = opt::derive_stream(7, 0);
    for (int t = 0; t < 1000; ++t) {
        const cplx al = std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 6.28));
        const cplx z1 = std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 6.28));
        const cplx z2 = std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 6.28));
        const MobiusMap phi(al);
        CHECK(std::abs(moebius_pseudodistance(phi(z1), phi(z2)) -
                       moebius_pseudodistance(z1, z2)) < 1e-12);
    }
}

TEST_CASE("rho = atanh of m_D and triangle inequality") {
    auto rng = opt::derive_stream(8, 0);
    for (int t = 0; t < 1000; ++t) {
        const cplx a = std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 6.28));
        const cplx b = std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 6.28));
        const cplx c = std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 6.28));
        CHECK(poincare_distance(a, b) ==
              doctest::Approx(std::atanh(moebius_pseudodistance(a, b))).epsilon(1e-15));
        CHECK(poincare_distance(a, b) + poincare_distance(b, c) -
                  poincare_distance(a, c) >= -1e-12);
    }
}

TEST_CASE("geodesic endpoints, monotonicity, radial case") {
    const DiscPoint a(cplx(0.3, 0.2)), b(cplx(-0.4, 0.5));
    CHECK(std::abs(geodesic(a, b, 0.0).value() - a.value()) < 1e-15);
    CHECK(std::abs(geodesic(a, b, 1.0).value() - b.value()) < 1e-14);

    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double d = poincare_distance(a, geodesic(a, b, i / 40.0));
        CHECK(d >= prev - 1e-15);
        prev = d;
    }

    // radial geodesic through 0 is the segment
    for (double t : {0.0, 0.25, 0.5, 1.0})
        CHECK(std::abs(geodesic(DiscPoint(0.0), DiscPoint(0.6), t).value() - cplx(0.6 * t)) <
              1e-14);

    // the geodesic between two nearby positive reals stays on the real segment
    const DiscPoint p(0.25), q(0.16);
    const cplx mid = geodesic(p, q, 0.5).value();
    CHECK(std::abs(mid.imag()) < 1e-14);
    CHECK(mid.real() > 0.16);
    CHECK(mid.real() < 0.25);

    CHECK_THROWS_AS(geodesic(a, a, 0.5), std::invalid_argument);
}

TEST_CASE("curve length examples") {
    // constant curve
    const SampledCurve constant = SampledCurve::uniform(std::vector<cplx>(8, cplx(0.2, 0.1)));
    CHECK(curve_length(constant, poincare_density).value == doctest::Approx(0.0));

    // radial segment [0, 0.5]: atanh(0.5)
    std::vector<cplx> radial(257);
    for (int i = 0; i < 257; ++i) radial[i] = cplx(0.5 * i / 256.0);
    const auto r = curve_length(SampledCurve::uniform(std::move(radial)), poincare_density);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5493061443340548).epsilon(1e-6));

    // Poincare geodesic from 0.25 to 0.16
    const auto g = curve_length(geodesic_samples(DiscPoint(0.25), DiscPoint(0.16), 257),
                                poincare_density);
    CHECK(g.value == doctest::Approx(0.09402611575146982).epsilon(1e-6));
}

TEST_CASE("curve length of geodesics reproduces rho") {
    auto rng = opt::derive_stream(9, 0);
    for (int t = 0; t < 12; ++t) {
        const DiscPoint a(std::polar(0.8 * rng.uniform(), rng.uniform(0.0, 6.28)));
        const DiscPoint b(std::polar(0.8 * rng.uniform(), rng.uniform(0.0, 6.28)));
        if (std::abs(a.value() - b.value()) < 1e-3) continue;
        const auto len = curve_length(geodesic_samples(a, b, 2001), poincare_density);
        CHECK(len.value == doctest::Approx(poincare_distance(a, b)).epsilon(1e-6));
    }
}

TEST_CASE("curve length error paths") {
    std::vector<cplx> seg = {cplx(0.0), cplx(0.5)};
    const MetricFn bad = [](cplx z, cplx) {
        return std::abs(z) > 0.2 ? std::numeric_limits<double>::infinity() : 1.0;
    };
    CHECK_THROWS_AS(curve_length(SampledCurve::uniform(seg), bad), std::domain_error);

    CHECK_THROWS_AS(SampledCurve({cplx(0.0)}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SampledCurve({cplx(0.0), cplx(0.1)}, {0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SampledCurve({cplx(0.0), cplx(1.2)}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("power monotonicity of rho") {
    auto rng = opt::derive_stream(10, 0);
    for (int t = 0; t < 10000; ++t) {
        const double a = rng.uniform(0.0, 0.98);
        const double b = rng.uniform(0.0, 0.98);
        const double s = rng.uniform(0.02, 1.0);
        const double th = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double lhs = poincare_distance(cplx(a), b * std::polar(1.0, th));
        const double rhs =
            poincare_distance(cplx(std::pow(a, s)), std::pow(b, s) * std::polar(1.0, s * th));
        CHECK(rhs - lhs >= -1e-12);
    }
}
