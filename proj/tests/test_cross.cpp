#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "neil/cross.hpp"
#include "neil/optimize.hpp"

#include <cmath>

using namespace neil;

namespace {
CrossPoint random_point(opt::SplitMix64& rng) {
    const int b = static_cast<int>(rng.next() % 3);
    const DiscPoint c(std::polar(0.9 * std::sqrt(rng.uniform()), rng.uniform(0.0, 6.28)));
    if (b == 0) return CrossPoint::z_axis(c);
    if (b == 1) return CrossPoint::w_axis(c);
    return CrossPoint::origin();
}
}  // namespace

TEST_CASE("cross point construction") {
    CHECK(CrossPoint::from_coordinates(cplx(0.5), cplx(0.0)).branch() == CrossBranch::ZAxis);
    CHECK(CrossPoint::from_coordinates(cplx(0.0), cplx(0.5)).branch() == CrossBranch::WAxis);
    CHECK(CrossPoint::from_coordinates(cplx(0.0), cplx(0.0)).branch() == CrossBranch::Origin);
    CHECK_THROWS_AS(CrossPoint::from_coordinates(cplx(0.1), cplx(0.1)),
                    std::invalid_argument);
}

TEST_CASE("cross caratheodory") {
    const auto p = CrossPoint::z_axis(DiscPoint(0.5));
    const auto q = CrossPoint::w_axis(DiscPoint(0.5));
    CHECK(cross_caratheodory(p, q) == doctest::Approx(1.0986122886681098).epsilon(1e-12));

    const auto r = CrossPoint::z_axis(DiscPoint(0.25));
    CHECK(cross_caratheodory(p, r) == doctest::Approx(0.2938933324510595).epsilon(1e-12));
    CHECK(cross_caratheodory(p, p) == doctest::Approx(0.0));
}

TEST_CASE("cross lempert") {
    const auto p = CrossPoint::z_axis(DiscPoint(0.5));
    const auto q = CrossPoint::w_axis(DiscPoint(0.5));
    CHECK(std::isinf(cross_lempert(p, q)));
    CHECK(cross_lempert(p, CrossPoint::z_axis(DiscPoint(0.25))) ==
          doctest::Approx(0.2938933324510595).epsilon(1e-12));
    CHECK(cross_lempert(p, CrossPoint::origin()) ==
          doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
}

TEST_CASE("cross kobayashi") {
    const auto p = CrossPoint::z_axis(DiscPoint(0.5));
    const auto q = CrossPoint::w_axis(DiscPoint(0.5));
    CHECK(cross_kobayashi(p, q) == doctest::Approx(1.0986122886681098).epsilon(1e-12));
    CHECK(cross_kobayashi(CrossPoint::z_axis(DiscPoint(0.9)),
                          CrossPoint::w_axis(DiscPoint(0.1))) ==
          doctest::Approx(1.5725548373142955).epsilon(1e-12));
    CHECK(cross_kobayashi(p, p) == doctest::Approx(0.0));
}

TEST_CASE("cross gamma and kappa") {
    CHECK(cross_gamma(CrossPoint::origin(), cplx(1.0), cplx(1.0)) == 2.0);
    CHECK(cross_gamma(CrossPoint::origin(), cplx(1.0), cplx(0.0)) == 1.0);
    CHECK(cross_gamma(CrossPoint::z_axis(DiscPoint(0.5)), cplx(1.0), cplx(0.0)) ==
          doctest::Approx(1.3333333333333333).epsilon(1e-12));
    CHECK_THROWS_AS(cross_gamma(CrossPoint::z_axis(DiscPoint(0.5)), cplx(1.0), cplx(0.1)),
                    std::invalid_argument);

    CHECK(cross_kappa(CrossPoint::origin(), cplx(1.0), cplx(0.0)) == 1.0);
    CHECK(std::isinf(cross_kappa(CrossPoint::origin(), cplx(1.0), cplx(1.0))));
    CHECK(cross_kappa(CrossPoint::z_axis(DiscPoint(0.5)), cplx(2.0), cplx(0.0)) ==
          doctest::Approx(2.6666666666666665).epsilon(1e-12));
}

TEST_CASE("c_V = k_V and the lempert gap") {
    auto rng = opt::derive_stream(61, 0);
    int finite_gap = 0;
    for (int t = 0; t < 1000; ++t) {
        const CrossPoint p = random_point(rng), q = random_point(rng);
        CHECK(cross_caratheodory(p, q) == cross_kobayashi(p, q));
        const double lem = cross_lempert(p, q);
        CHECK(cross_caratheodory(p, q) <= lem);
        if (std::isinf(lem)) ++finite_gap;
    }
    CHECK(finite_gap > 0);  // strict finite-vs-infinite gap occurs
}

TEST_CASE("origin gamma is a norm and kobayashi is additive through 0") {
    auto rng = opt::derive_stream(62, 0);
    for (int t = 0; t < 500; ++t) {
        const cplx x1(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const cplx x2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const cplx y1(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const cplx y2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const auto o = CrossPoint::origin();
        CHECK(cross_gamma(o, x1 + y1, x2 + y2) <=
              cross_gamma(o, x1, x2) + cross_gamma(o, y1, y2) + 1e-12);
        const double s = rng.uniform(0.0, 3.0);
        CHECK(cross_gamma(o, s * x1, s * x2) ==
              doctest::Approx(s * cross_gamma(o, x1, x2)).epsilon(1e-13));

        const DiscPoint a(std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 6.28)));
        const DiscPoint b(std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 6.28)));
        const double through = cross_kobayashi(CrossPoint::z_axis(a), CrossPoint::w_axis(b));
        CHECK(std::abs(through - (std::atanh(a.abs()) + std::atanh(b.abs()))) < 1e-12);
    }
}
