#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "neil/optimize.hpp"
#include "neil/parabola.hpp"

#include <cmath>

using namespace neil;

TEST_CASE("make_params basics") {
    const auto p = make_params(2, 3);
    CHECK(p.gap_set() == std::vector<int>{1});
    CHECK(p.k() == 1);
    CHECK(p.l() == -1);
    CHECK(p.frobenius().value() == 1);

    const auto p15 = make_params(1, 5);
    CHECK(p15.gap_set().empty());
    CHECK_FALSE(p15.frobenius().has_value());

    const auto p34 = make_params(3, 4);
    CHECK(p34.gap_set() == std::vector<int>{1, 2, 5});
    CHECK(p34.frobenius().value() == 5);

    const auto p25 = make_params(2, 5);
    CHECK(p25.k() * 5 + p25.l() * 2 == 1);
    CHECK(p25.k() == 1);
    CHECK(p25.l() == -2);

    CHECK_THROWS_AS(make_params(2, 4), NotCoprimeError);
    CHECK_THROWS_AS(make_params(3, 2), OrderViolationError);
    CHECK_THROWS_AS(make_params(0, 3), OrderViolationError);
}

TEST_CASE("gap set combinatorics") {
    // semigroup symmetry and the Frobenius count on a spread of pairs
    const int pairs[][2] = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7},
                            {4, 5}, {4, 7}, {5, 6}, {5, 7}, {5, 8}, {6, 7}};
    for (auto [m, n] : pairs) {
        const auto p = make_params(m, n);
        const int frob = *p.frobenius();
        CHECK(frob == m * n - m - n);
        CHECK(static_cast<int>(p.gap_set().size()) == (m - 1) * (n - 1) / 2);
        for (int s = 0; s <= frob; ++s)
            CHECK(p.in_gap_set(s) == !p.in_gap_set(frob - s));
        CHECK(p.gap_set().back() == frob);
    }
}

TEST_CASE("parametrize") {
    const auto p23 = make_params(2, 3);
    const auto origin = parametrize(p23, DiscPoint(0.0));
    CHECK(origin.z == cplx(0.0));
    CHECK(origin.w == cplx(0.0));

    const auto pt = parametrize(p23, DiscPoint(0.5));
    CHECK(std::abs(pt.z - cplx(0.125)) < 1e-15);
    CHECK(std::abs(pt.w - cplx(0.25)) < 1e-15);

    const auto diag = parametrize(make_params(1, 1), DiscPoint(cplx(0.3, 0.4)));
    CHECK(diag.z == diag.w);
}

TEST_CASE("variety residual on parametrized points") {
    auto rng = opt::derive_stream(21, 0);
    const auto p = make_params(3, 7);
    for (int t = 0; t < 1000; ++t) {
        const DiscPoint lam(std::polar(0.97 * rng.uniform(), rng.uniform(0.0, 6.28)));
        const auto pt = parametrize(p, lam);
        CHECK(off_variety_residual(p, pt.z, pt.w) < 1e-14);
    }
}

TEST_CASE("invert") {
    const auto p23 = make_params(2, 3);
    CHECK(std::abs(invert(p23, cplx(0.125), cplx(0.25)).value() - cplx(0.5)) < 1e-13);
    CHECK(invert(p23, cplx(0.0), cplx(0.0)).value() == cplx(0.0));

    const auto p25 = make_params(2, 5);
    const auto pt = parametrize(p25, DiscPoint(cplx(0.2, 0.55)));
    CHECK(std::abs(invert(p25, pt.z, pt.w).value() - cplx(0.2, 0.55)) < 1e-12);

    CHECK_THROWS_AS(invert(p23, cplx(0.3), cplx(0.25)), OffVarietyError);
}

TEST_CASE("invert round trip") {
    auto rng = opt::derive_stream(22, 0);
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {2, 7}, {4, 5}, {1, 4}}) {
        const auto p = make_params(m, n);
        for (int t = 0; t < 200; ++t) {
            const DiscPoint lam(std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 6.28)));
            const auto pt = parametrize(p, lam);
            CHECK(std::abs(invert(p, pt.z, pt.w).value() - lam.value()) < 1e-12);
        }
    }
    // tiny points collapse to the origin value
    const auto p = make_params(2, 7);
    CHECK(invert(p, cplx(0.0), cplx(1e-120)).value() == cplx(0.0));
}

TEST_CASE("coefficient mask") {
    const auto p23 = make_params(2, 3);
    CHECK(coefficient_mask(p23, 4, false) ==
          std::vector<bool>{false, true, false, false, false});
    CHECK(coefficient_mask(p23, 2, true) == std::vector<bool>{false, false, false});

    const auto p34 = make_params(3, 4);
    const auto mask34 = coefficient_mask(p34, 5, false);
    CHECK(mask34 == std::vector<bool>{false, true, true, false, false, true});
    const auto shifted34 = coefficient_mask(p34, 5, true);
    CHECK(shifted34 == std::vector<bool>{false, false, true, false, false, false});

    // beyond the Frobenius number nothing is forced
    const auto long_mask = coefficient_mask(p34, 40, false);
    for (int j = 6; j <= 40; ++j) CHECK_FALSE(long_mask[j]);
}

TEST_CASE("tangent_at") {
    const auto p23 = make_params(2, 3);
    const auto t = tangent_at(p23, DiscPoint(0.5), cplx(1.0));
    CHECK(std::abs(t.X1 - cplx(0.75)) < 1e-15);
    CHECK(std::abs(t.X2 - cplx(1.0)) < 1e-15);

    const auto z = tangent_at(p23, DiscPoint(cplx(0.1, 0.7)), cplx(0.0));
    CHECK(z.X1 == cplx(0.0));
    CHECK(z.X2 == cplx(0.0));

    const auto p12 = make_params(1, 2);
    const auto t0 = tangent_at(p12, DiscPoint(0.0), cplx(2.0, 1.0));
    CHECK(t0.X1 == cplx(0.0));
    CHECK(t0.X2 == cplx(2.0, 1.0));
}
