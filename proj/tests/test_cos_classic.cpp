#include <doctest.h>

#include <cmath>

#include "cosp/cos_classic.hpp"
#include "cosp/cumulants.hpp"
#include "cosp/errors.hpp"
#include "cosp/reference.hpp"
#include "oracles.hpp"

using namespace cosp;

namespace {

const HestonParams kFig1{1.0, 0.1, 1.0, -0.9, 0.1};
const HestonParams kTab2{0.1, 0.01, 2.0, 0.5, 0.0225};
constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("chi closed form") {
    CHECK(chi(0, -1.0, 0.5, -2.0, 2.0) ==
          doctest::Approx(std::exp(0.5) - std::exp(-1.0)).epsilon(1e-15));
    CHECK(chi(4, -1.0, -1.0, -2.0, 2.0) == 0.0);
    // quadrature oracle
    for (int k : {1, 3, 7}) {
        const double a = -2.0, b = 2.0, c = -1.0, d = 0.0;
        const double eta = k * kPi / (b - a);
        double num = oracles::integrate(
            [&](double y) { return std::exp(y) * std::cos(eta * (y - a)); }, c, d);
        CHECK(std::abs(chi(k, c, d, a, b) - num) <= 1e-12);
    }
}

TEST_CASE("psi closed form") {
    CHECK(psi(0, -2.0, 2.0, -2.0, 2.0) == doctest::Approx(4.0));
    for (int k : {1, 2, 9}) CHECK(std::abs(psi(k, -2.0, 2.0, -2.0, 2.0)) <= 1e-12);
    for (int k : {1, 3, 7}) {
        const double a = -2.0, b = 2.0, c = -1.0, d = 0.0;
        const double eta = k * kPi / (b - a);
        double num = oracles::integrate([&](double y) { return std::cos(eta * (y - a)); }, c, d);
        CHECK(std::abs(psi(k, c, d, a, b) - num) <= 1e-12);
    }
}

TEST_CASE("classic put coefficients") {
    CHECK(vk_put_classic(0, 1.0, -1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    // identity with the chi/psi composition
    for (int k = 1; k <= 10; ++k) {
        const double a = -2.0, b = 2.0, K = 1.7;
        double composed = (2.0 * K / (b - a)) * (-chi(k, a, 0.0, a, b) + psi(k, a, 0.0, a, b));
        CHECK(std::abs(vk_put_classic(k, K, a, b) - composed) <= 1e-14 * std::abs(composed) + 1e-16);
    }
    // quadrature of the strike-relative payoff transform
    for (int k = 1; k <= 10; ++k) {
        const double a = -2.0, b = 2.0, K = 1.0;
        const double eta = k * kPi / (b - a);
        double num = (2.0 / (b - a)) * oracles::integrate(
            [&](double y) { return K * (1.0 - std::exp(y)) * std::cos(eta * (y - a)); }, a, 0.0);
        CHECK(std::abs(vk_put_classic(k, K, a, b) - num) <= 1e-12);
    }
}

TEST_CASE("classic put matches the Black closed form at the money") {
    BlackParams black{0.55};
    TruncationRange r = truncation_range(black_cumulants(black, 1.0), 6.0, false);
    OptionSpec spec{2016.0, 2016.0, 1.0, 1.0, OptionKind::Put};
    PriceResult p = price_put_classic(black, spec, 512, r);
    double exact = black_price(2016.0, 2016.0, 1.0, 0.55, 1.0, OptionKind::Put);
    // the L = 6 interval leaves a 1.11e-8 truncation-tail residue at this
    // forward scale, measured against the closed form
    CHECK(std::abs(p.price - exact) <= 2e-8);
    CHECK(p.fallback == Fallback::None);
}

TEST_CASE("strike past the upper bound falls back to discounted intrinsic") {
    TruncationRange r = truncation_range(heston_cumulants(kFig1, 2.0 / 365), 12.0, false);
    OptionSpec spec{1.0, 1.33, 2.0 / 365, 0.97, OptionKind::Put};
    PriceResult p = price_put_classic(kFig1, spec, 256, r);
    CHECK(p.fallback == Fallback::Intrinsic);
    CHECK(p.price == doctest::Approx(0.97 * 0.33).epsilon(1e-15));

    OptionSpec low{1.0, 0.7, 2.0 / 365, 0.97, OptionKind::Put};
    PriceResult pl = price_put_classic(kFig1, low, 256, r);
    CHECK(pl.fallback == Fallback::Zero);
    CHECK(pl.price == 0.0);
}

TEST_CASE("put-call parity is exact by construction") {
    CumulantSet c = heston_cumulants(kTab2, 1.0);
    TruncationRange r = truncation_range(c, 12.0, true);
    for (double K : {0.5, 1.0, 2.0}) {
        OptionSpec spec{1.0, K, 1.0, 0.95, OptionKind::Put};
        PriceResult put = price_put_classic(kTab2, spec, 1024, r);
        PriceResult call = call_from_put(put, spec);
        CHECK(std::abs(put.price - call.price - 0.95 * (K - 1.0)) <= 1e-14);
    }
    OptionSpec atm{1.0, 1.0, 1.0, 1.0, OptionKind::Put};
    PriceResult zero{0.0, Method::Classic, 2, r, Fallback::None};
    CHECK(call_from_put(zero, atm).price == 0.0);
}

TEST_CASE("classic put price is nondecreasing in strike inside the range") {
    CumulantSet c = heston_cumulants(kTab2, 1.0);
    TruncationRange r = truncation_range(c, 12.0, true);
    double prev = -1.0;
    for (int i = 0; i < 50; ++i) {
        double x = 0.5 * r.a + (0.5 * r.b - 0.5 * r.a) * i / 49.0;
        OptionSpec spec{1.0, std::exp(x), 1.0, 1.0, OptionKind::Put};
        double p = price_put_classic(kTab2, spec, 2048, r).price;
        CHECK(p >= prev - 1e-12);
        prev = p;
    }
}

TEST_CASE("doubling N converges with decreasing increments") {
    CumulantSet c = heston_cumulants(kTab2, 1.0);
    TruncationRange r = truncation_range(c, 12.0, true);
    OptionSpec spec{1.0, 1.0, 1.0, 1.0, OptionKind::Put};
    double p256 = price_put_classic(kTab2, spec, 256, r).price;
    double p512 = price_put_classic(kTab2, spec, 512, r).price;
    double p1024 = price_put_classic(kTab2, spec, 1024, r).price;
    double p2048 = price_put_classic(kTab2, spec, 2048, r).price;
    double d1 = std::abs(p512 - p256), d2 = std::abs(p1024 - p512), d3 = std::abs(p2048 - p1024);
    CHECK(d1 > 0.0);
    CHECK(d2 < d1);
    CHECK(d3 < d2);
}

TEST_CASE("classic coefficients stay uniformly bounded in k") {
    const double a = -2.0, b = 2.0, K = 1.3;
    const double bound = 4.0 * K / (b - a) * ((b - a) + std::exp(b));
    for (int k = 0; k < 4096; ++k) CHECK(std::abs(vk_put_classic(k, K, a, b)) <= bound);
}

TEST_CASE("classic strip equals per-strike pricing") {
    TruncationRange r = truncation_range(heston_cumulants(kFig1, 2.0 / 365), 12.0, false);
    std::vector<double> strikes{0.8, 1.0, 1.1, 1.25, 1.33};
    auto strip = price_strip_classic(kFig1, 1.0, 1.0, 2.0 / 365, 256, r, strikes);
    REQUIRE(strip.size() == strikes.size());
    for (size_t i = 0; i < strikes.size(); ++i) {
        OptionSpec spec{1.0, strikes[i], 2.0 / 365, 1.0, OptionKind::Put};
        PriceResult one = price_put_classic(kFig1, spec, 256, r);
        CHECK(std::abs(strip[i].price - one.price) <= 2e-15 * std::max(1.0, one.price));
        CHECK(strip[i].fallback == one.fallback);
    }
}

TEST_CASE("degenerate range with the kink outside prices to zero") {
    TruncationRange r{0.5, 2.0, 1.0, false};
    OptionSpec spec{1.0, 2.0, 1.0, 1.0, OptionKind::Put};  // x = ln 2 inside [0.5, 2]
    PriceResult p = price_put_classic(kTab2, spec, 128, r);
    CHECK(p.fallback == Fallback::None);
    CHECK(std::abs(p.price) <= 1e-12);
}

TEST_CASE("classic pricer validates its inputs") {
    TruncationRange r = truncation_range(heston_cumulants(kTab2, 1.0), 12.0, false);
    OptionSpec bad_strike{1.0, -1.0, 1.0, 1.0, OptionKind::Put};
    CHECK_THROWS_AS(price_put_classic(kTab2, bad_strike, 256, r), ValidationError);
    OptionSpec ok{1.0, 1.0, 1.0, 1.0, OptionKind::Put};
    CHECK_THROWS_AS(price_put_classic(kTab2, ok, 1, r), ValidationError);
    TruncationRange degenerate{1.0, 1.0, 12.0, false};
    CHECK_THROWS_AS(price_put_classic(kTab2, ok, 256, degenerate), ValidationError);
    OptionSpec bad_disc{1.0, 1.0, 1.0, 1.5, OptionKind::Put};
    CHECK_THROWS_AS(price_put_classic(kTab2, bad_disc, 256, r), ValidationError);
}
