#include <doctest.h>

#include <cmath>

#include "cosp/cos_classic.hpp"
#include "cosp/cumulants.hpp"
#include "cosp/errors.hpp"
#include "cosp/error_analysis.hpp"
#include "oracles.hpp"

using namespace cosp;

namespace {

const HestonParams kFig1{1.0, 0.1, 1.0, -0.9, 0.1};
const HestonParams kTab2{0.1, 0.01, 2.0, 0.5, 0.0225};
// the Black sigma = 55%, T = 1, L = 6 interval of the payoff-error study
const TruncationRange kBlackRange{-3.45125, 3.025, 6.0, false};

}  // namespace

TEST_CASE("single-term expansion is the constant half-V0") {
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, 1800.0, 2016.0,
                                              kBlackRange, 1);
    for (double y : {-3.0, -0.4, 0.0, 1.7, 5.5}) {
        CHECK(payoff_expansion_eval(e, y) == doctest::Approx(0.5 * e.coeffs[0]).epsilon(1e-15));
    }
}

TEST_CASE("expansion is periodic with period 2(b-a) and reflects at the edges") {
    // dyadic interval: the shifted arguments are exactly representable, so
    // the folded evaluation is bitwise identical
    TruncationRange dyadic{-2.0, 2.0, 1.0, false};
    PayoffExpansion ed = make_payoff_expansion(Centering::ForwardRelative, 0.9, 1.0, dyadic, 64);
    for (double y : {-3.0, -0.25, 1.0, 2.5}) {
        CHECK(payoff_expansion_eval(ed, y + 8.0) == payoff_expansion_eval(ed, y));
        CHECK(payoff_expansion_eval(ed, y - 8.0) == payoff_expansion_eval(ed, y));
    }
    for (double s : {0.125, 0.5, 1.0}) {
        CHECK(payoff_expansion_eval(ed, 2.0 + s) == payoff_expansion_eval(ed, 2.0 - s));
        CHECK(payoff_expansion_eval(ed, -2.0 - s) == payoff_expansion_eval(ed, -2.0 + s));
    }
    // general interval: the 2w shift itself rounds, so match to an ulp-scale band
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, 1800.0, 2016.0,
                                              kBlackRange, 64);
    const double w = e.b - e.a;
    for (double y : {-3.0, -0.25, 1.0, 2.5}) {
        double ref = payoff_expansion_eval(e, y);
        CHECK(std::abs(payoff_expansion_eval(e, y + 2.0 * w) - ref) <=
              1e-11 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("expansion converges to the payoff inside the interval") {
    const double K = 1800.0, F = 2016.0;
    PayoffExpansion e4096 = make_payoff_expansion(Centering::ForwardRelative, K, F,
                                                  kBlackRange, 4096);
    const double z = std::log(K / F);
    double sup = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double y = kBlackRange.a + (kBlackRange.b - kBlackRange.a) * i / 1000.0;
        if (std::abs(y - z) < 0.05) continue;  // kink neighborhood converges slowest
        sup = std::max(sup, std::abs(payoff_expansion_eval(e4096, y) - payoff_value(e4096, y)));
    }
    CHECK(sup <= 1e-3 * K);

    // L2 error keeps halving as M doubles
    double prev = 1e300;
    for (int m : {256, 512, 1024}) {
        PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, K, F, kBlackRange, m);
        double l2 = 0.0;
        const int grid = 4000;
        for (int i = 0; i < grid; ++i) {
            double y = kBlackRange.a + (kBlackRange.b - kBlackRange.a) * (i + 0.5) / grid;
            double d = payoff_expansion_eval(e, y) - payoff_value(e, y);
            l2 += d * d;
        }
        l2 = std::sqrt(l2 / grid);
        CHECK(l2 <= 0.55 * prev);
        prev = l2;
    }
}

TEST_CASE("Parseval sum approaches the payoff norm as M doubles") {
    const double K = 1800.0, F = 2016.0;
    const double z = std::log(K / F);
    double exact = oracles::integrate(
        [&](double y) {
            double v = std::max(K - F * std::exp(y), 0.0);
            return v * v;
        },
        kBlackRange.a, z, 1e-10);
    double prev_gap = 1e300;
    for (int m : {512, 1024, 2048, 4096}) {
        PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, K, F, kBlackRange, m);
        double sum = 0.5 * e.coeffs[0] * e.coeffs[0];
        for (int k = 1; k < m; ++k) sum += e.coeffs[k] * e.coeffs[k];
        sum *= 0.5 * (kBlackRange.b - kBlackRange.a);
        double gap = std::abs(sum - exact) / exact;
        CHECK(gap <= 0.5 * prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("empty tail sums to zero") {
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, 1.2, 1.0,
                                              kBlackRange, 512);
    SeriesTail t = series_tail(ModelParams{BlackParams{0.55}}, 1.0, kBlackRange, 512, 512,
                               e.coeffs);
    CHECK(t.value == 0.0);
}

TEST_CASE("gaussian-type decay kills the black tail beyond N = 512") {
    const double F = 2016.0;
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, F, F, kBlackRange, 2048);
    SeriesTail t = series_tail(ModelParams{BlackParams{0.55}}, 1.0, kBlackRange, 512, 2048,
                               e.coeffs);
    CHECK(std::abs(t.value) <= 1e-10 * F);
    CHECK(t.remainder_bound <= 1e-10 * F);
}

TEST_CASE("series tail is negligible next to the classic short-maturity error") {
    TruncationRange r = truncation_range(heston_cumulants(kFig1, 2.0 / 365), 12.0, false);
    const double z = std::log(1.3);
    TruncationRange w{r.a + z, r.b + z, r.level, r.used_c4};
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, 1.3, 1.0, w, 16384);
    SeriesTail t = series_tail(ModelParams{kFig1}, 2.0 / 365, w, 256, 16384, e.coeffs);
    // the classic error at this strike is ~5e-3; the tail explains none of it
    CHECK(std::abs(t.value) <= 1e-6);
    CHECK(series_tail(ModelParams{kFig1}, 2.0 / 365, w, 256, 16384, e.coeffs).remainder_bound <=
          1e-6);
}

TEST_CASE("decomposition: improved method deep in range leaves nothing to explain") {
    TruncationRange r = truncation_range(heston_cumulants(kFig1, 2.0 / 365), 12.0, false);
    OptionSpec spec{1.0, 1.02, 2.0 / 365, 1.0, OptionKind::Put};
    ErrorDecomposition d =
        total_error_decomposition(kFig1, spec, Method::Improved, 256, r, 1e-11);
    CHECK(std::abs(d.payoff_term) <= 1e-10);
    CHECK(std::abs(d.tail_term) <= 1e-10);
    CHECK(std::abs(d.observed_error) <= 1e-10);
}

TEST_CASE("decomposition explains the classic short-maturity failure") {
    TruncationRange r = truncation_range(heston_cumulants(kFig1, 2.0 / 365), 12.0, false);
    OptionSpec spec{1.0, 1.3, 2.0 / 365, 1.0, OptionKind::Put};
    ErrorDecomposition d = total_error_decomposition(kFig1, spec, Method::Classic, 256, r, 1e-11);
    // the truncated-payoff and tail terms measure what the series is missing:
    // price = true - payoff_term - tail_term, so they offset the observed error
    CHECK(std::abs(d.observed_error) >= 1e-3);
    CHECK(std::abs(d.payoff_term + d.tail_term + d.observed_error) <=
          0.1 * std::abs(d.observed_error));
}

TEST_CASE("classic payoff term dwarfs the improved one far out of range") {
    CumulantSet c = heston_cumulants(kTab2, 1.0);
    TruncationRange r = truncation_range(c, 12.0, true);
    OptionSpec spec{1.0, 4.0, 1.0, 1.0, OptionKind::Put};
    ErrorDecomposition cl = total_error_decomposition(kTab2, spec, Method::Classic, 4096, r, 1e-10);
    ErrorDecomposition im = total_error_decomposition(kTab2, spec, Method::Improved, 4096, r, 1e-10);
    CHECK(std::abs(cl.payoff_term) >= 10.0 * std::abs(im.payoff_term));
}

TEST_CASE("high-strike payoff profiles: classic amplitude explodes, improved hugs zero") {
    const double F = 2016.0;
    std::vector<double> grid;
    for (int i = 0; i <= 1200; ++i)
        grid.push_back(kBlackRange.a + (kBlackRange.b - kBlackRange.a) * i / 1200.0);
    for (double dz : {0.25, 0.5, 1.0}) {
        const double K = F * std::exp(kBlackRange.b + dz);
        auto rows = payoff_error_profile(K, F, kBlackRange, 4096, grid);
        double sup_cl = 0.0, sup_im = 0.0, mean_im = 0.0;
        for (const auto& row : rows) {
            sup_cl = std::max(sup_cl, std::abs(row.classic_error));
            sup_im = std::max(sup_im, std::abs(row.improved_error));
            mean_im += row.improved_error;
        }
        mean_im /= static_cast<double>(rows.size());
        CAPTURE(dz);
        CHECK(sup_cl >= 100.0 * sup_im);
        CHECK(std::abs(mean_im) <= 0.10 * sup_im);
    }
}

TEST_CASE("profile rows carry the true payoff in forward coordinates") {
    std::vector<double> grid{-1.0, 0.0, 1.0};
    auto rows = payoff_error_profile(2200.0, 2016.0, kBlackRange, 256, grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].payoff == doctest::Approx(2200.0 - 2016.0).epsilon(1e-15));
    CHECK(rows[2].payoff == 0.0);
}

TEST_CASE("error-analysis inputs are validated") {
    CHECK_THROWS_AS(make_payoff_expansion(Centering::ForwardRelative, -1.0, 1.0, kBlackRange, 16),
                    ValidationError);
    CHECK_THROWS_AS(make_payoff_expansion(Centering::ForwardRelative, 1.0, 1.0, kBlackRange, 0),
                    ValidationError);
    TruncationRange off{1.0, 2.0, 1.0, false};
    CHECK_THROWS_AS(make_payoff_expansion(Centering::StrikeRelative, 1.0, 1.0, off, 16),
                    ValidationError);
    PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, 1.0, 1.0, kBlackRange, 8);
    CHECK_THROWS_AS(series_tail(ModelParams{BlackParams{0.2}}, 1.0, kBlackRange, 0, 16, e.coeffs),
                    ValidationError);
    OptionSpec spec{1.0, 1.0, 1.0, 1.0, OptionKind::Put};
    TruncationRange r = truncation_range(heston_cumulants(kTab2, 1.0), 12.0, false);
    CHECK_THROWS_AS(total_error_decomposition(kTab2, spec, Method::Reference, 256, r),
                    ValidationError);
}
