#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "uwoc/errors.hpp"
#include "uwoc/fixtures.hpp"
#include "uwoc/monte_carlo.hpp"
#include "uwoc/relay_chain.hpp"

using namespace uwoc;

namespace {

double relerr(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Direct quadrature of the squared-gain expectation E[1/(mu I^r + 1)] over
// the mixture density: the oracle the Fox-H route must hit.
double gain_constant_oracle(const HopConfig& h) {
    const double inv = oracles::integral_zero_to_inf([&](double irr) {
        if (!(irr > 0.0)) return 0.0;
        return irradiance_pdf(h.egg, irr) / (h.mu * std::pow(irr, double(h.r)) + 1.0);
    });
    return 1.0 / inv;
}

}  // namespace

TEST_CASE("snr combiner") {
    CHECK(combine_snr(1.0, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(combine_snr(3.0, 6.0, 2.0) == doctest::Approx(2.25));
    CHECK(combine_snr(7.0, 1e12, 5.0) == doctest::Approx(7.0).epsilon(1e-9));
    CHECK_THROWS_AS(combine_snr(-1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("fixed gain constant against the quadrature oracle") {
    // Pure-Exponential hop at r=1, mu=1: E[1/(I+1)] = e E_1(1) = 0.596347...
    const HopConfig pe{fixture_pure_exp(), 1, 1.0};
    CHECK(relerr(fixed_gain_constant(pe), 1.0 / 0.59634736232319407) < 1e-9);
    CHECK(relerr(fixed_gain_constant(pe), gain_constant_oracle(pe)) < 1e-3 * 0.1);

    const HopConfig ha{fixture_egg_a(), 2, 100.0};
    CHECK(relerr(fixed_gain_constant(ha), gain_constant_oracle(ha)) < 1e-3);

    // Rising mu starves the expectation, so C grows without bound.
    double prev = 0.0;
    for (double mu : {10.0, 100.0, 1000.0}) {
        const double c = fixed_gain_constant({fixture_pure_exp(), 1, mu});
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("end-to-end cdf limits") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 2, 1000.0},
                                                {fixture_egg_b(), 2, 1000.0});
    CHECK(std::abs(e2e_cdf(rc, 1e-7)) < 1e-4);
    CHECK(e2e_cdf(rc, 1e12) == doctest::Approx(1.0).epsilon(1e-6));
    double prev = -1.0;
    for (double g : {0.1, 1.0, 10.0, 100.0}) {
        const double f = e2e_cdf(rc, g);
        CHECK(f >= prev - 1e-9);
        prev = f;
    }
    CHECK_THROWS_AS(e2e_cdf(rc, 0.0), DomainError);
}

TEST_CASE("end-to-end cdf vs monte carlo") {
    const auto rc = RelayConfig::with_auto_gain({fixture_pure_exp(), 1, 100.0},
                                                {fixture_pure_exp(), 1, 100.0});
    const double closed = e2e_cdf(rc, 5.0);
    const auto rep = mc::simulate_outage(rc, 5.0, 2000000, 31);
    CHECK(std::abs(closed - rep.estimate) < 4.0 * rep.std_error);
}

TEST_CASE("r1=1 reduction tracks the generic double contour") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 300.0},
                                                {fixture_egg_b(), 2, 300.0});
    for (double g : {0.5, 5.0, 50.0}) {
        const double fast = e2e_cdf(rc, g, {}, CdfRoute::kFastR1);
        const double biv = e2e_cdf(rc, g, {}, CdfRoute::kBivariate);
        CHECK(relerr(fast, biv) < 1e-6);
    }
    // The reduction is specific to r1 = 1.
    const auto rc2 = RelayConfig::with_auto_gain({fixture_egg_a(), 2, 300.0},
                                                 {fixture_egg_b(), 2, 300.0});
    CHECK_THROWS_AS(e2e_cdf(rc2, 1.0, {}, CdfRoute::kFastR1), DomainError);
}

TEST_CASE("e2e SNR never exceeds hop-1 SNR (stochastic dominance)") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 2, 100.0},
                                                {fixture_egg_b(), 2, 100.0});
    for (int i = 0; i < 10; ++i) {
        const double g = 100.0 * std::pow(10.0, -2.0 + 3.0 * i / 9.0);
        CHECK(e2e_cdf(rc, g) >= snr_cdf_elementary(rc.hop1, g) - 1e-6);
    }
}

TEST_CASE("asymptotic cdf falls when both hops strengthen") {
    const double C = 10.0;
    const auto lo = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 1e5},
                                                    {fixture_egg_b(), 2, 1e5}, C);
    const auto hi = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 2e5},
                                                    {fixture_egg_b(), 2, 2e5}, C);
    CHECK(e2e_cdf_asymptotic(hi, 1.0) < e2e_cdf_asymptotic(lo, 1.0));
}

TEST_CASE("asymptotic cdf flags integer-ratio degeneracies") {
    // r1 a2 c2 / r2 = 1 puts Gamma(1 - r1 a2 c2 / r2) on a pole.
    const EggParams hop2{0.5, 0.4, 1.0, 0.7, 1.0};
    const auto rc = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 1e4},
                                                    {hop2, 1, 1e4}, 3.0);
    CHECK_THROWS_AS(e2e_cdf_asymptotic(rc, 1.0), DegenerateParameterError);
    // Boundary weights silence the degenerate group entirely.
    const auto rc2 = RelayConfig::with_gain_constant({fixture_pure_exp(), 1, 1e4},
                                                     {fixture_pure_exp(), 1, 1e4}, 3.0);
    CHECK_NOTHROW(e2e_cdf_asymptotic(rc2, 1.0));
}

TEST_CASE("pdf matches the cdf derivative and the histogram") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 100.0},
                                                {fixture_egg_b(), 1, 100.0});
    const double g = 1.0;
    const double h = 1e-3;
    const double fd = (e2e_cdf(rc, g + h) - e2e_cdf(rc, g - h)) / (2.0 * h);
    CHECK(relerr(e2e_pdf(rc, g), fd) < 1e-4);

    // Histogram comparison through CDF differences on log bins.
    RngStream rng(17);
    const int n = 1000000;
    const double lo = 0.05, hi = 500.0;
    const int bins = 12;
    std::vector<int> counts(bins, 0);
    int inside = 0;
    for (int i = 0; i < n; ++i) {
        const double v = mc::sample_e2e_snr(rc, rng);
        if (v < lo || v >= hi) continue;
        const int b = int(std::log(v / lo) / std::log(hi / lo) * bins);
        counts[std::min(b, bins - 1)]++;
        inside++;
    }
    CHECK(inside > n / 2);
    for (int b = 0; b < bins; ++b) {
        const double a = lo * std::pow(hi / lo, double(b) / bins);
        const double bb = lo * std::pow(hi / lo, double(b + 1) / bins);
        const double p = e2e_cdf(rc, bb) - e2e_cdf(rc, a);
        const double se = std::sqrt(p * (1.0 - p) / n);
        CHECK(std::abs(double(counts[b]) / n - p) < 4.0 * se + 1e-9);
    }
}

TEST_CASE("moments against monte carlo and Jensen") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 100.0},
                                                {fixture_egg_b(), 1, 100.0});
    const double m1 = e2e_moment(rc, 1);
    const double m2 = e2e_moment(rc, 2);
    CHECK(m2 >= m1 * m1);  // variance non-negativity
    const auto r1 = mc::simulate_moment(rc, 1, 2000000, 3);
    const auto r2 = mc::simulate_moment(rc, 2, 2000000, 4);
    CHECK(relerr(m1, r1.estimate) < 0.02);
    CHECK(relerr(m2, r2.estimate) < 0.04);

    CHECK(amount_of_fading(rc, 1) == 0.0);
    CHECK(amount_of_fading(rc, 2) >= 0.0);
    CHECK_THROWS_AS(e2e_moment(rc, 0), DomainError);
}

TEST_CASE("diversity order arithmetic") {
    // r1=r2=2, a1 c1 = 2.16, a2 c2 = 1.08 -> min(0.5, 1.08, 1.0, 1.08).
    const auto rc = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 1.0},
                                                    {fixture_egg_b(), 2, 1.0}, 1.0);
    CHECK(diversity_order(rc) == doctest::Approx(0.5));
    const EggParams weak{0.5, 1.0, 0.3, 1.0, 1.0};
    const EggParams strong{0.5, 1.0, 5.0, 1.0, 1.0};
    const auto rc2 = RelayConfig::with_gain_constant({weak, 1, 1.0}, {strong, 1, 1.0}, 1.0);
    CHECK(diversity_order(rc2) == doctest::Approx(0.3));
}

TEST_CASE("cdf term builders skip vanished lobes") {
    const auto full = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 10.0},
                                                      {fixture_egg_b(), 2, 10.0}, 1.0);
    CHECK(e2e_cdf_terms(full, 1.0).size() == 4);
    const auto exp_only = RelayConfig::with_gain_constant({fixture_pure_exp(), 1, 10.0},
                                                          {fixture_pure_exp(), 1, 10.0}, 1.0);
    CHECK(e2e_cdf_terms(exp_only, 1.0).size() == 1);
    const auto mixed = RelayConfig::with_gain_constant({fixture_pure_gg(), 1, 10.0},
                                                       {fixture_egg_b(), 1, 10.0}, 1.0);
    CHECK(e2e_cdf_terms(mixed, 1.0).size() == 2);
}

TEST_CASE("integrated pdf reproduces the cdf on a 50-point log grid") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 100.0},
                                                {fixture_egg_b(), 1, 100.0});
    const int points = 50;
    const double lo = 100.0 * 3.16e-3;  // cdf ~ 2e-3 here
    const double hi = 100.0 * 3.16;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        grid[std::size_t(i)] = lo * std::pow(hi / lo, double(i) / (points - 1));
    }
    double acc = e2e_cdf(rc, grid[0]);
    double worst = 0.0;
    for (int i = 1; i < points; ++i) {
        const double a = grid[std::size_t(i - 1)];
        const double b = grid[std::size_t(i)];
        // Simpson in log-gamma over one cell; the pdf is smooth there.
        const double m = std::sqrt(a * b);
        const double du = std::log(b / a);
        acc += du / 6.0 *
               (e2e_pdf(rc, a) * a + 4.0 * e2e_pdf(rc, m) * m + e2e_pdf(rc, b) * b);
        worst = std::max(worst, std::abs(acc - e2e_cdf(rc, b)));
    }
    CHECK(worst < 1e-4);
}
