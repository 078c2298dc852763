#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "uwoc/errors.hpp"
#include "uwoc/fixtures.hpp"
#include "uwoc/metrics.hpp"
#include "uwoc/monte_carlo.hpp"

using namespace uwoc;

namespace {

double relerr(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("conditional ber closed values") {
    const ModulationScheme bpsk{"BPSK", 1.0, 0.5, {1.0}, Detection::kHeterodyne};
    const ModulationScheme ook{"OOK", 1.0, 0.5, {0.25}, Detection::kImDd};
    // Gamma(1/2, x)/(2 Gamma(1/2)) = erfc(sqrt(x))/2
    CHECK(conditional_ber(bpsk, 1.0) == doctest::Approx(0.07864960352514257).epsilon(1e-10));
    CHECK(conditional_ber(ook, 4.0) == doctest::Approx(0.07864960352514257).epsilon(1e-10));
    CHECK(conditional_ber(bpsk, 0.0) == doctest::Approx(0.5));
    CHECK(conditional_ber(ook, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("registry entries pass the erfc oracle") {
    const auto registry = default_modulation_registry();
    CHECK(registry.size() >= 5);
    for (const auto& m : registry) {
        CAPTURE(m.name);
        CHECK(erfc_oracle_deviation(m) <= 1e-10);
    }
    CHECK_THROWS_AS(find_modulation(registry, "512-FSK"), DomainError);
}

TEST_CASE("mpsk and mqam generator parameters") {
    const auto qam16 = make_mqam(16);
    CHECK(qam16.delta == doctest::Approx(0.75));
    REQUIRE(qam16.n_terms() == 2);
    CHECK(qam16.q[0] == doctest::Approx(0.1));
    CHECK(qam16.q[1] == doctest::Approx(0.9));
    const auto psk16 = make_mpsk(16);
    CHECK(psk16.delta == doctest::Approx(0.5));
    REQUIRE(psk16.n_terms() == 4);
    CHECK(psk16.q[0] == doctest::Approx(std::pow(std::sin(M_PI / 16.0), 2.0)));
    CHECK_THROWS_AS(make_mqam(24), DomainError);
}

TEST_CASE("registry file extends and overrides") {
    const char* path = "test_registry_tmp.json";
    {
        std::ofstream out(path);
        out << R"([{"name":"2-PAM","delta":1.0,"p":0.5,"q":[1.0],"detection":"heterodyne"},
                   {"name":"OOK","delta":1.0,"p":0.5,"q":[0.5],"detection":"imdd"}])";
    }
    const auto registry = load_modulation_registry(path);
    CHECK(find_modulation(registry, "2-PAM").q[0] == doctest::Approx(1.0));
    CHECK(find_modulation(registry, "OOK").q[0] == doctest::Approx(0.5));  // overridden
    std::remove(path);

    {
        std::ofstream out(path);
        out << R"([{"name":"bad","delta":-1.0,"p":0.5,"q":[1.0]}])";
    }
    CHECK_THROWS_AS(load_modulation_registry(path), DomainError);
    std::remove(path);
}

TEST_CASE("outage probability equals the end-to-end cdf") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 2, 1000.0},
                                                {fixture_egg_b(), 2, 1000.0});
    CHECK(outage_probability(rc, 1.0) == e2e_cdf(rc, 1.0));
    CHECK(outage_probability(rc, 1e-9) < 1e-4);
    CHECK_THROWS_AS(outage_probability(rc, 0.0), DomainError);
}

TEST_CASE("average ber approaches the zero-snr limit") {
    const auto registry = default_modulation_registry();
    const auto& bpsk = find_modulation(registry, "BPSK");
    const auto rc = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 1e-7},
                                                    {fixture_egg_b(), 1, 1e-7}, 1.0);
    CHECK(average_ber_exact(rc, bpsk) == doctest::Approx(0.5).epsilon(2e-3));
}

TEST_CASE("average ber vs conditional monte carlo") {
    const auto registry = default_modulation_registry();
    const auto& bpsk = find_modulation(registry, "BPSK");
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 100.0},
                                                {fixture_egg_b(), 1, 100.0});
    const double closed = average_ber_exact(rc, bpsk);
    const auto rep = mc::simulate_ber(rc, bpsk, 2000000, 77);
    CHECK(relerr(closed, rep.estimate) < 0.04);
    CHECK(closed > 0.0);
    CHECK(closed <= 0.5 * bpsk.delta * bpsk.n_terms());
}

TEST_CASE("average ber decreases along a rising snr grid") {
    const auto registry = default_modulation_registry();
    const auto& ook = find_modulation(registry, "OOK");
    double prev = 1.0;
    for (int i = 0; i < 10; ++i) {
        const double mu = std::pow(10.0, (5.0 + 4.0 * i) / 10.0);
        const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 2, mu},
                                                    {fixture_egg_b(), 2, mu});
        const double pe = average_ber_exact(rc, ook);
        CHECK(pe <= prev + 1e-12);
        prev = pe;
    }
}

TEST_CASE("asymptotic ber stays positive and flags degeneracies") {
    const auto registry = default_modulation_registry();
    const auto& ook = find_modulation(registry, "OOK");
    const auto rc = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 1e5},
                                                    {fixture_egg_b(), 2, 1e5}, 10.0);
    CHECK(average_ber_asymptotic(rc, ook) > 0.0);

    const EggParams deg{0.5, 0.4, 1.0, 0.7, 1.0};  // a2 c2 = 1 with r1=r2
    const auto rcdeg = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 1e5},
                                                       {deg, 1, 1e5}, 3.0);
    CHECK_THROWS_AS(average_ber_asymptotic(rcdeg, ook), DegenerateParameterError);
}

TEST_CASE("bpsk under heterodyne beats ook under imdd at equal mu") {
    const auto registry = default_modulation_registry();
    const auto& bpsk = find_modulation(registry, "BPSK");
    const auto& ook = find_modulation(registry, "OOK");
    for (double mu : {10.0, 1000.0}) {
        const auto het = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                     {fixture_egg_b(), 1, mu});
        const auto imdd = RelayConfig::with_auto_gain({fixture_egg_a(), 2, mu},
                                                      {fixture_egg_b(), 2, mu});
        CHECK(average_ber_exact(het, bpsk) <= average_ber_exact(imdd, ook));
    }
}

TEST_CASE("capacity tau convention and limits") {
    const auto het = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 10.0},
                                                     {fixture_egg_b(), 1, 10.0}, 1.0);
    CHECK(capacity_tau(het) == doctest::Approx(1.0));
    const auto imdd = RelayConfig::with_gain_constant({fixture_egg_a(), 2, 10.0},
                                                      {fixture_egg_b(), 2, 10.0}, 1.0);
    CHECK(capacity_tau(imdd) == doctest::Approx(std::exp(1.0) / (2.0 * M_PI)));
    // Mixed detection: the destination hop decides.
    const auto mixed = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 10.0},
                                                       {fixture_egg_b(), 2, 10.0}, 1.0);
    CHECK(capacity_tau(mixed) == doctest::Approx(std::exp(1.0) / (2.0 * M_PI)));

    const auto tiny = RelayConfig::with_gain_constant({fixture_egg_a(), 1, 1e-6},
                                                      {fixture_egg_b(), 1, 1e-6}, 1.0);
    CHECK(ergodic_capacity(tiny) < 1e-4);
}

TEST_CASE("capacity vs monte carlo and monotonicity") {
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, 100.0},
                                                {fixture_egg_b(), 1, 100.0});
    const double closed = ergodic_capacity(rc);
    const auto rep = mc::simulate_capacity(rc, 2000000, 13);
    CHECK(relerr(closed, rep.estimate) < 0.01);

    double prev = 0.0;
    for (double mu : {10.0, 100.0, 1000.0}) {
        const auto cfg = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                     {fixture_egg_b(), 1, mu});
        const double cap = ergodic_capacity(cfg);
        CHECK(cap >= prev);
        prev = cap;
    }
}

TEST_CASE("16-qam outperforms 16-psk under heterodyne detection") {
    const auto registry = default_modulation_registry();
    const auto& psk = find_modulation(registry, "16-PSK");
    const auto& qam = find_modulation(registry, "16-QAM");
    for (double mu_db : {15.0, 30.0}) {
        const double mu = std::pow(10.0, mu_db / 10.0);
        const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                    {fixture_egg_b(), 1, mu});
        CHECK(average_ber_exact(rc, qam) <= average_ber_exact(rc, psk));
    }
}

TEST_CASE("outage matches monte carlo for every shipped fixture") {
    for (const auto& p : {fixture_egg_a(), fixture_egg_b(), fixture_pure_exp(),
                          fixture_pure_gg()}) {
        const auto rc = RelayConfig::with_auto_gain({p, 2, 1000.0}, {p, 2, 1000.0});
        const double closed = outage_probability(rc, 1.0);
        const auto rep = mc::simulate_outage(rc, 1.0, 1000000, 55);
        CHECK(std::abs(closed - rep.estimate) <= 4.0 * rep.std_error);
    }
}
