#include "uwoc/monte_carlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "uwoc/errors.hpp"

namespace uwoc::mc {

namespace {

// Fixed stream count: the work split (and hence every estimate) is
// independent of how many OpenMP threads execute it.
constexpr std::uint64_t kStreams = 1024;

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

template <typename PerDraw>
SimulationReport run_mean_estimator(std::uint64_t n, std::uint64_t seed, PerDraw per_draw) {
    if (n == 0) throw DomainError("simulation requires n > 0");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ChunkSums> chunks(kStreams);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < std::int64_t(kStreams); ++c) {
        const auto uc = std::uint64_t(c);
        std::uint64_t count = n / kStreams + (uc < n % kStreams ? 1 : 0);
        RngStream rng(seed, uc);
        ChunkSums acc;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double v = per_draw(rng);
            acc.sum += v;
            acc.sum_sq += v * v;
        }
        chunks[uc] = acc;
    }

    ChunkSums total;
    for (const auto& c : chunks) {
        total.sum += c.sum;
        total.sum_sq += c.sum_sq;
    }
    const double mean = total.sum / double(n);
    const double var = std::max(0.0, total.sum_sq / double(n) - mean * mean);

    SimulationReport rep;
    rep.estimate = mean;
    rep.std_error = std::sqrt(var / double(n));
    rep.n_samples = n;
    rep.seed = seed;
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

void require_bulk(std::uint64_t n) {
    if (n < 10000) throw DomainError("simulation estimators require n >= 1e4");
}

SnrSampler relay_sampler(const RelayConfig& rc) {
    rc.validate();
    return [rc](RngStream& rng) { return sample_e2e_snr(rc, rng); };
}

}  // namespace

double sample_e2e_snr(const RelayConfig& rc, RngStream& rng) {
    const double g1 = sample_snr(rc.hop1, rng);
    const double g2 = sample_snr(rc.hop2, rng);
    return g1 * g2 / (g2 + rc.C);
}

SimulationReport simulate_outage_with_sampler(const SnrSampler& sampler, double gamma_th,
                                              std::uint64_t n, std::uint64_t seed) {
    if (!(gamma_th >= 0.0)) throw DomainError("simulate_outage: requires gamma_th >= 0");
    auto rep = run_mean_estimator(n, seed, [&](RngStream& rng) {
        return sampler(rng) <= gamma_th ? 1.0 : 0.0;
    });
    // Binomial standard error.
    rep.std_error = std::sqrt(rep.estimate * (1.0 - rep.estimate) / double(n));
    return rep;
}

SimulationReport simulate_ber_with_sampler(const SnrSampler& sampler,
                                           const ModulationScheme& m, std::uint64_t n,
                                           std::uint64_t seed) {
    m.validate();
    // Conditional (semi-analytic) averaging: the analytic conditional error
    // probability evaluated on SNR draws, unbiased for the BER definition
    // with far lower variance than bit-level simulation.
    return run_mean_estimator(
        n, seed, [&](RngStream& rng) { return conditional_ber(m, sampler(rng)); });
}

SimulationReport simulate_capacity_with_sampler(const SnrSampler& sampler, double tau,
                                                std::uint64_t n, std::uint64_t seed) {
    if (!(tau > 0.0)) throw DomainError("simulate_capacity: requires tau > 0");
    return run_mean_estimator(
        n, seed, [&](RngStream& rng) { return std::log1p(tau * sampler(rng)); });
}

SimulationReport simulate_moment_with_sampler(const SnrSampler& sampler, int order,
                                              std::uint64_t n, std::uint64_t seed) {
    if (order < 1) throw DomainError("simulate_moment: order must be >= 1");
    return run_mean_estimator(n, seed, [&](RngStream& rng) {
        return std::pow(sampler(rng), double(order));
    });
}

SimulationReport simulate_outage(const RelayConfig& rc, double gamma_th, std::uint64_t n,
                                 std::uint64_t seed) {
    require_bulk(n);
    return simulate_outage_with_sampler(relay_sampler(rc), gamma_th, n, seed);
}

SimulationReport simulate_ber(const RelayConfig& rc, const ModulationScheme& m,
                              std::uint64_t n, std::uint64_t seed) {
    require_bulk(n);
    return simulate_ber_with_sampler(relay_sampler(rc), m, n, seed);
}

SimulationReport simulate_capacity(const RelayConfig& rc, std::uint64_t n,
                                   std::uint64_t seed, double tau) {
    require_bulk(n);
    if (tau <= 0.0) tau = capacity_tau(rc);
    return simulate_capacity_with_sampler(relay_sampler(rc), tau, n, seed);
}

SimulationReport simulate_moment(const RelayConfig& rc, int order, std::uint64_t n,
                                 std::uint64_t seed) {
    require_bulk(n);
    return simulate_moment_with_sampler(relay_sampler(rc), order, n, seed);
}

std::vector<double> sorted_snr_samples(const HopConfig& hop, std::uint64_t n,
                                       std::uint64_t seed) {
    hop.validate();
    std::vector<double> samples(n);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < std::int64_t(kStreams); ++c) {
        const auto uc = std::uint64_t(c);
        const std::uint64_t count = n / kStreams + (uc < n % kStreams ? 1 : 0);
        // Stream uc owns a contiguous slice; offsets are deterministic.
        std::uint64_t offset = (n / kStreams) * uc + std::min<std::uint64_t>(uc, n % kStreams);
        RngStream rng(seed, uc);
        for (std::uint64_t i = 0; i < count; ++i) {
            samples[offset + i] = sample_snr(hop, rng);
        }
    }
    std::sort(samples.begin(), samples.end());
    return samples;
}

double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_samples.size();
    if (n == 0) throw DomainError("ks_distance: empty sample");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        worst = std::max(worst, std::abs(f - double(i + 1) / double(n)));
        worst = std::max(worst, std::abs(f - double(i) / double(n)));
    }
    return worst;
}

}  // namespace uwoc::mc
