#ifndef UWOC_MONTE_CARLO_HPP
#define UWOC_MONTE_CARLO_HPP

#include <cstdint>
#include <functional>

#include "uwoc/metrics.hpp"
#include "uwoc/relay_chain.hpp"

namespace uwoc::mc {

/// Result of one simulation run. Reproducible: the same (seed, n_samples)
/// yields the same estimate at any thread count, because draws are split
/// over a fixed number of seed-derived streams and reduced in stream order.
struct SimulationReport {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double wall_time_seconds = 0.0;
};

/// Draws one end-to-end SNR from the relay chain (per-hop draws through the
/// fixed-gain combiner).
double sample_e2e_snr(const RelayConfig& rc, RngStream& rng);

/// The public estimators require n >= 1e4 (below that the normal-theory
/// standard errors are not meaningful).
SimulationReport simulate_outage(const RelayConfig& rc, double gamma_th, std::uint64_t n,
                                 std::uint64_t seed);
SimulationReport simulate_ber(const RelayConfig& rc, const ModulationScheme& m,
                              std::uint64_t n, std::uint64_t seed);
SimulationReport simulate_capacity(const RelayConfig& rc, std::uint64_t n,
                                   std::uint64_t seed, double tau = 0.0);
SimulationReport simulate_moment(const RelayConfig& rc, int order, std::uint64_t n,
                                 std::uint64_t seed);

/// Test hooks: same estimators against an arbitrary SNR sampler (e.g. a
/// degenerate point-mass channel). No minimum-n requirement.
using SnrSampler = std::function<double(RngStream&)>;
SimulationReport simulate_outage_with_sampler(const SnrSampler& sampler, double gamma_th,
                                              std::uint64_t n, std::uint64_t seed);
SimulationReport simulate_ber_with_sampler(const SnrSampler& sampler,
                                           const ModulationScheme& m, std::uint64_t n,
                                           std::uint64_t seed);
SimulationReport simulate_capacity_with_sampler(const SnrSampler& sampler, double tau,
                                                std::uint64_t n, std::uint64_t seed);
SimulationReport simulate_moment_with_sampler(const SnrSampler& sampler, int order,
                                              std::uint64_t n, std::uint64_t seed);

/// Sorted e2e SNR draws, the raw material of empirical-CDF comparisons.
std::vector<double> sorted_snr_samples(const HopConfig& hop, std::uint64_t n,
                                       std::uint64_t seed);

/// Kolmogorov-Smirnov distance between sorted samples and a CDF evaluator.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf);

}  // namespace uwoc::mc

#endif
