#ifndef UWOC_EGG_CHANNEL_HPP
#define UWOC_EGG_CHANNEL_HPP

#include "uwoc/quadrature.hpp"
#include "uwoc/rng.hpp"

namespace uwoc {

/// Mixture Exponential-Generalized-Gamma fading law. `omega` weights the
/// Exponential lobe, (a, b, c) parameterize the Generalized Gamma lobe.
/// Interior weights 0 < omega < 1 are the model proper; the boundary values
/// 0 and 1 are accepted as the documented pure-GG / pure-Exponential
/// special cases.
struct EggParams {
    double omega;
    double lambda;
    double a;
    double b;
    double c;

    void validate() const;
};

/// One link: fading parameters, detection order r (1 = heterodyne,
/// 2 = IM/DD) and the average electrical SNR mu_r (linear).
struct HopConfig {
    EggParams egg;
    int r = 1;
    double mu = 1.0;

    void validate() const;

    /// Builds a hop from the average SNR (linear) instead of mu_r:
    /// mu_1 = avg_snr for heterodyne, mu_2 = avg_snr / E[I^2] for IM/DD.
    static HopConfig from_avg_snr(const EggParams& egg, int r, double avg_snr);
};

double irradiance_pdf(const EggParams& p, double irradiance);

/// E[I] and E[I^2] of the mixture in closed form.
double irradiance_mean(const EggParams& p);
double irradiance_second_moment(const EggParams& p);

/// Normalized variance of the irradiance fluctuations,
/// 2*w*lambda^2 + (1-w)*b^2*Gamma(a+2/c)/Gamma(a) - 1. Equals Var[I]/E[I]^2
/// only for unit-mean parameter sets; see irradiance_normalized_variance.
double scintillation_index(const EggParams& p);

/// Var[I]/E[I]^2 from the closed moments; agrees with scintillation_index
/// when E[I] = 1 and is the turbulence-strength measure used for
/// cross-fixture comparisons.
double irradiance_normalized_variance(const EggParams& p);

/// SNR-domain statistics, evaluated through the Mellin-Barnes engine as the
/// Meijer G forms they are stated in.
double snr_pdf(const HopConfig& h, double gamma,
               const mb::QuadratureSpec& spec = {});
double snr_cdf(const HopConfig& h, double gamma,
               const mb::QuadratureSpec& spec = {});
double snr_ccdf(const HopConfig& h, double gamma,
                const mb::QuadratureSpec& spec = {});

/// Algebraic reductions of the same laws to exponentials and regularized
/// incomplete gammas. Used where per-sample cost matters (empirical-CDF
/// comparisons); tests pin them against the engine route to 1e-8.
double snr_pdf_elementary(const HopConfig& h, double gamma);
double snr_cdf_elementary(const HopConfig& h, double gamma);
double snr_ccdf_elementary(const HopConfig& h, double gamma);

/// Deterministic sampling. The SNR mapping gamma = mu_r * I^r is the unique
/// one consistent with the per-hop law's argument (gamma/mu_r)^{1/r}/lambda.
double sample_irradiance(const EggParams& p, RngStream& rng);
double snr_from_irradiance(const HopConfig& h, double irradiance);
double sample_snr(const HopConfig& h, RngStream& rng);

}  // namespace uwoc

#endif
