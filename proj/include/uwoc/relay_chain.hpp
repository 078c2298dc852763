#ifndef UWOC_RELAY_CHAIN_HPP
#define UWOC_RELAY_CHAIN_HPP

#include <vector>

#include "uwoc/egg_channel.hpp"
#include "uwoc/quadrature.hpp"

namespace uwoc {

/// Dual-hop fixed-gain amplify-and-forward link. C is the gain constant
/// 1/(G^2 N_01); semi-blind operation derives it from hop 1's average fading
/// power, an explicit C supports what-if sweeps.
struct RelayConfig {
    HopConfig hop1;
    HopConfig hop2;
    double C = 1.0;

    void validate() const;

    static RelayConfig with_auto_gain(const HopConfig& hop1, const HopConfig& hop2,
                                      const mb::QuadratureSpec& spec = {});
    static RelayConfig with_gain_constant(const HopConfig& hop1, const HopConfig& hop2,
                                          double C);
};

/// End-to-end SNR of the fixed-gain relay: g1*g2/(g2 + C).
double combine_snr(double gamma1, double gamma2, double C);

/// C = 1/(G^2 N_01) with G^2 the average of the CSI-assisted gain; the noise
/// power cancels, so C depends only on hop 1's fading law, detection order
/// and mu_r. Equals 1/E[1/(gamma_1 + 1)].
double fixed_gain_constant(const HopConfig& hop1, const mb::QuadratureSpec& spec = {});

/// One bivariate Mellin-Barnes term of an end-to-end closed form: the
/// double-contour kernels are encoded directly from the appendix forms, with
/// the mixture coefficient folded into kernel.prefactor.
struct BivariateTerm {
    mb::MellinKernel kernel;
    double x = 1.0;
    double y = 1.0;
};

/// Term builders for the four-term theorem sums (zero-weight mixture lobes
/// are skipped). The BER and capacity kernels live here too since all four
/// families share the lobe structure; metrics assembles them into the
/// user-facing quantities. Exposed for tests and the benchmark.
std::vector<BivariateTerm> e2e_cdf_terms(const RelayConfig& rc, double gamma);
std::vector<BivariateTerm> e2e_pdf_terms(const RelayConfig& rc, double gamma);
std::vector<BivariateTerm> ber_theorem_terms(const RelayConfig& rc, double p, double qk);
std::vector<BivariateTerm> capacity_theorem_terms(const RelayConfig& rc, double tau);

/// Which evaluation route e2e_cdf takes for the hop-1 Exponential-lobe terms
/// when r1 = 1: the exponential-times-univariate reduction, the generic
/// double contour, or automatic (reduction whenever it applies).
enum class CdfRoute { kAuto, kBivariate, kFastR1 };

double e2e_cdf(const RelayConfig& rc, double gamma,
               const mb::QuadratureSpec& spec = {}, CdfRoute route = CdfRoute::kAuto);

/// High-SNR closed form: five groups of elementary terms. Throws
/// DegenerateParameterError when a gamma argument of a non-vanishing group
/// lands on a non-positive integer (integer-ratio parameter degeneracy).
double e2e_cdf_asymptotic(const RelayConfig& rc, double gamma);

double e2e_pdf(const RelayConfig& rc, double gamma, const mb::QuadratureSpec& spec = {});

/// E[gamma^n], n >= 1.
double e2e_moment(const RelayConfig& rc, int n, const mb::QuadratureSpec& spec = {});

/// AF^(n) = E[gamma^n]/E[gamma]^n - 1.
double amount_of_fading(const RelayConfig& rc, int n, const mb::QuadratureSpec& spec = {});

/// min(1/r1, a1*c1/r1, 2/r2, 2*a2*c2/r2).
double diversity_order(const RelayConfig& rc);

}  // namespace uwoc

#endif
