#include "uwoc/egg_channel.hpp"

#include <cmath>

#include "uwoc/complex_gamma.hpp"
#include "uwoc/errors.hpp"

namespace uwoc {

void EggParams::validate() const {
    if (!(omega >= 0.0) || !(omega <= 1.0)) {
        throw DomainError("EggParams: mixture weight must lie in [0, 1]");
    }
    if (!(lambda > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
        throw DomainError("EggParams: lambda, a, b, c must be positive");
    }
}

void HopConfig::validate() const {
    egg.validate();
    if (r != 1 && r != 2) throw DomainError("HopConfig: detection order r must be 1 or 2");
    if (!(mu > 0.0)) throw DomainError("HopConfig: mu_r must be positive");
}

HopConfig HopConfig::from_avg_snr(const EggParams& egg, int r, double avg_snr) {
    if (!(avg_snr > 0.0)) throw DomainError("HopConfig: average SNR must be positive");
    HopConfig h{egg, r, avg_snr};
    if (r == 2) h.mu = avg_snr / irradiance_second_moment(egg);
    h.validate();
    return h;
}

double irradiance_pdf(const EggParams& p, double irradiance) {
    p.validate();
    if (!(irradiance > 0.0)) throw DomainError("irradiance_pdf: requires I > 0");
    double f = 0.0;
    if (p.omega > 0.0) {
        f += p.omega / p.lambda * std::exp(-irradiance / p.lambda);
    }
    if (p.omega < 1.0) {
        const double log_gg = std::log(p.c) + (p.a * p.c - 1.0) * std::log(irradiance) -
                              p.a * p.c * std::log(p.b) - std::lgamma(p.a) -
                              std::pow(irradiance / p.b, p.c);
        f += (1.0 - p.omega) * std::exp(log_gg);
    }
    return f;
}

double irradiance_mean(const EggParams& p) {
    p.validate();
    return p.omega * p.lambda +
           (1.0 - p.omega) * p.b * std::exp(std::lgamma(p.a + 1.0 / p.c) - std::lgamma(p.a));
}

double irradiance_second_moment(const EggParams& p) {
    p.validate();
    return 2.0 * p.omega * p.lambda * p.lambda +
           (1.0 - p.omega) * p.b * p.b *
               std::exp(std::lgamma(p.a + 2.0 / p.c) - std::lgamma(p.a));
}

double scintillation_index(const EggParams& p) {
    return irradiance_second_moment(p) - 1.0;
}

double irradiance_normalized_variance(const EggParams& p) {
    const double m1 = irradiance_mean(p);
    const double m2 = irradiance_second_moment(p);
    return m2 / (m1 * m1) - 1.0;
}

namespace {

// Arguments of the two Meijer G lobes: z1 = (gamma/mu)^{1/r}/lambda for the
// Exponential lobe, z2 = (gamma/mu)^{c/r}/b^c for the Generalized Gamma lobe.
double lobe_arg_exp(const HopConfig& h, double gamma) {
    return std::pow(gamma / h.mu, 1.0 / h.r) / h.egg.lambda;
}

double lobe_arg_gg(const HopConfig& h, double gamma) {
    return std::pow(gamma / h.mu, h.egg.c / h.r) / std::pow(h.egg.b, h.egg.c);
}

void check_gamma(const HopConfig& h, double gamma) {
    h.validate();
    if (!(gamma > 0.0)) throw DomainError("per-hop SNR statistics require gamma > 0");
}

}  // namespace

double snr_pdf(const HopConfig& h, double gamma, const mb::QuadratureSpec& spec) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) {
        f += p.omega / (h.r * gamma) *
             mb::meijer_g(1, 0, {}, {1.0}, lobe_arg_exp(h, gamma), spec);
    }
    if (p.omega < 1.0) {
        f += p.c * (1.0 - p.omega) / (h.r * std::tgamma(p.a) * gamma) *
             mb::meijer_g(1, 0, {}, {p.a}, lobe_arg_gg(h, gamma), spec);
    }
    return f;
}

double snr_cdf(const HopConfig& h, double gamma, const mb::QuadratureSpec& spec) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) {
        f += p.omega *
             mb::meijer_g(1, 1, {1.0}, {1.0, 0.0}, lobe_arg_exp(h, gamma), spec);
    }
    if (p.omega < 1.0) {
        f += (1.0 - p.omega) / std::tgamma(p.a) *
             mb::meijer_g(1, 1, {1.0}, {p.a, 0.0}, lobe_arg_gg(h, gamma), spec);
    }
    return f;
}

double snr_ccdf(const HopConfig& h, double gamma, const mb::QuadratureSpec& spec) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) {
        f += p.omega * std::exp(-lobe_arg_exp(h, gamma));
    }
    if (p.omega < 1.0) {
        f += (1.0 - p.omega) / std::tgamma(p.a) *
             mb::meijer_g(2, 0, {1.0}, {p.a, 0.0}, lobe_arg_gg(h, gamma), spec);
    }
    return f;
}

double snr_pdf_elementary(const HopConfig& h, double gamma) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) {
        const double z = lobe_arg_exp(h, gamma);
        f += p.omega / (h.r * gamma) * z * std::exp(-z);
    }
    if (p.omega < 1.0) {
        const double z = lobe_arg_gg(h, gamma);
        f += p.c * (1.0 - p.omega) / (h.r * gamma) *
             std::exp(p.a * std::log(z) - z - std::lgamma(p.a));
    }
    return f;
}

double snr_cdf_elementary(const HopConfig& h, double gamma) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) f += p.omega * (-std::expm1(-lobe_arg_exp(h, gamma)));
    if (p.omega < 1.0) f += (1.0 - p.omega) * gamma_p(p.a, lobe_arg_gg(h, gamma));
    return f;
}

double snr_ccdf_elementary(const HopConfig& h, double gamma) {
    check_gamma(h, gamma);
    const EggParams& p = h.egg;
    double f = 0.0;
    if (p.omega > 0.0) f += p.omega * std::exp(-lobe_arg_exp(h, gamma));
    if (p.omega < 1.0) f += (1.0 - p.omega) * gamma_q(p.a, lobe_arg_gg(h, gamma));
    return f;
}

double sample_irradiance(const EggParams& p, RngStream& rng) {
    // Mixture draw; the GG lobe is the Gamma-then-power transform
    // I = b * G^{1/c} with G ~ Gamma(a, 1).
    if (rng.uniform() <= p.omega) return rng.exponential(p.lambda);
    return p.b * std::pow(rng.gamma(p.a), 1.0 / p.c);
}

double snr_from_irradiance(const HopConfig& h, double irradiance) {
    return h.mu * std::pow(irradiance, double(h.r));
}

double sample_snr(const HopConfig& h, RngStream& rng) {
    return snr_from_irradiance(h, sample_irradiance(h.egg, rng));
}

}  // namespace uwoc
