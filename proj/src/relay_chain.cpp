#include "uwoc/relay_chain.hpp"

#include <cmath>

#include "uwoc/complex_gamma.hpp"
#include "uwoc/errors.hpp"

namespace uwoc {

void RelayConfig::validate() const {
    hop1.validate();
    hop2.validate();
    if (!(C > 0.0)) throw DomainError("RelayConfig: gain constant C must be positive");
}

RelayConfig RelayConfig::with_auto_gain(const HopConfig& hop1, const HopConfig& hop2,
                                        const mb::QuadratureSpec& spec) {
    RelayConfig rc{hop1, hop2, fixed_gain_constant(hop1, spec)};
    rc.validate();
    return rc;
}

RelayConfig RelayConfig::with_gain_constant(const HopConfig& hop1, const HopConfig& hop2,
                                            double C) {
    RelayConfig rc{hop1, hop2, C};
    rc.validate();
    return rc;
}

double combine_snr(double gamma1, double gamma2, double C) {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !(C > 0.0)) {
        throw DomainError("combine_snr: requires gamma1, gamma2, C > 0");
    }
    return gamma1 * gamma2 / (gamma2 + C);
}

double fixed_gain_constant(const HopConfig& hop1, const mb::QuadratureSpec& spec) {
    hop1.validate();
    const EggParams& p = hop1.egg;
    const double r = hop1.r;
    // Bracketed sum of the G^2 closed form; each lobe is an
    // H^{2,1}_{1,2}[1/(X^r mu) | (1,1); (.,.)(1,1)] with kernel
    // Gamma(.)Gamma(1-s)Gamma(s) x^s.
    double bracket = 0.0;
    if (p.omega > 0.0) {
        const mb::MellinKernel k{{{1.0, -r, 0.0, +1}, {1.0, -1.0, 0.0, +1}, {0.0, 1.0, 0.0, +1}},
                                 1.0};
        bracket += p.omega *
                   mb::fox_h_univariate(k, 1.0 / (std::pow(p.lambda, r) * hop1.mu), spec);
    }
    if (p.omega < 1.0) {
        const mb::MellinKernel k{
            {{p.a, -r / p.c, 0.0, +1}, {1.0, -1.0, 0.0, +1}, {0.0, 1.0, 0.0, +1}}, 1.0};
        bracket += (1.0 - p.omega) / std::tgamma(p.a) *
                   mb::fox_h_univariate(k, 1.0 / (std::pow(p.b, r) * hop1.mu), spec);
    }
    return 1.0 / bracket;
}

namespace {

// Hop-1 lobe factors act on s, hop-2 lobe factors on -t.
mb::GammaFactor hop1_factor(const EggParams& p, int r, bool gg_lobe) {
    if (gg_lobe) return {p.a, double(r) / p.c, 0.0, +1};
    return {1.0, double(r), 0.0, +1};
}

mb::GammaFactor hop2_factor(const EggParams& p, int r, bool gg_lobe) {
    if (gg_lobe) return {p.a, 0.0, -double(r) / p.c, +1};
    return {1.0, 0.0, -double(r), +1};
}

double lobe_weight(const EggParams& p, bool gg_lobe) {
    return gg_lobe ? (1.0 - p.omega) / std::tgamma(p.a) : p.omega;
}

double lobe_scale(const EggParams& p, bool gg_lobe) { return gg_lobe ? p.b : p.lambda; }

bool lobe_active(const EggParams& p, bool gg_lobe) {
    return gg_lobe ? p.omega < 1.0 : p.omega > 0.0;
}

// Assembles the four-term sum shared by the CDF/PDF/BER/capacity theorems:
//   Gamma(s+t) * [hop-1 lobe](s) * extra_s(s) / Gamma(denom_const + s)
//     * Gamma(-t) * [hop-2 lobe](t) * x^s y^t
// with x = x_scale * X1^{r1} mu_1 (times gamma^{-1} when x_over_gamma) and
// y = C / (X2^{r2} mu_2).
std::vector<BivariateTerm> four_lobe_terms(const RelayConfig& rc,
                                           const std::vector<mb::GammaFactor>& extra_s,
                                           double denom_const, double x_scale,
                                           double inv_gamma, bool skip_hop1_exp = false) {
    rc.validate();
    const HopConfig& h1 = rc.hop1;
    const HopConfig& h2 = rc.hop2;
    std::vector<BivariateTerm> terms;
    for (bool gg1 : {false, true}) {
        if (!lobe_active(h1.egg, gg1)) continue;
        if (skip_hop1_exp && !gg1) continue;
        for (bool gg2 : {false, true}) {
            if (!lobe_active(h2.egg, gg2)) continue;
            BivariateTerm term;
            term.kernel.prefactor = lobe_weight(h1.egg, gg1) * lobe_weight(h2.egg, gg2);
            auto& f = term.kernel.factors;
            f.push_back({0.0, 1.0, 1.0, +1});  // Gamma(s+t)
            f.push_back(hop1_factor(h1.egg, h1.r, gg1));
            for (const auto& e : extra_s) f.push_back(e);
            f.push_back({denom_const, 1.0, 0.0, -1});
            f.push_back({0.0, 0.0, -1.0, +1});  // Gamma(-t)
            f.push_back(hop2_factor(h2.egg, h2.r, gg2));
            term.x = x_scale * std::pow(lobe_scale(h1.egg, gg1), double(h1.r)) * h1.mu *
                     inv_gamma;
            term.y = rc.C / (std::pow(lobe_scale(h2.egg, gg2), double(h2.r)) * h2.mu);
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

}  // namespace

std::vector<BivariateTerm> e2e_cdf_terms(const RelayConfig& rc, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("e2e_cdf_terms: requires gamma > 0");
    return four_lobe_terms(rc, {}, 1.0, 1.0, 1.0 / gamma);
}

std::vector<BivariateTerm> e2e_pdf_terms(const RelayConfig& rc, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("e2e_pdf_terms: requires gamma > 0");
    return four_lobe_terms(rc, {}, 0.0, 1.0, 1.0 / gamma);
}

std::vector<BivariateTerm> ber_theorem_terms(const RelayConfig& rc, double p, double qk) {
    if (!(p > 0.0) || !(qk > 0.0)) {
        throw DomainError("ber_theorem_terms: requires p > 0 and q_k > 0");
    }
    return four_lobe_terms(rc, {{p, -1.0, 0.0, +1}}, 1.0, qk, 1.0);
}

std::vector<BivariateTerm> capacity_theorem_terms(const RelayConfig& rc, double tau) {
    if (!(tau > 0.0)) throw DomainError("capacity_theorem_terms: requires tau > 0");
    return four_lobe_terms(rc, {{0.0, 1.0, 0.0, +1}, {1.0, -1.0, 0.0, +1}}, 1.0, tau, 1.0);
}

namespace {

// r1 = 1 reduction of the hop-1 Exponential-lobe CDF terms:
//   coef * exp(-gamma/(lambda1 mu1)) *
//     H^{2,0}_{0,2}[C gamma/(lambda1 X2^{r2} mu1 mu2) | --; (0,1)(.,.)].
double cdf_exp_lobe_fast(const RelayConfig& rc, double gamma, bool gg2,
                         const mb::QuadratureSpec& spec) {
    const HopConfig& h1 = rc.hop1;
    const HopConfig& h2 = rc.hop2;
    const double coef = h1.egg.omega * lobe_weight(h2.egg, gg2);
    mb::MellinKernel k;
    k.factors.push_back({0.0, -1.0, 0.0, +1});  // Gamma(-u)
    if (gg2) {
        k.factors.push_back({h2.egg.a, -double(h2.r) / h2.egg.c, 0.0, +1});
    } else {
        k.factors.push_back({1.0, -double(h2.r), 0.0, +1});
    }
    const double arg = rc.C * gamma /
                       (h1.egg.lambda * std::pow(lobe_scale(h2.egg, gg2), double(h2.r)) *
                        h1.mu * h2.mu);
    return coef * std::exp(-gamma / (h1.egg.lambda * h1.mu)) *
           mb::fox_h_univariate(k, arg, spec);
}

}  // namespace

double e2e_cdf(const RelayConfig& rc, double gamma, const mb::QuadratureSpec& spec,
               CdfRoute route) {
    if (!(gamma > 0.0)) throw DomainError("e2e_cdf: requires gamma > 0");
    rc.validate();
    const bool fast = (route == CdfRoute::kFastR1) ||
                      (route == CdfRoute::kAuto && rc.hop1.r == 1);
    if (fast && rc.hop1.r != 1) {
        throw DomainError("e2e_cdf: the exponential reduction applies only to r1 = 1");
    }

    double sum = 0.0;
    if (fast && rc.hop1.egg.omega > 0.0) {
        for (bool gg2 : {false, true}) {
            if (!lobe_active(rc.hop2.egg, gg2)) continue;
            sum += cdf_exp_lobe_fast(rc, gamma, gg2, spec);
        }
    }
    // Remaining terms through the double contour; with the fast route the
    // hop-1 Exponential lobe is already accounted for.
    for (const auto& term : four_lobe_terms(rc, {}, 1.0, 1.0, 1.0 / gamma, fast)) {
        sum += mb::fox_h_bivariate(term.kernel, term.x, term.y, spec);
    }
    return 1.0 - sum;
}

double e2e_pdf(const RelayConfig& rc, double gamma, const mb::QuadratureSpec& spec) {
    double sum = 0.0;
    for (const auto& term : e2e_pdf_terms(rc, gamma)) {
        sum += mb::fox_h_bivariate(term.kernel, term.x, term.y, spec);
    }
    return sum / gamma;
}

namespace {

double checked_gamma(double arg, const char* what) {
    if (near_gamma_pole(arg, 1e-9)) {
        throw DegenerateParameterError(std::string("gamma argument ") + what +
                                       " within 1e-9 of a non-positive integer");
    }
    return std::tgamma(arg);
}

}  // namespace

double e2e_cdf_asymptotic(const RelayConfig& rc, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("e2e_cdf_asymptotic: requires gamma > 0");
    rc.validate();
    const EggParams& p1 = rc.hop1.egg;
    const EggParams& p2 = rc.hop2.egg;
    const double r1 = rc.hop1.r;
    const double r2 = rc.hop2.r;
    const double mu1 = rc.hop1.mu;
    const double mu2 = rc.hop2.mu;

    double f = 0.0;
    if (p1.omega > 0.0) {
        f += p1.omega * std::pow(gamma / (std::pow(p1.lambda, r1) * mu1), 1.0 / r1);
    }
    if (p1.omega < 1.0) {
        f += (1.0 - p1.omega) / std::tgamma(p1.a + 1.0) *
             std::pow(gamma / (std::pow(p1.b, r1) * mu1), p1.a * p1.c / r1);
    }
    if (p2.omega > 0.0 && p1.omega < 1.0) {
        f += p2.omega * (1.0 - p1.omega) / std::tgamma(p1.a) *
             checked_gamma(p1.a - r1 / (p1.c * r2), "a1 - r1/(c1 r2)") *
             std::pow(rc.C * gamma /
                          (std::pow(p1.b, r1) * std::pow(p2.lambda, r2) * mu1 * mu2),
                      1.0 / r2);
    }
    if (p2.omega < 1.0) {
        const double nu = p2.a * p2.c / r2;
        double inner = 0.0;
        if (p1.omega > 0.0) {
            inner += p1.omega / std::pow(p1.lambda, r1 * nu) *
                     checked_gamma(1.0 - r1 * nu, "1 - r1 a2 c2 / r2");
        }
        if (p1.omega < 1.0) {
            inner += (1.0 - p1.omega) / (std::tgamma(p1.a) * std::pow(p1.b, r1 * nu)) *
                     checked_gamma(p1.a - r1 * nu / p1.c, "a1 - r1 a2 c2/(c1 r2)");
        }
        f += (1.0 - p2.omega) / std::tgamma(p2.a + 1.0) * inner *
             std::pow(rc.C * gamma / (std::pow(p2.b, r2) * mu1 * mu2), nu);
    }
    return f;
}

double e2e_moment(const RelayConfig& rc, int n, const mb::QuadratureSpec& spec) {
    if (n < 1) throw DomainError("e2e_moment: moment order must be >= 1");
    rc.validate();
    const EggParams& p1 = rc.hop1.egg;
    const EggParams& p2 = rc.hop2.egg;
    const double r1 = rc.hop1.r;
    const double r2 = rc.hop2.r;
    const double dn = double(n);

    // E[gamma_1^n] in closed form.
    double m1 = 0.0;
    if (p1.omega > 0.0) {
        m1 += p1.omega * std::pow(p1.lambda, r1 * dn) * std::tgamma(1.0 + r1 * dn);
    }
    if (p1.omega < 1.0) {
        m1 += (1.0 - p1.omega) * std::pow(p1.b, r1 * dn) *
              std::exp(std::lgamma(p1.a + r1 * dn / p1.c) - std::lgamma(p1.a));
    }
    m1 *= std::pow(rc.hop1.mu, dn);

    // E[(gamma_2/(gamma_2 + C))^n]: H^{2,1}_{1,2} per hop-2 lobe with kernel
    // Gamma(-s)Gamma(.)Gamma(n+s) z^s, z = C/(X2^{r2} mu2).
    double bracket = 0.0;
    if (p2.omega > 0.0) {
        const mb::MellinKernel k{
            {{0.0, -1.0, 0.0, +1}, {1.0, -r2, 0.0, +1}, {dn, 1.0, 0.0, +1}}, 1.0};
        bracket += p2.omega *
                   mb::fox_h_univariate(k, rc.C / (std::pow(p2.lambda, r2) * rc.hop2.mu), spec);
    }
    if (p2.omega < 1.0) {
        const mb::MellinKernel k{
            {{0.0, -1.0, 0.0, +1}, {p2.a, -r2 / p2.c, 0.0, +1}, {dn, 1.0, 0.0, +1}}, 1.0};
        bracket += (1.0 - p2.omega) / std::tgamma(p2.a) *
                   mb::fox_h_univariate(k, rc.C / (std::pow(p2.b, r2) * rc.hop2.mu), spec);
    }
    return m1 * bracket / std::tgamma(dn);
}

double amount_of_fading(const RelayConfig& rc, int n, const mb::QuadratureSpec& spec) {
    if (n < 1) throw DomainError("amount_of_fading: order must be >= 1");
    if (n == 1) return 0.0;
    const double m1 = e2e_moment(rc, 1, spec);
    const double mn = e2e_moment(rc, n, spec);
    return mn / std::pow(m1, double(n)) - 1.0;
}

double diversity_order(const RelayConfig& rc) {
    rc.validate();
    const double r1 = rc.hop1.r;
    const double r2 = rc.hop2.r;
    const double a1c1 = rc.hop1.egg.a * rc.hop1.egg.c;
    const double a2c2 = rc.hop2.egg.a * rc.hop2.egg.c;
    return std::min(std::min(1.0 / r1, a1c1 / r1), std::min(2.0 / r2, 2.0 * a2c2 / r2));
}

}  // namespace uwoc
