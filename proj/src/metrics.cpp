#include "uwoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "uwoc/complex_gamma.hpp"
#include "uwoc/errors.hpp"

namespace uwoc {

void ModulationScheme::validate() const {
    if (name.empty()) throw DomainError("ModulationScheme: name must not be empty");
    if (!(delta > 0.0) || !(p > 0.0)) {
        throw DomainError("ModulationScheme '" + name + "': delta and p must be positive");
    }
    if (q.empty()) throw DomainError("ModulationScheme '" + name + "': needs at least one q_k");
    for (double qk : q) {
        if (!(qk > 0.0)) throw DomainError("ModulationScheme '" + name + "': q_k must be positive");
    }
    // Zero-SNR conditional BER is delta * n / 2. Single-term schemes must be
    // proper probabilities; multi-term union-bound approximations (e.g.
    // 64-QAM) may exceed 1 slightly at gamma -> 0, so only gross blowups are
    // rejected there.
    const double zero_snr_ber = delta * double(q.size()) / 2.0;
    if (q.size() == 1 && zero_snr_ber > 1.0 + 1e-12) {
        throw DomainError("ModulationScheme '" + name +
                          "': conditional BER at gamma=0 exceeds 1");
    }
    if (zero_snr_ber > 2.0) {
        throw DomainError("ModulationScheme '" + name +
                          "': conditional BER at gamma=0 exceeds 2");
    }
}

ModulationScheme make_mpsk(int m) {
    if (m < 2) throw DomainError("make_mpsk: M must be >= 2");
    ModulationScheme s;
    s.name = std::to_string(m) + "-PSK";
    s.p = 0.5;
    const double log2m = std::log2(double(m));
    s.delta = 2.0 / std::max(log2m, 2.0);
    const int n = std::max(m / 4, 1);
    for (int k = 1; k <= n; ++k) {
        const double x = std::sin((2.0 * k - 1.0) * 3.14159265358979323846 / m);
        s.q.push_back(x * x);
    }
    s.valid_detection = Detection::kHeterodyne;
    s.validate();
    return s;
}

ModulationScheme make_mqam(int m) {
    const int side = int(std::lround(std::sqrt(double(m))));
    if (side * side != m || m < 4) throw DomainError("make_mqam: M must be a square >= 4");
    ModulationScheme s;
    s.name = std::to_string(m) + "-QAM";
    s.p = 0.5;
    const double log2m = std::log2(double(m));
    s.delta = 4.0 / log2m * (1.0 - 1.0 / side);
    const int n = side / 2;
    for (int k = 1; k <= n; ++k) {
        s.q.push_back(3.0 * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (2.0 * (m - 1.0)));
    }
    s.valid_detection = Detection::kHeterodyne;
    s.validate();
    return s;
}

std::vector<ModulationScheme> default_modulation_registry() {
    std::vector<ModulationScheme> reg;
    reg.push_back({"OOK", 1.0, 0.5, {0.25}, Detection::kImDd});
    reg.push_back({"BPSK", 1.0, 0.5, {1.0}, Detection::kHeterodyne});
    reg.push_back(make_mpsk(16));
    reg.push_back(make_mqam(16));
    reg.push_back(make_mqam(64));
    for (const auto& m : reg) {
        if (erfc_oracle_deviation(m) > 1e-10) {
            throw DomainError("modulation '" + m.name + "' fails the erfc oracle");
        }
    }
    return reg;
}

namespace {

Detection detection_from_string(const std::string& s) {
    if (s == "imdd" || s == "im/dd") return Detection::kImDd;
    if (s == "heterodyne") return Detection::kHeterodyne;
    if (s == "both") return Detection::kBoth;
    throw DomainError("unknown detection '" + s + "' (imdd | heterodyne | both)");
}

}  // namespace

std::vector<ModulationScheme> load_modulation_registry(const std::string& path,
                                                       std::vector<ModulationScheme> base) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open modulation registry file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw DomainError("modulation registry must be a JSON array");
    for (const auto& je : j) {
        ModulationScheme m;
        m.name = je.at("name").get<std::string>();
        m.delta = je.at("delta").get<double>();
        m.p = je.at("p").get<double>();
        m.q = je.at("q").get<std::vector<double>>();
        m.valid_detection = je.contains("detection")
                                ? detection_from_string(je.at("detection").get<std::string>())
                                : Detection::kBoth;
        m.validate();
        if (m.p == 0.5 && erfc_oracle_deviation(m) > 1e-10) {
            throw DomainError("modulation '" + m.name + "' fails the erfc oracle");
        }
        auto it = std::find_if(base.begin(), base.end(),
                               [&](const ModulationScheme& b) { return b.name == m.name; });
        if (it != base.end()) {
            *it = m;
        } else {
            base.push_back(m);
        }
    }
    return base;
}

const ModulationScheme& find_modulation(const std::vector<ModulationScheme>& registry,
                                        const std::string& name) {
    for (const auto& m : registry) {
        if (m.name == name) return m;
    }
    throw DomainError("modulation '" + name + "' not found in registry");
}

double erfc_oracle_deviation(const ModulationScheme& m) {
    if (m.p != 0.5) return 0.0;
    double worst = 0.0;
    for (double g : {1.0, 10.0, 100.0}) {
        double oracle = 0.0;
        for (double qk : m.q) oracle += 0.5 * std::erfc(std::sqrt(qk * g));
        oracle *= m.delta;
        worst = std::max(worst, std::abs(conditional_ber(m, g) - oracle));
    }
    return worst;
}

double conditional_ber(const ModulationScheme& m, double gamma) {
    m.validate();
    if (!(gamma >= 0.0)) throw DomainError("conditional_ber: requires gamma >= 0");
    double sum = 0.0;
    for (double qk : m.q) sum += gamma_q(m.p, qk * gamma);
    return 0.5 * m.delta * sum;
}

double outage_probability(const RelayConfig& rc, double gamma_th,
                          const mb::QuadratureSpec& spec) {
    if (!(gamma_th > 0.0)) throw DomainError("outage_probability: requires gamma_th > 0");
    return e2e_cdf(rc, gamma_th, spec);
}

double average_ber_exact(const RelayConfig& rc, const ModulationScheme& m,
                         const mb::QuadratureSpec& spec) {
    m.validate();
    rc.validate();
    const double inv_two_gamma_p = 1.0 / (2.0 * std::tgamma(m.p));
    double total = 0.0;
    for (double qk : m.q) {
        double sum = 0.0;
        for (const auto& term : ber_theorem_terms(rc, m.p, qk)) {
            sum += mb::fox_h_bivariate(term.kernel, term.x, term.y, spec);
        }
        total += 0.5 - inv_two_gamma_p * sum;
    }
    return m.delta * total;
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

double average_ber_asymptotic(const RelayConfig& rc, const ModulationScheme& m) {
    m.validate();
    rc.validate();
    const EggParams& p1 = rc.hop1.egg;
    const EggParams& p2 = rc.hop2.egg;
    const double r1 = rc.hop1.r;
    const double r2 = rc.hop2.r;
    const double mu1 = rc.hop1.mu;
    const double mu2 = rc.hop2.mu;
    const double gp = std::tgamma(m.p);

    auto q_power_sum = [&](double base_inv, double expo) {
        double s = 0.0;
        for (double qk : m.q) s += std::pow(base_inv / qk, expo);
        return s;
    };

    double pe = 0.0;
    if (p1.omega > 0.0) {
        pe += m.delta * p1.omega * std::tgamma(m.p + 1.0 / r1) / (2.0 * gp) *
              q_power_sum(1.0 / (std::pow(p1.lambda, r1) * mu1), 1.0 / r1);
    }
    if (p1.omega < 1.0) {
        const double e = p1.a * p1.c / r1;
        pe += m.delta * (1.0 - p1.omega) * std::tgamma(m.p + e) /
              (2.0 * std::tgamma(p1.a + 1.0) * gp) *
              q_power_sum(1.0 / (std::pow(p1.b, r1) * mu1), e);
    }
    if (p2.omega > 0.0 && p1.omega < 1.0) {
        pe += m.delta * p2.omega * (1.0 - p1.omega) *
              checked_gamma(p1.a - r1 / (p1.c * r2), "a1 - r1/(c1 r2)") *
              std::tgamma(m.p + 1.0 / r2) / (2.0 * std::tgamma(p1.a) * gp) *
              q_power_sum(rc.C / (std::pow(p1.b, r1) * std::pow(p2.lambda, r2) * mu1 * mu2),
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
        pe += m.delta * (1.0 - p2.omega) * std::tgamma(m.p + nu) /
              (2.0 * std::tgamma(p2.a + 1.0) * gp) * inner *
              q_power_sum(rc.C / (std::pow(p2.b, r2) * mu1 * mu2), nu);
    }
    return pe;
}

double capacity_tau(const RelayConfig& rc) {
    rc.validate();
    constexpr double e_over_two_pi = 0.43263270368388741580;
    return rc.hop2.r == 2 ? e_over_two_pi : 1.0;
}

double ergodic_capacity(const RelayConfig& rc, const mb::QuadratureSpec& spec, double tau) {
    rc.validate();
    if (tau <= 0.0) tau = capacity_tau(rc);
    double sum = 0.0;
    for (const auto& term : capacity_theorem_terms(rc, tau)) {
        sum += mb::fox_h_bivariate(term.kernel, term.x, term.y, spec);
    }
    return sum;
}

}  // namespace uwoc
