#ifndef UWOC_METRICS_HPP
#define UWOC_METRICS_HPP

#include <string>
#include <vector>

#include "uwoc/relay_chain.hpp"

namespace uwoc {

/// Which detection technique a modulation scheme is meant for. Advisory:
/// the math is detection-agnostic, the CLI warns on mismatches.
enum class Detection { kImDd, kHeterodyne, kBoth };

/// (delta, p, {q_k}) tuple of the unified conditional-BER form
///   P_b(gamma) = delta/(2 Gamma(p)) sum_k Gamma(p, q_k gamma).
struct ModulationScheme {
    std::string name;
    double delta = 1.0;
    double p = 0.5;
    std::vector<double> q;
    Detection valid_detection = Detection::kBoth;

    int n_terms() const { return int(q.size()); }
    void validate() const;
};

/// Built-in registry: OOK (IM/DD), BPSK plus M-PSK / M-QAM families
/// (heterodyne). Every entry passes verify_against_erfc_oracle below.
std::vector<ModulationScheme> default_modulation_registry();
ModulationScheme make_mpsk(int m);
ModulationScheme make_mqam(int m);

/// Extends (or overrides, by name) the registry from a JSON array file:
///   [{"name":..., "delta":..., "p":..., "q":[...], "detection":...}, ...]
std::vector<ModulationScheme> load_modulation_registry(
    const std::string& path, std::vector<ModulationScheme> base = default_modulation_registry());

const ModulationScheme& find_modulation(const std::vector<ModulationScheme>& registry,
                                        const std::string& name);

/// For p = 1/2 schemes the conditional BER reduces to
/// (delta/2) sum_k erfc(sqrt(q_k gamma)); returns the largest absolute
/// deviation over gamma in {1, 10, 100}. Registry loading rejects p = 1/2
/// entries deviating by more than 1e-10.
double erfc_oracle_deviation(const ModulationScheme& m);

double conditional_ber(const ModulationScheme& m, double gamma);

double outage_probability(const RelayConfig& rc, double gamma_th,
                          const mb::QuadratureSpec& spec = {});

double average_ber_exact(const RelayConfig& rc, const ModulationScheme& m,
                         const mb::QuadratureSpec& spec = {});

/// High-SNR elementary form; throws DegenerateParameterError on
/// integer-ratio parameter degeneracies.
double average_ber_asymptotic(const RelayConfig& rc, const ModulationScheme& m);

/// tau of the capacity law E[ln(1 + tau gamma)]: e/(2 pi) under IM/DD, 1
/// under heterodyne detection; with mixed detection per hop the destination
/// hop decides.
double capacity_tau(const RelayConfig& rc);

/// E[ln(1 + tau gamma)] in nats/sec/Hz; exact for heterodyne detection, a
/// lower bound under IM/DD. tau <= 0 selects capacity_tau(rc).
double ergodic_capacity(const RelayConfig& rc, const mb::QuadratureSpec& spec = {},
                        double tau = 0.0);

}  // namespace uwoc

#endif
