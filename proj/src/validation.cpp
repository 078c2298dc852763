#include "uwoc/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uwoc/complex_gamma.hpp"
#include "uwoc/errors.hpp"
#include "uwoc/fixtures.hpp"
#include "uwoc/monte_carlo.hpp"

namespace uwoc {

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

EggParams fixture_egg_a() { return {0.25, 0.45, 1.80, 0.65, 1.20}; }
EggParams fixture_egg_b() { return {0.45, 0.30, 1.20, 0.50, 0.90}; }
EggParams fixture_pure_exp() { return {1.0, 1.0, 1.0, 1.0, 1.0}; }
EggParams fixture_pure_gg() { return {0.0, 1.0, 2.0, 0.60, 1.40}; }

EggFixture load_egg_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file: " + path);
    nlohmann::json j;
    in >> j;
    EggFixture f;
    f.name = j.at("name").get<std::string>();
    f.description = j.value("description", "");
    f.params = {j.at("omega").get<double>(), j.at("lambda").get<double>(),
                j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>()};
    f.params.validate();
    return f;
}

std::string fixture_directory() {
    if (const char* env = std::getenv("UWOC_FIXTURE_DIR")) return env;
    return "fixtures";
}

EggParams load_fixture_by_name(const std::string& name) {
    const std::string path = fixture_directory() + "/" + name + ".json";
    std::ifstream probe(path);
    if (probe) return load_egg_fixture_file(path).params;
    if (name == "egg_a") return fixture_egg_a();
    if (name == "egg_b") return fixture_egg_b();
    if (name == "pure_exp") return fixture_pure_exp();
    if (name == "pure_gg") return fixture_pure_gg();
    throw DomainError("fixture '" + name + "' not found in " + fixture_directory());
}

// ---------------------------------------------------------------------------
// Validation suite
// ---------------------------------------------------------------------------

namespace {

struct Suite {
    const ValidationConfig& cfg;
    std::vector<CheckResult> checks;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    // Wall time since the previous add() is attributed to this check.
    void add(int criterion, const std::string& name, bool passed, double observed,
             double limit, const std::string& comparator, const std::string& detail = "") {
        const auto now = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(now - mark).count();
        mark = now;
        checks.push_back(
            {criterion, name, passed, observed, limit, comparator, detail, secs});
    }

    // Convenience: |observed| <= limit style checks.
    void add_le(int criterion, const std::string& name, double observed, double limit,
                const std::string& detail = "") {
        add(criterion, name, observed <= limit, observed, limit, "<=", detail);
    }
};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// The acceptance tolerances are pinned at 1e7 Monte-Carlo samples; smaller
// diagnostic runs widen the statistical limits to keep constant power, and
// the full-scale run uses exactly the pinned values.
double stat_scale(std::uint64_t n) {
    return std::max(1.0, std::sqrt(1e7 / double(n)));
}

// --- criterion 1: engine identities --------------------------------------

void check_engine_identities(Suite& s) {
    const mb::QuadratureSpec spec = s.cfg.quad;
    // exp(-x): kernel Gamma(-s) x^s. The negative-control hook flips the
    // coefficient sign, which must make this named check fail.
    const double coeff = s.cfg.inject_sign_error ? 1.0 : -1.0;
    const mb::MellinKernel exp_kernel{{{0.0, coeff, 0.0, +1}}, 1.0};
    double worst_exp = 0.0;
    for (double x : {0.1, 1.0, 10.0}) {
        double got = std::numeric_limits<double>::quiet_NaN();
        try {
            got = mb::fox_h_univariate(exp_kernel, x, spec);
        } catch (const Error&) {
        }
        const double err = std::isfinite(got) ? rel_err(got, std::exp(-x)) : 1.0;
        worst_exp = std::max(worst_exp, err);
    }
    s.add_le(1, "identity/exp_kernel", worst_exp, 1e-10, "Gamma(-s) kernel vs exp(-x)");

    double worst_rat = 0.0;
    for (double x : {0.1, 1.0, 10.0}) {
        const double got = mb::meijer_g(1, 1, {1.0}, {1.0}, x, spec);
        worst_rat = std::max(worst_rat, rel_err(got, x / (1.0 + x)));
    }
    s.add_le(1, "identity/ratio_kernel", worst_rat, 1e-10, "G^{1,1}_{1,1}[x|1;1] vs x/(1+x)");

    // Separable bivariate kernels factor into univariate products.
    const mb::MellinKernel sep{{{0.0, -1.0, 0.0, +1}, {0.0, 0.0, -1.0, +1}}, 1.0};
    const mb::MellinKernel uni_exp{{{0.0, -1.0, 0.0, +1}}, 1.0};
    double worst_sep = 0.0;
    for (auto [x, y] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{3.0, 0.2}}) {
        const double prod = mb::fox_h_univariate(uni_exp, x, spec) *
                            mb::fox_h_univariate(uni_exp, y, spec);
        worst_sep = std::max(worst_sep, rel_err(mb::fox_h_bivariate(sep, x, y, spec), prod));
    }
    s.add_le(1, "identity/separable_factorization", worst_sep, 1e-8,
             "Gamma(-s)Gamma(-t) vs product of exponentials");
}

// --- criterion 2: per-hop law vs empirical CDF ----------------------------

double empirical_cdf(const std::vector<double>& sorted, double x) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    return double(it - sorted.begin()) / double(sorted.size());
}

void check_per_hop_law(Suite& s) {
    const struct {
        const char* name;
        EggParams params;
    } fixtures[] = {{"egg_a", fixture_egg_a()},
                    {"egg_b", fixture_egg_b()},
                    {"pure_exp", fixture_pure_exp()},
                    {"pure_gg", fixture_pure_gg()}};
    const std::uint64_t n = s.cfg.n_hop;
    for (const auto& fx : fixtures) {
        for (int r : {1, 2}) {
            const HopConfig hop{fx.params, r, 100.0};
            const auto samples = mc::sorted_snr_samples(hop, n, s.cfg.seed);
            const double ks = mc::ks_distance(
                samples, [&](double g) { return snr_cdf_elementary(hop, g); });
            const std::string tag = std::string(fx.name) + "/r" + std::to_string(r);
            s.add_le(2, "hop_cdf_ks/" + tag, ks, 4e-4 * stat_scale(n));

            // Pointwise agreement of the Meijer-G route with the empirical
            // CDF at sample quantiles, three binomial standard errors.
            double worst = 0.0;
            for (double qtl : {0.002, 0.01, 0.05, 0.2, 0.5, 0.8, 0.95, 0.99, 0.998}) {
                const double g = samples[std::size_t(qtl * double(n - 1))];
                const double fhat = empirical_cdf(samples, g);
                const double f = snr_cdf(hop, g, s.cfg.quad);
                const double se = std::sqrt(std::max(f * (1.0 - f), 1e-12) / double(n));
                worst = std::max(worst, std::abs(fhat - f) / (3.0 * se));
            }
            s.add_le(2, "hop_cdf_pointwise/" + tag, worst, 1.0,
                     "max |emp-cdf| over 3 s.e. at 9 quantiles");
        }
    }
}

// --- criterion 3: end-to-end CDF vs Monte Carlo ---------------------------

void check_e2e_cdf_vs_mc(Suite& s) {
    const struct {
        const char* name;
        EggParams h1;
        EggParams h2;
    } pairs[] = {{"pure_exp", fixture_pure_exp(), fixture_pure_exp()},
                 {"egg_ab", fixture_egg_a(), fixture_egg_b()}};
    for (const auto& pr : pairs) {
        for (int r : {1, 2}) {
            double worst = 0.0;
            double worst_mu = 0.0;
            int used = 0;
            for (int i = 0; i < 10; ++i) {
                const double mu_db = 5.0 * i;
                const double mu = db_to_linear(mu_db);
                const auto rc = RelayConfig::with_auto_gain({pr.h1, r, mu}, {pr.h2, r, mu},
                                                            s.cfg.quad);
                const double closed = e2e_cdf(rc, 1.0, s.cfg.quad);
                const auto rep = mc::simulate_outage(rc, 1.0, s.cfg.n_e2e,
                                                     s.cfg.seed + std::uint64_t(i));
                // Normal-theory comparison needs a healthy success count.
                if (rep.estimate * double(s.cfg.n_e2e) < 25.0) continue;
                used++;
                const double se = std::max(rep.std_error, 1e-12);
                const double score = std::abs(closed - rep.estimate) / (3.0 * se);
                if (score > worst) {
                    worst = score;
                    worst_mu = mu_db;
                }
            }
            std::ostringstream detail;
            detail << used << " grid points, worst at mu=" << worst_mu << " dB";
            s.add_le(3, std::string("e2e_cdf_mc/") + pr.name + "/r" + std::to_string(r),
                     worst, 1.0, detail.str());
        }
    }
}

// --- criterion 4: r1=1 reduction vs generic double contour ----------------

void check_r1_fast_path(Suite& s) {
    const double mu = 1000.0;
    for (int r2 : {1, 2}) {
        const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                    {fixture_egg_b(), r2, mu}, s.cfg.quad);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double g = mu * std::pow(10.0, -4.0 + 5.0 * i / 19.0);
            const double fast = e2e_cdf(rc, g, s.cfg.quad, CdfRoute::kFastR1);
            const double biv = e2e_cdf(rc, g, s.cfg.quad, CdfRoute::kBivariate);
            worst = std::max(worst, rel_err(fast, biv));
        }
        s.add_le(4, "r1_reduction/r2_" + std::to_string(r2), worst, 1e-6,
                 "20 gamma grid points");
    }
}

// --- criterion 5: PDF vs CDF consistency ----------------------------------

void check_pdf_cdf_consistency(Suite& s) {
    const double mu = 100.0;
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                {fixture_egg_b(), 1, mu}, s.cfg.quad);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double g = mu * std::pow(10.0, -2.5 + 3.0 * i / 9.0);
        const double h = 1e-3 * g;
        const double fd = (e2e_cdf(rc, g + h, s.cfg.quad) - e2e_cdf(rc, g - h, s.cfg.quad)) /
                          (2.0 * h);
        worst = std::max(worst, rel_err(e2e_pdf(rc, g, s.cfg.quad), fd));
    }
    s.add_le(5, "pdf_vs_cdf_derivative", worst, 1e-4, "10 interior points");

    // Normalization: composite Simpson in log-gamma over a range whose CDF
    // mass outside is far below the tolerance.
    const double lo = mu * 1e-7;
    const double hi = mu * 2e3;
    const int intervals = 256;  // even
    const double du = std::log(hi / lo) / intervals;
    double integral = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double g = lo * std::exp(i * du);
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        integral += w * e2e_pdf(rc, g, s.cfg.quad) * g;  // d(gamma) = g du
    }
    integral *= du / 3.0;
    s.add_le(5, "pdf_normalization", std::abs(integral - 1.0), 1e-4);
}

// --- criterion 6: moments vs Monte Carlo ----------------------------------

void check_moments(Suite& s) {
    const double mu = 100.0;
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                {fixture_egg_b(), 1, mu}, s.cfg.quad);
    const auto m1 = mc::simulate_moment(rc, 1, s.cfg.n_metric, s.cfg.seed + 101);
    const auto m2 = mc::simulate_moment(rc, 2, s.cfg.n_metric, s.cfg.seed + 102);
    const double scale = stat_scale(s.cfg.n_metric);
    s.add_le(6, "moment_1_vs_mc", rel_err(e2e_moment(rc, 1, s.cfg.quad), m1.estimate),
             0.01 * scale);
    s.add_le(6, "moment_2_vs_mc", rel_err(e2e_moment(rc, 2, s.cfg.quad), m2.estimate),
             0.02 * scale);
    const double af2 = amount_of_fading(rc, 2, s.cfg.quad);
    s.add(6, "amount_of_fading_2_nonneg", af2 >= 0.0, af2, 0.0, ">=");
}

// --- criterion 7: asymptotic tightness ------------------------------------

// Scans a rising mu grid (explicit fixed C: the asymptotic law treats the
// gain constant as a parameter, while the semi-blind C itself grows with mu).
// Passes when some grid point has exact <= 1e-3 with the ratio inside
// [0.95, 1.05], and the ratio stays inside from there on.
void check_ratio_convergence(Suite& s, int criterion, const std::string& name,
                             const std::vector<double>& mu_db_grid,
                             const std::function<double(double)>& exact_fn,
                             const std::function<double(double)>& asym_fn) {
    bool entered = false;
    bool stayed = true;
    double entry_ratio = 0.0;
    for (double mu_db : mu_db_grid) {
        const double exact = exact_fn(mu_db);
        if (!(exact <= 1e-3)) continue;
        const double ratio = asym_fn(mu_db) / exact;
        const bool in_band = ratio >= 0.95 && ratio <= 1.05;
        if (!entered && in_band) {
            entered = true;
            entry_ratio = ratio;
        } else if (entered && !in_band) {
            stayed = false;
        }
    }
    s.add(criterion, name, entered && stayed, entry_ratio, 1.05, "in [0.95,1.05]",
          "first in-band ratio once metric <= 1e-3");
}

void check_asymptotics(Suite& s) {
    const mb::QuadratureSpec quad = s.cfg.quad;
    // Outage, IM/DD fixture pair, gain constant frozen at its mu=30 dB value.
    {
        const double C0 = fixed_gain_constant({fixture_egg_a(), 2, 1000.0}, quad);
        auto make = [&](double mu_db) {
            const double mu = db_to_linear(mu_db);
            return RelayConfig::with_gain_constant({fixture_egg_a(), 2, mu},
                                                   {fixture_egg_b(), 2, mu}, C0);
        };
        check_ratio_convergence(
            s, 7, "asym_outage/egg_ab_r2", {55.0, 60.0, 65.0, 70.0, 75.0},
            [&](double db) { return e2e_cdf(make(db), 1.0, quad); },
            [&](double db) { return e2e_cdf_asymptotic(make(db), 1.0); });
    }
    // Outage, heterodyne pure-Exponential pair, explicit C.
    {
        auto make = [&](double mu_db) {
            const double mu = db_to_linear(mu_db);
            return RelayConfig::with_gain_constant({fixture_pure_exp(), 1, mu},
                                                   {fixture_pure_exp(), 1, mu}, 2.0);
        };
        check_ratio_convergence(
            s, 7, "asym_outage/pure_exp_r1", {35.0, 40.0, 45.0, 50.0},
            [&](double db) { return e2e_cdf(make(db), 1.0, quad); },
            [&](double db) { return e2e_cdf_asymptotic(make(db), 1.0); });
    }
    const auto registry = default_modulation_registry();
    // BER, OOK over the IM/DD pair.
    {
        const auto& ook = find_modulation(registry, "OOK");
        const double C0 = fixed_gain_constant({fixture_egg_a(), 2, 1000.0}, quad);
        auto make = [&](double mu_db) {
            const double mu = db_to_linear(mu_db);
            return RelayConfig::with_gain_constant({fixture_egg_a(), 2, mu},
                                                   {fixture_egg_b(), 2, mu}, C0);
        };
        check_ratio_convergence(
            s, 7, "asym_ber/ook_egg_ab_r2", {55.0, 60.0, 65.0, 70.0},
            [&](double db) { return average_ber_exact(make(db), ook, quad); },
            [&](double db) { return average_ber_asymptotic(make(db), ook); });
    }
    // BER, BPSK over the heterodyne pure-Exponential pair.
    {
        const auto& bpsk = find_modulation(registry, "BPSK");
        auto make = [&](double mu_db) {
            const double mu = db_to_linear(mu_db);
            return RelayConfig::with_gain_constant({fixture_pure_exp(), 1, mu},
                                                   {fixture_pure_exp(), 1, mu}, 2.0);
        };
        check_ratio_convergence(
            s, 7, "asym_ber/bpsk_pure_exp_r1", {30.0, 35.0, 40.0, 45.0},
            [&](double db) { return average_ber_exact(make(db), bpsk, quad); },
            [&](double db) { return average_ber_asymptotic(make(db), bpsk); });
    }
}

// --- criterion 8: diversity order -----------------------------------------

void check_diversity_order(Suite& s) {
    for (int r : {1, 2}) {
        auto outage_asym = [&](double mu_db) {
            const double mu = db_to_linear(mu_db);
            const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), r, mu},
                                                        {fixture_egg_b(), r, mu}, s.cfg.quad);
            return e2e_cdf_asymptotic(rc, 1.0);
        };
        const double lo = outage_asym(60.0);
        const double hi = outage_asym(80.0);
        const double slope = -(std::log10(hi) - std::log10(lo)) / 2.0;
        const auto rc = RelayConfig::with_gain_constant({fixture_egg_a(), r, 1.0},
                                                        {fixture_egg_b(), r, 1.0}, 1.0);
        const double gd = diversity_order(rc);
        s.add_le(8, "diversity_slope/r" + std::to_string(r), rel_err(slope, gd), 0.05,
                 "log-log slope over [60,80] dB vs min-formula");
    }
}

// --- criterion 9: average BER ---------------------------------------------

void check_average_ber(Suite& s) {
    const auto registry = default_modulation_registry();
    double worst_reg = 0.0;
    for (const auto& m : registry) worst_reg = std::max(worst_reg, erfc_oracle_deviation(m));
    s.add_le(9, "registry_erfc_oracle", worst_reg, 1e-10,
             "all schemes at gamma in {1,10,100}");

    const auto& ook = find_modulation(registry, "OOK");
    const auto& bpsk = find_modulation(registry, "BPSK");
    int idx = 0;
    for (double mu_db : {20.0, 30.0, 40.0}) {
        const double mu = db_to_linear(mu_db);
        const auto rc_ook = RelayConfig::with_auto_gain({fixture_egg_a(), 2, mu},
                                                        {fixture_egg_b(), 2, mu}, s.cfg.quad);
        const auto rc_bpsk = RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                         {fixture_egg_b(), 1, mu}, s.cfg.quad);
        const double ook_closed = average_ber_exact(rc_ook, ook, s.cfg.quad);
        const double bpsk_closed = average_ber_exact(rc_bpsk, bpsk, s.cfg.quad);
        const auto ook_mc =
            mc::simulate_ber(rc_ook, ook, s.cfg.n_metric, s.cfg.seed + 201 + std::uint64_t(idx));
        const auto bpsk_mc = mc::simulate_ber(rc_bpsk, bpsk, s.cfg.n_metric,
                                              s.cfg.seed + 301 + std::uint64_t(idx));
        const std::string tag = std::to_string(int(mu_db)) + "db";
        const double scale = stat_scale(s.cfg.n_metric);
        s.add_le(9, "ber_ook_vs_mc/" + tag, rel_err(ook_closed, ook_mc.estimate),
                 0.02 * scale);
        s.add_le(9, "ber_bpsk_vs_mc/" + tag, rel_err(bpsk_closed, bpsk_mc.estimate),
                 0.02 * scale);
        s.add(9, "ber_bpsk_le_ook/" + tag, bpsk_closed <= ook_closed, bpsk_closed,
              ook_closed, "<=", "heterodyne BPSK vs IM/DD OOK at equal mu");
        ++idx;
    }
}

// --- criterion 10: ergodic capacity ---------------------------------------

void check_capacity(Suite& s) {
    int idx = 0;
    for (int r : {1, 2}) {
        for (double mu_db : {10.0, 20.0, 30.0}) {
            const double mu = db_to_linear(mu_db);
            const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), r, mu},
                                                        {fixture_egg_b(), r, mu}, s.cfg.quad);
            const double closed = ergodic_capacity(rc, s.cfg.quad);
            const auto rep = mc::simulate_capacity(rc, s.cfg.n_metric,
                                                   s.cfg.seed + 401 + std::uint64_t(idx));
            const std::string tag = "r" + std::to_string(r) + "/" +
                                    std::to_string(int(mu_db)) + "db";
            s.add_le(10, "capacity_vs_mc/" + tag, rel_err(closed, rep.estimate),
                     0.005 * stat_scale(s.cfg.n_metric));
            ++idx;
        }
        // Shape along dB grids. Monotonicity holds everywhere; concavity in
        // dB only once the log-law regime is reached (the end-to-end SNR of
        // the fixed-gain relay grows like mu^2 at low SNR, which makes the
        // capacity convex in dB there), so that check runs at high SNR.
        std::vector<double> cap;
        for (double mu_db = 5.0; mu_db <= 80.0; mu_db += 5.0) {
            const double mu = db_to_linear(mu_db);
            cap.push_back(ergodic_capacity(
                RelayConfig::with_auto_gain({fixture_egg_a(), r, mu},
                                            {fixture_egg_b(), r, mu}, s.cfg.quad),
                s.cfg.quad));
        }
        double min_diff = 1e300;
        double max_second = -1e300;
        for (std::size_t i = 1; i < cap.size(); ++i) min_diff = std::min(min_diff, cap[i] - cap[i - 1]);
        for (std::size_t i = 10; i < cap.size(); ++i) {  // windows from (45,50,55) dB up
            max_second = std::max(max_second, cap[i] - 2.0 * cap[i - 1] + cap[i - 2]);
        }
        s.add(10, "capacity_monotone/r" + std::to_string(r), min_diff >= 0.0, min_diff, 0.0,
              ">=");
        s.add_le(10, "capacity_concave/r" + std::to_string(r), max_second, 1e-3,
                 "max second difference on the 45..80 dB grid");
    }
}

// --- criterion 11: qualitative orderings ----------------------------------

void check_qualitative(Suite& s) {
    // Heterodyne beats IM/DD at every sweep point over the figure-style
    // 10..50 dB range (below ~5 dB the ordering genuinely crosses).
    double worst_gap = -1e300;
    for (double mu_db = 10.0; mu_db <= 50.0; mu_db += 10.0) {
        const double mu = db_to_linear(mu_db);
        const double het = e2e_cdf(RelayConfig::with_auto_gain({fixture_egg_a(), 1, mu},
                                                               {fixture_egg_b(), 1, mu},
                                                               s.cfg.quad),
                                   1.0, s.cfg.quad);
        const double imdd = e2e_cdf(RelayConfig::with_auto_gain({fixture_egg_a(), 2, mu},
                                                                {fixture_egg_b(), 2, mu},
                                                                s.cfg.quad),
                                    1.0, s.cfg.quad);
        worst_gap = std::max(worst_gap, het - imdd);
    }
    s.add_le(11, "heterodyne_le_imdd_outage", worst_gap, 0.0,
             "max over 10..50 dB of het - imdd");

    // The fixture with the larger normalized irradiance variance suffers the
    // larger outage at fixed mu.
    const double si_a = irradiance_normalized_variance(fixture_egg_a());
    const double si_b = irradiance_normalized_variance(fixture_egg_b());
    const EggParams strong = si_a >= si_b ? fixture_egg_a() : fixture_egg_b();
    const EggParams weak = si_a >= si_b ? fixture_egg_b() : fixture_egg_a();
    double worst = -1e300;
    for (double mu_db : {30.0, 40.0}) {
        const double mu = db_to_linear(mu_db);
        const double o_strong = e2e_cdf(
            RelayConfig::with_auto_gain({strong, 2, mu}, {strong, 2, mu}, s.cfg.quad), 1.0,
            s.cfg.quad);
        const double o_weak = e2e_cdf(
            RelayConfig::with_auto_gain({weak, 2, mu}, {weak, 2, mu}, s.cfg.quad), 1.0,
            s.cfg.quad);
        worst = std::max(worst, o_weak - o_strong);
    }
    std::ostringstream detail;
    detail << "normalized variance " << std::max(si_a, si_b) << " vs " << std::min(si_a, si_b);
    s.add_le(11, "stronger_turbulence_higher_outage", worst, 0.0, detail.str());
}

}  // namespace

ValidationReport run_validation(const ValidationConfig& cfg) {
    ValidationReport report;
    report.config = cfg;
    Suite suite{cfg, {}};
    check_engine_identities(suite);
    check_per_hop_law(suite);
    check_e2e_cdf_vs_mc(suite);
    check_r1_fast_path(suite);
    check_pdf_cdf_consistency(suite);
    check_moments(suite);
    check_asymptotics(suite);
    check_diversity_order(suite);
    check_average_ber(suite);
    check_capacity(suite);
    check_qualitative(suite);
    report.checks = std::move(suite.checks);
    return report;
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

std::string report_to_json(const ValidationReport& report) {
    nlohmann::json j;
    j["seed"] = report.config.seed;
    j["n_hop"] = report.config.n_hop;
    j["n_e2e"] = report.config.n_e2e;
    j["n_metric"] = report.config.n_metric;
    j["all_passed"] = report.all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"criterion", c.criterion},
                               {"name", c.name},
                               {"passed", c.passed},
                               {"observed", c.observed},
                               {"limit", c.limit},
                               {"comparator", c.comparator},
                               {"detail", c.detail}});
    }
    return j.dump(2);
}

std::string report_to_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        char buf[320];
        std::snprintf(buf, sizeof(buf), "%s [%2d] %-38s observed=%-12.6g limit %s %.6g %s\n",
                      c.passed ? "PASS" : "FAIL", c.criterion, c.name.c_str(), c.observed,
                      c.comparator.c_str(), c.limit, c.detail.c_str());
        out << buf;
    }
    out << (report.all_passed() ? "ALL CHECKS PASSED\n" : "SOME CHECKS FAILED\n");
    return out.str();
}

}  // namespace uwoc
