// Times the Mellin-Barnes engine: straight-line serial reference vs the
// precomputed/OpenMP evaluator, single- and multi-threaded, on the kernel
// families the end-to-end closed forms are built from. Also reports the
// worst relative disagreement between the two paths.

#include <omp.h>

#include <chrono>
#include <functional>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "uwoc/fixtures.hpp"
#include "uwoc/metrics.hpp"
#include "uwoc/relay_chain.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_call(const std::function<double()>& fn, int reps, double* value) {
    *value = fn();  // warm-up and result capture
    const auto t0 = Clock::now();
    double sink = 0.0;
    for (int i = 0; i < reps; ++i) sink += fn();
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (sink == -1.0) std::printf("impossible\n");
    return dt / reps * 1e3;  // ms per call
}

struct NamedTerm {
    std::string name;
    uwoc::BivariateTerm term;
};

}  // namespace

int main() {
    using namespace uwoc;
    const double mu = 1000.0;
    const auto rc = RelayConfig::with_auto_gain({fixture_egg_a(), 2, mu},
                                                {fixture_egg_b(), 2, mu});
    const auto registry = default_modulation_registry();
    const auto& ook = find_modulation(registry, "OOK");

    std::vector<NamedTerm> cases;
    {
        const auto cdf = e2e_cdf_terms(rc, 1.0);
        cases.push_back({"cdf_term_exp_exp", cdf.front()});
        cases.push_back({"cdf_term_gg_gg", cdf.back()});
        const auto pdf = e2e_pdf_terms(rc, 1.0);
        cases.push_back({"pdf_term_exp_exp", pdf.front()});
        const auto ber = ber_theorem_terms(rc, ook.p, ook.q.front());
        cases.push_back({"ber_term_exp_exp", ber.front()});
        const auto cap = capacity_theorem_terms(rc, capacity_tau(rc));
        cases.push_back({"capacity_term_gg_gg", cap.back()});
    }

    // The reference evaluator recomputes every gamma factor per node, so it
    // is benchmarked on a coarser grid than the production default.
    mb::QuadratureSpec coarse;
    coarse.step = 0.1;
    coarse.half_width = 25.0;

    const int max_threads = omp_get_max_threads();
    std::printf("grid: step=%.3g half_width=%.3g   threads for parallel column: %d\n",
                coarse.step, coarse.half_width, max_threads);
    std::printf("%-22s %12s %12s %12s %10s %10s\n", "kernel", "reference", "opt(1thr)",
                "opt(par)", "speedup", "rel_diff");

    for (const auto& c : cases) {
        double v_ref = 0.0, v_one = 0.0, v_par = 0.0;
        const double t_ref = time_call(
            [&] { return mb::fox_h_bivariate_reference(c.term.kernel, c.term.x, c.term.y, coarse); },
            1, &v_ref);
        omp_set_num_threads(1);
        const double t_one = time_call(
            [&] { return mb::fox_h_bivariate(c.term.kernel, c.term.x, c.term.y, coarse); }, 3,
            &v_one);
        omp_set_num_threads(max_threads);
        const double t_par = time_call(
            [&] { return mb::fox_h_bivariate(c.term.kernel, c.term.x, c.term.y, coarse); }, 3,
            &v_par);
        const double rel = std::abs(v_one - v_ref) / std::max(std::abs(v_ref), 1e-300);
        std::printf("%-22s %10.2fms %10.2fms %10.2fms %9.1fx %10.2e\n", c.name.c_str(), t_ref,
                    t_one, t_par, t_ref / t_par, rel);
        if (v_par != v_one) {
            std::printf("  WARNING: thread count changed bits (%.17g vs %.17g)\n", v_one, v_par);
        }
    }

    // Production-grid timing of one full end-to-end CDF evaluation.
    double v = 0.0;
    const double t_full = time_call([&] { return e2e_cdf(rc, 1.0); }, 3, &v);
    std::printf("\ne2e_cdf at default grid: %.2f ms (value %.12g)\n", t_full, v);
    return 0;
}
