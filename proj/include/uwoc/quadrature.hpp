#ifndef UWOC_QUADRATURE_HPP
#define UWOC_QUADRATURE_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace uwoc::mb {

/// One Gamma(constant + coeff_s*s + coeff_t*t)^{exponent_sign} factor of a
/// Mellin-Barnes integrand. coeff_t == 0 for univariate kernels.
struct GammaFactor {
    double constant = 0.0;
    double coeff_s = 0.0;
    double coeff_t = 0.0;
    int exponent_sign = +1;  // +1 numerator, -1 denominator
};

/// Product-of-gamma-factors kernel. The engine evaluates
///
///   prefactor * (1/2*pi*i)^2 II prod_f Gamma(...)^{sign} x^s y^t ds dt
///
/// along vertical contours (x pairs with s, y with t; univariate kernels drop
/// the t integral). Sign convention: kernel times x^{+s}, so ascending
/// numerator factors (coeff > 0) put their poles to the left of the contour.
struct MellinKernel {
    std::vector<GammaFactor> factors;
    double prefactor = 1.0;

    bool is_univariate() const {
        for (const auto& f : factors)
            if (f.coeff_t != 0.0) return false;
        return true;
    }
};

/// Contour-grid parameters. Abscissas left NaN are chosen automatically as
/// the point of largest pole clearance inside the separating strip. The
/// engine may refine `step` downward when a contour runs close to a pole, and
/// truncates `half_width` to honour `max_nodes`; the tail test below governs
/// accuracy either way.
struct QuadratureSpec {
    double step = 0.05;
    double half_width = 40.0;
    double target_rel_tol = 1e-8;
    std::size_t max_nodes = 4000000;
    double contour_abscissa_s = std::numeric_limits<double>::quiet_NaN();
    double contour_abscissa_t = std::numeric_limits<double>::quiet_NaN();
};

struct ContourChoice {
    double abscissa_s = 0.0;
    double abscissa_t = 0.0;
    double pole_clearance = 0.0;  // min distance from a contour to a kernel pole
};

/// Diagnostics from one evaluation.
struct EvalInfo {
    double value = 0.0;
    double imag_residual = 0.0;
    double abs_integral = 0.0;  // integral of |integrand|; conditioning measure
    std::size_t nodes = 0;
    ContourChoice contour;
    double step_used = 0.0;
    double half_width_used = 0.0;
};

/// Chooses contour abscissas separating the pole families (honouring any
/// user-fixed abscissas in `spec`). Throws ContourError when no separating
/// strip exists, DegenerateParameterError when a strip exists only within
/// ~1e-9 of a pole.
ContourChoice select_contour(const MellinKernel& kernel, const QuadratureSpec& spec);

/// value = prefactor * (1/2*pi*i) I prod Gamma x^s ds. Requires x > 0.
double fox_h_univariate(const MellinKernel& kernel, double x,
                        const QuadratureSpec& spec = {});
double fox_h_univariate(const std::vector<GammaFactor>& factors, double x,
                        const QuadratureSpec& spec = {});
EvalInfo fox_h_univariate_info(const MellinKernel& kernel, double x,
                               const QuadratureSpec& spec = {});

/// value = prefactor * (1/2*pi*i)^2 II prod Gamma x^s y^t ds dt.
/// Requires x, y > 0. Node evaluation is OpenMP-parallel with a fixed-order
/// reduction: results are bit-identical for a given spec at any thread count.
double fox_h_bivariate(const MellinKernel& kernel, double x, double y,
                       const QuadratureSpec& spec = {});
EvalInfo fox_h_bivariate_info(const MellinKernel& kernel, double x, double y,
                              const QuadratureSpec& spec = {});

/// Straight-line serial evaluators, kept as the reference the optimized
/// paths are tested (and benchmarked) against.
double fox_h_univariate_reference(const MellinKernel& kernel, double x,
                                  const QuadratureSpec& spec = {});
double fox_h_bivariate_reference(const MellinKernel& kernel, double x, double y,
                                 const QuadratureSpec& spec = {});

/// Standard univariate Fox H parameter block
///   H^{m,n}_{p,q}[x | (a_1,A_1)..(a_p,A_p) ; (b_1,B_1)..(b_q,B_q)].
struct FoxHParams {
    int m = 0;
    int n = 0;
    std::vector<std::pair<double, double>> upper;  // (a_j, A_j)
    std::vector<std::pair<double, double>> lower;  // (b_j, B_j)
};

/// Converts the standard (m,n,p,q) notation to the engine's kernel form.
MellinKernel kernel_from_fox_h(const FoxHParams& params);

double fox_h(const FoxHParams& params, double x, const QuadratureSpec& spec = {});

/// Meijer G = Fox H with all linear coefficients equal to 1.
double meijer_g(int m, int n, const std::vector<double>& a,
                const std::vector<double>& b, double x,
                const QuadratureSpec& spec = {});

/// Kernel descriptors serialize to JSON for test fixtures:
///   {"prefactor": <real>, "power_bases": ["s","t"],
///    "factors": [{"constant":c, "coeff_s":a, "coeff_t":b, "sign":+1|-1}, ...]}
std::string kernel_to_json(const MellinKernel& kernel);
MellinKernel kernel_from_json(const std::string& text);

}  // namespace uwoc::mb

#endif
