#include "uwoc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "json.hpp"
#include "uwoc/complex_gamma.hpp"
#include "uwoc/errors.hpp"

namespace uwoc::mb {

namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinClearance = 1e-9;
// exp(-60) ~ 9e-27: nodes below this (relative to the grid maximum) cannot
// move a double-precision sum of <= 4e6 terms at the 1e-12 level.
constexpr double kSkipLogThreshold = -60.0;

bool factor_is_constant(const GammaFactor& f) {
    return f.coeff_s == 0.0 && f.coeff_t == 0.0;
}

void validate_kernel(const MellinKernel& kernel) {
    if (kernel.factors.empty()) throw DomainError("kernel has no gamma factors");
    for (const auto& f : kernel.factors) {
        if (!std::isfinite(f.constant) || !std::isfinite(f.coeff_s) ||
            !std::isfinite(f.coeff_t)) {
            throw DomainError("kernel factor has non-finite parameters");
        }
        if (f.exponent_sign != 1 && f.exponent_sign != -1) {
            throw DomainError("kernel factor sign must be +1 or -1");
        }
        if (factor_is_constant(f) && near_gamma_pole(f.constant)) {
            throw DegenerateParameterError("constant gamma factor sits on a pole");
        }
    }
}

struct Strip {
    double lo = -kInf;
    double hi = kInf;
    bool empty() const { return !(lo < hi); }
};

// Candidate abscissas inside a strip. One-sided strips get a geometric
// ladder away from the bound: combined with the central-magnitude tie-break
// this walks the contour toward the saddle point, which is what keeps
// relative accuracy for far-tail evaluations (e.g. Gamma(-s) x^s at x ~ 60,
// whose saddle sits near s = -x). `max_distance` bounds the ladder: far
// abscissas widen the integrand hump like sqrt(|s|), which the bivariate
// node budget cannot cover.
std::vector<double> strip_candidates(const Strip& strip, double max_distance) {
    std::vector<double> out;
    const bool lo_fin = std::isfinite(strip.lo);
    const bool hi_fin = std::isfinite(strip.hi);
    static constexpr double ladder[] = {0.125, 0.25,  0.5,   1.0,   2.0,   4.0,
                                        8.0,   16.0,  32.0,  64.0,  128.0, 256.0};
    if (lo_fin && hi_fin) {
        const double w = strip.hi - strip.lo;
        for (double f : {0.5, 0.3, 0.7, 0.15, 0.85, 0.05, 0.95})
            out.push_back(strip.lo + f * w);
    } else if (hi_fin) {
        for (double d : ladder) {
            if (d <= max_distance) out.push_back(strip.hi - d);
        }
    } else if (lo_fin) {
        for (double d : ladder) {
            if (d <= max_distance) out.push_back(strip.lo + d);
        }
    } else {
        for (double v : {0.0, -0.25, 0.25, -0.5, 0.5, -2.0, 2.0, -8.0, 8.0, -32.0, 32.0}) {
            if (std::abs(v) <= max_distance) out.push_back(v);
        }
    }
    return out;
}

// Distance from the contour pair to the nearest pole of one numerator factor,
// measured in the plane of the factor's fastest variable. The first pole of
// Gamma(c + a*s + b*t) seen from a feasible contour is at argument zero.
double factor_clearance(const GammaFactor& f, double ss, double st) {
    const double arg = f.constant + f.coeff_s * ss + f.coeff_t * st;
    const double scale = std::max(std::abs(f.coeff_s), std::abs(f.coeff_t));
    return arg / scale;
}

double min_clearance(const MellinKernel& kernel, double ss, double st) {
    double m = kInf;
    for (const auto& f : kernel.factors) {
        if (f.exponent_sign < 0 || factor_is_constant(f)) continue;
        m = std::min(m, factor_clearance(f, ss, st));
    }
    return m;
}

Strip s_strip_given_t(const MellinKernel& kernel, double st) {
    Strip s;
    for (const auto& f : kernel.factors) {
        if (f.exponent_sign < 0 || f.coeff_s == 0.0) continue;
        const double bound = (-f.constant - f.coeff_t * st) / f.coeff_s;
        if (f.coeff_s > 0.0) {
            s.lo = std::max(s.lo, bound);
        } else {
            s.hi = std::min(s.hi, bound);
        }
    }
    return s;
}

Strip t_strip(const MellinKernel& kernel) {
    Strip t;
    for (const auto& f : kernel.factors) {
        if (f.exponent_sign < 0 || f.coeff_t == 0.0 || f.coeff_s != 0.0) continue;
        const double bound = -f.constant / f.coeff_t;
        if (f.coeff_t > 0.0) {
            t.lo = std::max(t.lo, bound);
        } else {
            t.hi = std::min(t.hi, bound);
        }
    }
    return t;
}

}  // namespace

namespace {

// Clearance beyond this changes nothing (the step rule already pushes the
// truncation factor below 1e-16 there), so wider placements only inflate the
// integrand scale.
constexpr double kClearanceCap = 0.35;

// Log-magnitude of the integrand at the central node: the conditioning proxy
// used to break ties between equally well-cleared contours.
double central_log_magnitude(const MellinKernel& kernel, double ss, double st,
                             double log_x, double log_y) {
    double m = ss * log_x + st * log_y;
    for (const auto& f : kernel.factors) {
        const double arg = f.constant + f.coeff_s * ss + f.coeff_t * st;
        if (near_gamma_pole(arg, 1e-8)) return kInf;
        m += double(f.exponent_sign) * std::lgamma(arg);
    }
    return m;
}

ContourChoice select_contour_impl(const MellinKernel& kernel, const QuadratureSpec& spec,
                                  double log_x, double log_y) {
    validate_kernel(kernel);
    const bool uni = kernel.is_univariate();
    const bool user_s = std::isfinite(spec.contour_abscissa_s);
    const bool user_t = std::isfinite(spec.contour_abscissa_t);

    if (user_s && (uni || user_t)) {
        ContourChoice c{spec.contour_abscissa_s, uni ? 0.0 : spec.contour_abscissa_t, 0.0};
        c.pole_clearance = min_clearance(kernel, c.abscissa_s, c.abscissa_t);
        if (c.pole_clearance <= 0.0) {
            throw ContourError("user abscissas do not separate the pole families");
        }
        return c;
    }

    const double max_ladder = uni ? 256.0 : 8.0;
    std::vector<double> t_candidates;
    if (uni) {
        t_candidates.push_back(0.0);
    } else if (user_t) {
        t_candidates.push_back(spec.contour_abscissa_t);
    } else {
        t_candidates = strip_candidates(t_strip(kernel), max_ladder);
    }

    ContourChoice best;
    best.pole_clearance = -kInf;
    double best_score = -kInf;
    double best_mag = kInf;
    bool any_strip = false;
    for (double st : t_candidates) {
        const Strip ss = s_strip_given_t(kernel, st);
        if (ss.empty()) continue;
        any_strip = true;
        std::vector<double> s_candidates =
            user_s ? std::vector<double>{spec.contour_abscissa_s}
                   : strip_candidates(ss, max_ladder);
        for (double sv : s_candidates) {
            const double clearance = min_clearance(kernel, sv, st);
            if (clearance <= 0.0) continue;
            const double score = std::min(clearance, kClearanceCap);
            const double mag = central_log_magnitude(kernel, sv, st, log_x, log_y);
            const bool better = score > best_score + 1e-12 ||
                                (score > best_score - 1e-12 && mag < best_mag);
            if (better) {
                best = ContourChoice{sv, st, clearance};
                best_score = score;
                best_mag = mag;
            }
        }
    }
    if (!any_strip || !(best.pole_clearance > 0.0)) {
        throw ContourError("no vertical contour separates the kernel's pole families");
    }
    if (best.pole_clearance < kMinClearance) {
        throw DegenerateParameterError(
            "pole-free strip collapses below 1e-9: parameter-degenerate kernel");
    }
    return best;
}

}  // namespace

ContourChoice select_contour(const MellinKernel& kernel, const QuadratureSpec& spec) {
    return select_contour_impl(kernel, spec, 0.0, 0.0);
}

namespace {

struct GridPlan {
    double h = 0.0;
    std::size_t half_count = 0;  // nodes at tau = (k - half_count) * h
    double half_width() const { return double(half_count) * h; }
    std::size_t axis_nodes() const { return 2 * half_count + 1; }
};

GridPlan plan_grid(const QuadratureSpec& spec, const ContourChoice& contour, bool bivariate) {
    GridPlan g;
    // Trapezoid truncation error on a vertical line scales with the residue of
    // the nearest pole times exp(-2*pi*d/h); clearance/6 keeps that factor
    // below ~4e-17 even against residues of order 1e6.
    g.h = std::min(spec.step, contour.pole_clearance / 6.0);
    g.h = std::max(g.h, 1e-6);
    const double budget = bivariate ? std::sqrt(double(spec.max_nodes)) : double(spec.max_nodes);
    const auto max_half = std::size_t(std::max(1.0, (budget - 1.0) / 2.0));
    g.half_count = std::min(std::size_t(std::ceil(spec.half_width / g.h)), max_half);
    return g;
}

struct Accum {
    cplx total{0.0, 0.0};
    cplx ring{0.0, 0.0};
    double abs_sum = 0.0;
};

// Fixed-order sum of per-row partials: identical bits at any thread count.
Accum reduce_rows(const std::vector<Accum>& rows) {
    Accum out;
    for (const auto& r : rows) {
        out.total += r.total;
        out.ring += r.ring;
        out.abs_sum += r.abs_sum;
    }
    return out;
}

EvalInfo finalize(const MellinKernel& kernel, const Accum& acc, double log_scale,
                  const GridPlan& grid, const ContourChoice& contour,
                  std::size_t nodes, double tol, bool bivariate) {
    const double two_pi = 6.283185307179586477;
    double log_norm = log_scale + std::log(grid.h) - std::log(two_pi);
    if (bivariate) log_norm += std::log(grid.h) - std::log(two_pi);

    const double mag = std::abs(acc.total);
    if (mag > 0.0 && log_norm + std::log(mag) > 700.0) {
        throw ConvergenceError("Mellin-Barnes result overflows double precision");
    }
    const double norm = std::exp(log_norm);
    const cplx raw = kernel.prefactor * norm * acc.total;
    const double abs_integral = std::abs(kernel.prefactor) * norm * acc.abs_sum;

    EvalInfo info;
    info.value = raw.real();
    info.imag_residual = std::abs(raw.imag());
    info.abs_integral = abs_integral;
    info.nodes = nodes;
    info.contour = contour;
    info.step_used = grid.h;
    info.half_width_used = grid.half_width();

    // The grid is symmetric about the real axis, so the imaginary part of an
    // exact sum cancels; anything beyond rounding noise means a bad contour.
    // The machine floor keeps near-zero results (pure cancellation) legal.
    const double floor = 512.0 * std::numeric_limits<double>::epsilon() * abs_integral;
    if (info.imag_residual > tol * std::abs(info.value) && info.imag_residual > floor) {
        throw ConvergenceError("imaginary residual exceeds tolerance: " +
                               std::to_string(info.imag_residual));
    }
    return info;
}

bool tail_converged(const Accum& acc, double tol) {
    const double ref = std::max(std::abs(acc.total), 1e-300);
    // A ring below 1e-12 of the absolute integral is inside the rounding
    // floor of the accumulation; demanding less is not resolvable.
    const double threshold = std::max(1e-3 * tol * ref, 1e-12 * acc.abs_sum);
    return std::abs(acc.ring) <= threshold;
}

// ---------------------------------------------------------------------------
// Univariate path
// ---------------------------------------------------------------------------

EvalInfo eval_univariate(const MellinKernel& kernel, double x, const QuadratureSpec& spec) {
    if (!(x > 0.0)) throw DomainError("fox_h_univariate: requires x > 0");
    const double log_x = std::log(x);
    const ContourChoice contour = select_contour_impl(kernel, spec, log_x, 0.0);
    GridPlan grid = plan_grid(spec, contour, false);

    for (;;) {
        const std::size_t n = grid.axis_nodes();
        const auto half = std::ptrdiff_t(grid.half_count);
        std::vector<cplx> lg(n);
        double max_re = -kInf;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx s(contour.abscissa_s, double(std::ptrdiff_t(i) - half) * grid.h);
            cplx acc = s * log_x;
            for (const auto& f : kernel.factors) {
                acc += double(f.exponent_sign) *
                       log_gamma_complex(f.constant + f.coeff_s * s);
            }
            lg[i] = acc;
            max_re = std::max(max_re, acc.real());
        }
        Accum acc;
        const auto ring_start = std::size_t(std::floor(0.9 * double(grid.half_count)));
        for (std::size_t i = 0; i < n; ++i) {
            const cplx v = lg[i] - max_re;
            if (v.real() < kSkipLogThreshold) continue;
            const cplx e = std::exp(v);
            acc.total += e;
            acc.abs_sum += std::abs(e);
            if (std::size_t(std::abs(std::ptrdiff_t(i) - half)) >= ring_start) acc.ring += e;
        }
        if (tail_converged(acc, spec.target_rel_tol)) {
            return finalize(kernel, acc, max_re, grid, contour, n, spec.target_rel_tol, false);
        }
        if (2 * grid.axis_nodes() > spec.max_nodes) {
            throw ConvergenceError("univariate tail not converged within max_nodes");
        }
        grid.half_count *= 2;
    }
}

// ---------------------------------------------------------------------------
// Bivariate path
// ---------------------------------------------------------------------------

struct FactorSplit {
    std::vector<GammaFactor> s_only;
    std::vector<GammaFactor> t_only;
    std::vector<GammaFactor> coupled;
    std::vector<GammaFactor> constants;
    bool coupled_diagonal = true;  // every coupled factor has coeff_s == coeff_t
};

FactorSplit split_factors(const MellinKernel& kernel) {
    FactorSplit out;
    for (const auto& f : kernel.factors) {
        if (factor_is_constant(f)) {
            out.constants.push_back(f);
        } else if (f.coeff_t == 0.0) {
            out.s_only.push_back(f);
        } else if (f.coeff_s == 0.0) {
            out.t_only.push_back(f);
        } else {
            out.coupled.push_back(f);
            if (f.coeff_s != f.coeff_t) out.coupled_diagonal = false;
        }
    }
    return out;
}

EvalInfo eval_bivariate(const MellinKernel& kernel, double x, double y,
                        const QuadratureSpec& spec) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("fox_h_bivariate: requires x, y > 0");
    const double log_x = std::log(x);
    const double log_y = std::log(y);
    const ContourChoice contour = select_contour_impl(kernel, spec, log_x, log_y);
    const FactorSplit split = split_factors(kernel);
    GridPlan grid = plan_grid(spec, contour, true);

    for (;;) {
        const std::size_t n = grid.axis_nodes();
        const auto half = std::ptrdiff_t(grid.half_count);
        const double h = grid.h;

        std::vector<cplx> la(n), lb(n);
        cplx const_term = 0.0;
        for (const auto& f : split.constants) {
            const_term += double(f.exponent_sign) * log_gamma_complex(cplx(f.constant, 0.0));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx s(contour.abscissa_s, double(std::ptrdiff_t(i) - half) * h);
            cplx acc = s * log_x;
            for (const auto& f : split.s_only) {
                acc += double(f.exponent_sign) * log_gamma_complex(f.constant + f.coeff_s * s);
            }
            la[i] = acc;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const cplx t(contour.abscissa_t, double(std::ptrdiff_t(j) - half) * h);
            cplx acc = t * log_y + const_term;
            for (const auto& f : split.t_only) {
                acc += double(f.exponent_sign) * log_gamma_complex(f.constant + f.coeff_t * t);
            }
            lb[j] = acc;
        }

        // Coupled factors with coeff_s == coeff_t depend on tau_s + tau_t
        // only, so they live on a (2n-1)-entry diagonal lookup.
        std::vector<cplx> lc;
        if (split.coupled_diagonal && !split.coupled.empty()) {
            lc.resize(2 * n - 1);
            for (std::size_t k = 0; k < lc.size(); ++k) {
                const double tau = double(std::ptrdiff_t(k) - 2 * half) * h;
                cplx acc = 0.0;
                for (const auto& f : split.coupled) {
                    const cplx arg(f.constant + f.coeff_s * (contour.abscissa_s + contour.abscissa_t),
                                   f.coeff_s * tau);
                    acc += double(f.exponent_sign) * log_gamma_complex(arg);
                }
                lc[k] = acc;
            }
        }

        double max_a = -kInf, max_b = -kInf, max_c = 0.0;
        for (const auto& v : la) max_a = std::max(max_a, v.real());
        for (const auto& v : lb) max_b = std::max(max_b, v.real());
        if (!lc.empty()) {
            max_c = -kInf;
            for (const auto& v : lc) max_c = std::max(max_c, v.real());
        }
        const double log_scale = max_a + max_b + max_c;

        const auto ring_start = std::size_t(std::floor(0.9 * double(grid.half_count)));
        std::vector<Accum> rows(n);

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t ii = 0; ii < std::ptrdiff_t(n); ++ii) {
            const auto i = std::size_t(ii);
            const bool row_in_ring =
                std::size_t(std::abs(std::ptrdiff_t(i) - half)) >= ring_start;
            const cplx a = la[i] - max_a;
            Accum row;
            if (a.real() >= kSkipLogThreshold) {
                for (std::size_t j = 0; j < n; ++j) {
                    cplx v = a + (lb[j] - max_b);
                    if (!lc.empty()) {
                        v += lc[i + j] - max_c;
                    } else if (!split.coupled.empty()) {
                        const cplx s(contour.abscissa_s, double(std::ptrdiff_t(i) - half) * h);
                        const cplx t(contour.abscissa_t, double(std::ptrdiff_t(j) - half) * h);
                        for (const auto& f : split.coupled) {
                            v += double(f.exponent_sign) *
                                 log_gamma_complex(f.constant + f.coeff_s * s + f.coeff_t * t);
                        }
                    }
                    if (v.real() < kSkipLogThreshold) continue;
                    const cplx e = std::exp(v);
                    row.total += e;
                    row.abs_sum += std::abs(e);
                    if (row_in_ring ||
                        std::size_t(std::abs(std::ptrdiff_t(j) - half)) >= ring_start) {
                        row.ring += e;
                    }
                }
            }
            rows[i] = row;
        }

        const Accum acc = reduce_rows(rows);
        if (tail_converged(acc, spec.target_rel_tol)) {
            return finalize(kernel, acc, log_scale, grid, contour, n * n,
                            spec.target_rel_tol, true);
        }
        if (4 * n * n > spec.max_nodes) {
            throw ConvergenceError("bivariate tail not converged within max_nodes");
        }
        grid.half_count *= 2;
    }
}

}  // namespace

EvalInfo fox_h_univariate_info(const MellinKernel& kernel, double x,
                               const QuadratureSpec& spec) {
    return eval_univariate(kernel, x, spec);
}

double fox_h_univariate(const MellinKernel& kernel, double x, const QuadratureSpec& spec) {
    return eval_univariate(kernel, x, spec).value;
}

double fox_h_univariate(const std::vector<GammaFactor>& factors, double x,
                        const QuadratureSpec& spec) {
    return fox_h_univariate(MellinKernel{factors, 1.0}, x, spec);
}

EvalInfo fox_h_bivariate_info(const MellinKernel& kernel, double x, double y,
                              const QuadratureSpec& spec) {
    return eval_bivariate(kernel, x, y, spec);
}

double fox_h_bivariate(const MellinKernel& kernel, double x, double y,
                       const QuadratureSpec& spec) {
    return eval_bivariate(kernel, x, y, spec).value;
}

// ---------------------------------------------------------------------------
// Reference evaluators: no precomputation, no parallelism, no node skipping.
// ---------------------------------------------------------------------------

namespace {

cplx reference_node(const MellinKernel& kernel, cplx s, cplx t, double log_x, double log_y) {
    cplx acc = s * log_x + t * log_y;
    for (const auto& f : kernel.factors) {
        acc += double(f.exponent_sign) *
               log_gamma_complex(f.constant + f.coeff_s * s + f.coeff_t * t);
    }
    return acc;
}

}  // namespace

double fox_h_univariate_reference(const MellinKernel& kernel, double x,
                                  const QuadratureSpec& spec) {
    if (!(x > 0.0)) throw DomainError("fox_h_univariate_reference: requires x > 0");
    const double log_x = std::log(x);
    const ContourChoice contour = select_contour_impl(kernel, spec, log_x, 0.0);
    const GridPlan grid = plan_grid(spec, contour, false);
    const auto half = std::ptrdiff_t(grid.half_count);

    double max_re = -kInf;
    std::vector<cplx> lg(grid.axis_nodes());
    for (std::ptrdiff_t i = -half; i <= half; ++i) {
        const cplx s(contour.abscissa_s, double(i) * grid.h);
        lg[std::size_t(i + half)] = reference_node(kernel, s, 0.0, log_x, 0.0);
        max_re = std::max(max_re, lg[std::size_t(i + half)].real());
    }
    cplx sum = 0.0;
    for (const auto& v : lg) sum += std::exp(v - max_re);
    const cplx raw = kernel.prefactor * std::exp(max_re) * sum * grid.h /
                     6.283185307179586477;
    return raw.real();
}

double fox_h_bivariate_reference(const MellinKernel& kernel, double x, double y,
                                 const QuadratureSpec& spec) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw DomainError("fox_h_bivariate_reference: requires x, y > 0");
    }
    const double log_x = std::log(x);
    const double log_y = std::log(y);
    const ContourChoice contour = select_contour_impl(kernel, spec, log_x, log_y);
    const GridPlan grid = plan_grid(spec, contour, true);
    const auto half = std::ptrdiff_t(grid.half_count);

    // Two passes: locate the maximum, then accumulate scaled exponentials.
    double max_re = -kInf;
    for (std::ptrdiff_t i = -half; i <= half; ++i) {
        for (std::ptrdiff_t j = -half; j <= half; ++j) {
            const cplx s(contour.abscissa_s, double(i) * grid.h);
            const cplx t(contour.abscissa_t, double(j) * grid.h);
            max_re = std::max(max_re, reference_node(kernel, s, t, log_x, log_y).real());
        }
    }
    cplx sum = 0.0;
    for (std::ptrdiff_t i = -half; i <= half; ++i) {
        for (std::ptrdiff_t j = -half; j <= half; ++j) {
            const cplx s(contour.abscissa_s, double(i) * grid.h);
            const cplx t(contour.abscissa_t, double(j) * grid.h);
            sum += std::exp(reference_node(kernel, s, t, log_x, log_y) - max_re);
        }
    }
    const double two_pi = 6.283185307179586477;
    const cplx raw = kernel.prefactor * std::exp(max_re) * sum * grid.h * grid.h /
                     (two_pi * two_pi);
    return raw.real();
}

// ---------------------------------------------------------------------------
// Standard-notation converters
// ---------------------------------------------------------------------------

MellinKernel kernel_from_fox_h(const FoxHParams& params) {
    const int p = int(params.upper.size());
    const int q = int(params.lower.size());
    if (params.m < 0 || params.m > q || params.n < 0 || params.n > p) {
        throw DomainError("fox_h: require 0 <= m <= q and 0 <= n <= p");
    }
    MellinKernel kernel;
    for (int j = 0; j < q; ++j) {
        const auto [b, B] = params.lower[std::size_t(j)];
        if (!(B > 0.0)) throw DomainError("fox_h: coefficients B_j must be positive");
        if (j < params.m) {
            kernel.factors.push_back({b, -B, 0.0, +1});
        } else {
            kernel.factors.push_back({1.0 - b, B, 0.0, -1});
        }
    }
    for (int j = 0; j < p; ++j) {
        const auto [a, A] = params.upper[std::size_t(j)];
        if (!(A > 0.0)) throw DomainError("fox_h: coefficients A_j must be positive");
        if (j < params.n) {
            kernel.factors.push_back({1.0 - a, A, 0.0, +1});
        } else {
            kernel.factors.push_back({a, -A, 0.0, -1});
        }
    }
    return kernel;
}

double fox_h(const FoxHParams& params, double x, const QuadratureSpec& spec) {
    return fox_h_univariate(kernel_from_fox_h(params), x, spec);
}

double meijer_g(int m, int n, const std::vector<double>& a, const std::vector<double>& b,
                double x, const QuadratureSpec& spec) {
    FoxHParams params;
    params.m = m;
    params.n = n;
    for (double v : a) params.upper.emplace_back(v, 1.0);
    for (double v : b) params.lower.emplace_back(v, 1.0);
    return fox_h(params, x, spec);
}

// ---------------------------------------------------------------------------
// JSON fixtures
// ---------------------------------------------------------------------------

std::string kernel_to_json(const MellinKernel& kernel) {
    nlohmann::json j;
    j["prefactor"] = kernel.prefactor;
    j["power_bases"] = {"s", "t"};
    j["factors"] = nlohmann::json::array();
    for (const auto& f : kernel.factors) {
        j["factors"].push_back({{"constant", f.constant},
                                {"coeff_s", f.coeff_s},
                                {"coeff_t", f.coeff_t},
                                {"sign", f.exponent_sign}});
    }
    return j.dump(2);
}

MellinKernel kernel_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    MellinKernel kernel;
    kernel.prefactor = j.at("prefactor").get<double>();
    if (j.contains("power_bases")) {
        const auto bases = j.at("power_bases");
        if (bases.size() != 2 || bases[0] != "s" || bases[1] != "t") {
            throw DomainError("kernel_from_json: power_bases must be [\"s\",\"t\"]");
        }
    }
    for (const auto& jf : j.at("factors")) {
        GammaFactor f;
        f.constant = jf.at("constant").get<double>();
        f.coeff_s = jf.at("coeff_s").get<double>();
        f.coeff_t = jf.at("coeff_t").get<double>();
        f.exponent_sign = jf.at("sign").get<int>();
        kernel.factors.push_back(f);
    }
    validate_kernel(kernel);
    return kernel;
}

}  // namespace uwoc::mb
