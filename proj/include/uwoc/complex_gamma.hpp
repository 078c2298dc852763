#ifndef UWOC_COMPLEX_GAMMA_HPP
#define UWOC_COMPLEX_GAMMA_HPP

#include <complex>

namespace uwoc {

/// Principal-branch log Gamma. Real on the positive real axis, analytic on
/// the plane cut along (-inf, 0]; on the cut itself the limit from above is
/// returned. Relative accuracy is ~1e-13 for |z| <= 1e3.
///
/// Throws DomainError when z is within 1e-12 of a non-positive integer.
std::complex<double> log_gamma_complex(std::complex<double> z);

/// True when z lies within `eps` of a pole of Gamma (a non-positive integer).
bool near_gamma_pole(std::complex<double> z, double eps = 1e-12);
bool near_gamma_pole(double x, double eps = 1e-12);

/// Regularized incomplete gamma functions,
///   P(a,x) = gamma(a,x)/Gamma(a),  Q(a,x) = Gamma(a,x)/Gamma(a) = 1 - P(a,x).
/// a > 0, x >= 0. Accuracy ~1e-14.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Unregularized upper incomplete gamma Gamma(a,x) = Q(a,x) * Gamma(a).
double upper_incomplete_gamma(double a, double x);

}  // namespace uwoc

#endif
