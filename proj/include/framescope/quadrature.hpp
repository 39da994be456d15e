#pragma once

#include <complex>
#include <functional>

namespace framescope::quad {

using Integrand = std::function<std::complex<double>(double)>;

/// Adaptive 31-point Gauss–Kronrod on [a, b]; the error target is tol·∫|f|.
std::complex<double> integrate(const Integrand& f, double a, double b, double tol = 1e-13);

/// ∫_0^{1/2} f over dyadic panels graded toward 0, each panel split so that
/// it carries at most half an oscillation of e^{2πi·frequency·u}. Suited to
/// an integrable singularity at u = 0; `abs_tol` bounds the total error.
std::complex<double> integrate_graded(const Integrand& f, double frequency, double abs_tol, int levels = 100);

}  // namespace framescope::quad
