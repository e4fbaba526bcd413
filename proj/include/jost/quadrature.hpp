#ifndef JOST_QUADRATURE_HPP
#define JOST_QUADRATURE_HPP

#include <functional>

namespace jost {

// Composite trapezoid rule for integral_0^pi f(theta) dtheta with n panels.
// Spectrally accurate for integrands that extend to smooth even 2*pi-periodic
// functions, which covers every boundary integral in this library.
double unit_circle_quadrature(const std::function<double(double)>& f, int n);

}  // namespace jost

#endif  // JOST_QUADRATURE_HPP
