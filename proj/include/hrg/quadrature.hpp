#pragma once
#include <functional>

namespace hrg {

// adaptive Gauss-Kronrod on [a, b], relative termination
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-11);

// tanh-sinh on [a, b]; robust to integrable endpoint singularities
double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-11);

// [a, infinity) with exponentially decaying integrand
double integrate_upper(const std::function<double(double)>& f, double a,
                       double rel_tol = 1e-11);

}  // namespace hrg
