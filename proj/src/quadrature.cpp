#include "hrg/quadrature.hpp"

#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace hrg {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 14, rel_tol);
}

double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, rel_tol);
}

double integrate_upper(const std::function<double(double)>& f, double a,
                       double rel_tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, a, std::numeric_limits<double>::infinity(),
                              rel_tol);
}

}  // namespace hrg
