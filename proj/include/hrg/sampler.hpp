#pragma once
#include <vector>

#include "hrg/geometry.hpp"
#include "hrg/params.hpp"
#include "hrg/rng.hpp"

namespace hrg {

// P(radius <= r) = (cosh(alpha r) - 1)/(cosh(alpha R) - 1); domain [0, R]
double radial_cdf(double r, const model_params& p);

// inverse of radial_cdf for u in [0, 1)
double sample_radius(double u, const model_params& p);

// n i.i.d. positions: radius by inverse transform, angle uniform on (0, 2pi].
// Vertex i draws only from the counter stream keyed by (seed, stream, i), so
// the result is bitwise identical for any worker count.
std::vector<vertex_position> sample_positions(const model_params& p, sample_seed seed);

}  // namespace hrg
