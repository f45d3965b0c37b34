#pragma once

#include <random>

#include "plcube/geometry.h"
#include "plcube/orders.h"
#include "plcube/plmap.h"

namespace plcube {

using Rng = std::mt19937_64;

// Point of the open square with coordinates k / 2^bits.
RatPoint random_dyadic_point(Rng& rng, int bits = 20);

// pl1d through 1-4 random interior nodes on a 1/64 grid. Some of them are the
// identity near -1.
PLMap random_1d_map(Rng& rng);

// One of: twist power, twist in a random box, suspension, linear germ at 0,
// Alexander rescaling, embedded shear; sometimes inverted.
PLMap random_2d_map(Rng& rng);

Ray random_ray(Rng& rng, int bound = 9);
RatMatrix random_glplus(Rng& rng, int bound);

}  // namespace plcube
