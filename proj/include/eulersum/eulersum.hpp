#pragma once

// Umbrella header for the whole library.

#include "eulersum/big_rational.hpp"
#include "eulersum/euler_sums.hpp"
#include "eulersum/monte_carlo.hpp"
#include "eulersum/pi_poly.hpp"
#include "eulersum/polytope.hpp"
#include "eulersum/report.hpp"
#include "eulersum/special_numbers.hpp"
#include "eulersum/spectral.hpp"
#include "eulersum/symmetric_eigen.hpp"
#include "eulersum/verify.hpp"
