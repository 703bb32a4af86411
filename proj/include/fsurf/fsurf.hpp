#ifndef FSURF_FSURF_HPP
#define FSURF_FSURF_HPP

#include "fsurf/errors.hpp"
#include "fsurf/fourier_surface.hpp"
#include "fsurf/dynamics.hpp"
#include "fsurf/quadrature.hpp"
#include "fsurf/cost_gradient.hpp"
#include "fsurf/optimizer.hpp"
#include "fsurf/oracles.hpp"
#include "fsurf/io.hpp"
#include "fsurf/experiment.hpp"

#endif  // FSURF_FSURF_HPP
