#pragma once

// Optimal hyperball packing densities of the 5-dimensional hyperbolic
// regular prism tilings over the compact orthoschemes [5,3,3,3,3] and
// [5,3,3,3,4].

#include <hypack/coxeter.hpp>
#include <hypack/hyperball.hpp>
#include <hypack/linalg.hpp>
#include <hypack/lorentz.hpp>
#include <hypack/quadrature.hpp>
#include <hypack/specfun.hpp>
#include <hypack/volume.hpp>
