#pragma once

#include "siprox/dense_vector.hpp"
#include "siprox/errors.hpp"
#include "siprox/objective.hpp"
#include "siprox/projection.hpp"
#include "siprox/prox_h1.hpp"
#include "siprox/prox_h2.hpp"
#include "siprox/prox_l0.hpp"
#include "siprox/prox_set.hpp"
#include "siprox/signed_permutation.hpp"
#include "siprox/tolerances.hpp"
#include "siprox/wrd.hpp"
