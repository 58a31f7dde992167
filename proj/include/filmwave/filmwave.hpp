#pragma once

// Transmission, reflection and absorption of an electromagnetic p-wave by a
// thin metal film, with size- and specularity-dependent film conductivity.

#include "filmwave/config.hpp"
#include "filmwave/conductivity.hpp"
#include "filmwave/constants.hpp"
#include "filmwave/emit.hpp"
#include "filmwave/errors.hpp"
#include "filmwave/film_response.hpp"
#include "filmwave/format.hpp"
#include "filmwave/quadrature.hpp"
#include "filmwave/sweep.hpp"
#include "filmwave/types.hpp"
#include "filmwave/version.hpp"
