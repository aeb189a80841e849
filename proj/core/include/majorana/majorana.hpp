#pragma once

#include "majorana/constellation.hpp"
#include "majorana/geomeasure.hpp"
#include "majorana/json_io.hpp"
#include "majorana/marginals.hpp"
#include "majorana/optimize.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/reconstruct.hpp"
#include "majorana/slocc.hpp"
#include "majorana/state.hpp"
#include "majorana/types.hpp"
