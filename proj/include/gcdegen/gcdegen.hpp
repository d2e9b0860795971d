#pragma once

#include "gcdegen/error.hpp"
#include "gcdegen/permutation.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/polynomial.hpp"
#include "gcdegen/polyalg.hpp"
#include "gcdegen/sagbi.hpp"
#include "gcdegen/gcpattern.hpp"
#include "gcdegen/ideals.hpp"
#include "gcdegen/groebner_check.hpp"
#include "gcdegen/parallel.hpp"
#include "gcdegen/verify.hpp"
