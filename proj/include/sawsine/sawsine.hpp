#pragma once

// Umbrella header: exact sawtooth-side constructions, certified sine-side
// numerics, and the LP cross-check machinery.

#include "sawsine/duality.hpp"
#include "sawsine/family.hpp"
#include "sawsine/fejer.hpp"
#include "sawsine/fracparts.hpp"
#include "sawsine/json_io.hpp"
#include "sawsine/measure.hpp"
#include "sawsine/parallel.hpp"
#include "sawsine/rational.hpp"
#include "sawsine/sawtooth.hpp"
#include "sawsine/simplex.hpp"
#include "sawsine/sine.hpp"
#include "sawsine/version.hpp"
