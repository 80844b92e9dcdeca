#pragma once

// Umbrella header: the whole library.

#include "lmss/atlas.hpp"
#include "lmss/canonical.hpp"
#include "lmss/duality.hpp"
#include "lmss/error.hpp"
#include "lmss/fixtures.hpp"
#include "lmss/formats.hpp"
#include "lmss/graph.hpp"
#include "lmss/kec.hpp"
#include "lmss/matching.hpp"
#include "lmss/report.hpp"
#include "lmss/sets.hpp"
#include "lmss/stability.hpp"
