#pragma once

// Umbrella header for the whole core library.
#include "ceresa/cyclotomic.hpp"
#include "ceresa/elliptic.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/json_io.hpp"
#include "ceresa/picard.hpp"
#include "ceresa/quartic.hpp"
#include "ceresa/rat.hpp"
#include "ceresa/repcrit.hpp"
#include "ceresa/scan.hpp"
#include "ceresa/strata.hpp"
#include "ceresa/upoly.hpp"
