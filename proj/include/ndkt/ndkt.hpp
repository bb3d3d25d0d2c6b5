#pragma once

#include "ndkt/corpus.hpp"
#include "ndkt/error.hpp"
#include "ndkt/feasibility.hpp"
#include "ndkt/lattice.hpp"
#include "ndkt/magic.hpp"
#include "ndkt/search.hpp"
#include "ndkt/tour.hpp"
#include "ndkt/tour_file.hpp"
