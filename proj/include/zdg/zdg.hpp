#pragma once

#include "zdg/applications.hpp"
#include "zdg/bitset.hpp"
#include "zdg/blowup.hpp"
#include "zdg/error.hpp"
#include "zdg/graph.hpp"
#include "zdg/lattice.hpp"
#include "zdg/lattice_io.hpp"
#include "zdg/solvers.hpp"
#include "zdg/strong_resolving.hpp"
#include "zdg/verify.hpp"
#include "zdg/zerodiv.hpp"
