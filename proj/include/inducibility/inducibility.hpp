#pragma once

// Umbrella header: pulls in the whole library.

#include "inducibility/combinatorics.hpp"
#include "inducibility/density.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/graph.hpp"
#include "inducibility/optimize.hpp"
#include "inducibility/oracle.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"
#include "inducibility/symmetrize.hpp"
#include "inducibility/turan.hpp"
