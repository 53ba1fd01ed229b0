#pragma once

// Umbrella header for the full library: exact feasibility checks for sums of
// Hermitian operators, products of unitary operators, and products with
// prescribed singular spectra, plus the sampling oracles that cross-validate
// them numerically.

#include "eigencone/eig.hpp"
#include "eigencone/horn.hpp"
#include "eigencone/lr.hpp"
#include "eigencone/matrix.hpp"
#include "eigencone/oracle.hpp"
#include "eigencone/partition.hpp"
#include "eigencone/quantum.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/sampling.hpp"
#include "eigencone/serialization.hpp"
#include "eigencone/spectrum.hpp"
#include "eigencone/version.hpp"
