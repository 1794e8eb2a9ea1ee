#pragma once

// Umbrella header for the pcore library: partitions with no hook length or
// part divisible by p, their abacus parameterisations, the walk solver for
// the largest such partition, closed-form bounds, and the exhaustive oracle.

#include "pcore/abacus.hpp"
#include "pcore/bounds.hpp"
#include "pcore/errors.hpp"
#include "pcore/int128.hpp"
#include "pcore/oracle.hpp"
#include "pcore/partition.hpp"
#include "pcore/report.hpp"
#include "pcore/verify.hpp"
#include "pcore/walk.hpp"
