#pragma once

// Umbrella header for the partition-scheme laboratory.

#include "qslab/bench.hpp"
#include "qslab/counters.hpp"
#include "qslab/oracle.hpp"
#include "qslab/partition.hpp"
#include "qslab/pivot.hpp"
#include "qslab/quicksort.hpp"
#include "qslab/rng.hpp"
#include "qslab/scheme.hpp"
#include "qslab/span.hpp"
#include "qslab/workload.hpp"
