#pragma once

// Umbrella header: fuzzy step-set assessment of stepwise problem-solving
// cohorts — membership bands, profile lattices, possibilities, normalized
// diversity index, cross-group combination, ingestion and reporting.

#include "stepfuzz/combine.hpp"
#include "stepfuzz/error.hpp"
#include "stepfuzz/fixtures.hpp"
#include "stepfuzz/ingest.hpp"
#include "stepfuzz/label_scale.hpp"
#include "stepfuzz/lattice.hpp"
#include "stepfuzz/membership.hpp"
#include "stepfuzz/rational.hpp"
#include "stepfuzz/report.hpp"
#include "stepfuzz/simulate.hpp"
#include "stepfuzz/table.hpp"
