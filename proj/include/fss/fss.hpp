#pragma once

#include "fss/config.hpp"
#include "fss/error.hpp"
#include "fss/ingest.hpp"
#include "fss/membership.hpp"
#include "fss/pipeline.hpp"
#include "fss/reduction.hpp"
#include "fss/reference_tables.hpp"
#include "fss/scoring.hpp"
#include "fss/softset.hpp"
#include "fss/variables.hpp"
#include "fss/verify.hpp"
