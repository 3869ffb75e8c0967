#pragma once

// Umbrella header.

#include "hdepth/binomial.hpp"
#include "hdepth/bipartite.hpp"
#include "hdepth/conjecture.hpp"
#include "hdepth/guarded_floor.hpp"
#include "hdepth/integer.hpp"
#include "hdepth/parallel.hpp"
#include "hdepth/report_io.hpp"
#include "hdepth/sqfree.hpp"
#include "hdepth/verifier.hpp"
