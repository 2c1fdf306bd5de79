// Umbrella header.
#pragma once

#include "bwkit/bounds.hpp"
#include "bwkit/catalog.hpp"
#include "bwkit/errors.hpp"
#include "bwkit/factor.hpp"
#include "bwkit/metrics.hpp"
#include "bwkit/oracle.hpp"
#include "bwkit/product.hpp"
#include "bwkit/rational.hpp"
#include "bwkit/topology.hpp"
