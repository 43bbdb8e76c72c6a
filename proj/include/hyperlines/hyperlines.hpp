#pragma once

#include "hyperlines/canonical.hpp"
#include "hyperlines/certificate.hpp"
#include "hyperlines/error.hpp"
#include "hyperlines/exact.hpp"
#include "hyperlines/generators.hpp"
#include "hyperlines/hypergraph.hpp"
#include "hyperlines/index_set.hpp"
#include "hyperlines/io.hpp"
#include "hyperlines/lines.hpp"
#include "hyperlines/metric.hpp"
#include "hyperlines/proofkit.hpp"
#include "hyperlines/reference.hpp"
#include "hyperlines/search.hpp"
#include "hyperlines/tail_bound.hpp"
