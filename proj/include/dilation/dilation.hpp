#pragma once

#include "dilation/apsp.hpp"
#include "dilation/bench.hpp"
#include "dilation/bottleneck.hpp"
#include "dilation/constructions.hpp"
#include "dilation/greedy.hpp"
#include "dilation/metric.hpp"
#include "dilation/oracle.hpp"
#include "dilation/search.hpp"
#include "dilation/select.hpp"
