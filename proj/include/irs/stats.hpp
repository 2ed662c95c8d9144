#pragma once

#include "irs/stats/stats.hpp"
#include "irs/stats/table.hpp"
