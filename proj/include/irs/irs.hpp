#pragma once

#include "irs/core.hpp"
#include "irs/dynamics.hpp"
#include "irs/encoder.hpp"
#include "irs/rng.hpp"
#include "irs/samplers.hpp"
#include "irs/stats.hpp"
