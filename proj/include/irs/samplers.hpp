#pragma once

#include "irs/samplers/base_spec.hpp"
#include "irs/samplers/enumerate.hpp"
#include "irs/samplers/mark_law.hpp"
#include "irs/samplers/normalizer.hpp"
#include "irs/samplers/poulsen.hpp"
#include "irs/samplers/sampler.hpp"
#include "irs/samplers/surgery.hpp"
