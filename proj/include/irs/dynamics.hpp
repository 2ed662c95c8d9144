#pragma once

#include "irs/dynamics/action.hpp"
#include "irs/dynamics/dynamics.hpp"
