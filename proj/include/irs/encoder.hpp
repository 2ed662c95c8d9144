#pragma once

#include "irs/encoder/encoding.hpp"
#include "irs/encoder/psi.hpp"
#include "irs/encoder/subshift.hpp"
