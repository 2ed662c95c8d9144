#pragma once

#include "irs/atomic_measure.hpp"
#include "irs/ball.hpp"
#include "irs/errors.hpp"
#include "irs/finite_graph.hpp"
#include "irs/graph_law.hpp"
#include "irs/keyed_hash.hpp"
#include "irs/oracle.hpp"
#include "irs/rational.hpp"
#include "irs/sgr.hpp"
#include "irs/subgroup.hpp"
#include "irs/word.hpp"
