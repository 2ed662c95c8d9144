#pragma once

#include <cstdint>
#include <functional>

#include "irs/oracle.hpp"

namespace irs {

// A random Schreier graph: a deterministic map from seeds to oracles.
using OracleSampler = std::function<OraclePtr(std::uint64_t seed)>;

inline OracleSampler constant_sampler(OraclePtr o) {
  return [o = std::move(o)](std::uint64_t) { return o; };
}

}  // namespace irs
