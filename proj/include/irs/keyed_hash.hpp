#pragma once

// Keyed randomness. Every "independent" random variable of a construction is a
// pure function of (seed, namespace, vertex token), computed with SipHash-2-4
// in its 128-bit output variant. Revisiting a vertex reproduces its value, and
// the bytes hashed are platform independent.

#include <array>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

#include <sodium.h>

#include "irs/rational.hpp"

namespace irs {

struct SeededKey {
  std::uint64_t seed = 0;
  std::string_view name_space;
  std::string_view vertex;
};

namespace detail {

inline void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium failed to initialise");
  });
}

}  // namespace detail

inline std::array<std::uint64_t, 2> keyed_hash128(const SeededKey& key) {
  static_assert(crypto_shorthash_siphashx24_KEYBYTES == 16);
  static_assert(crypto_shorthash_siphashx24_BYTES == 16);
  detail::ensure_sodium();
  unsigned char k[16] = {};
  for (int i = 0; i < 8; ++i) k[i] = static_cast<unsigned char>(key.seed >> (8 * i));
  std::string msg;
  msg.reserve(key.name_space.size() + key.vertex.size() + 1);
  msg.append(key.name_space);
  msg.push_back('\x1f');
  msg.append(key.vertex);
  unsigned char out[16];
  crypto_shorthash_siphashx24(out, reinterpret_cast<const unsigned char*>(msg.data()), msg.size(), k);
  std::array<std::uint64_t, 2> h{0, 0};
  for (int i = 0; i < 8; ++i) {
    h[0] |= static_cast<std::uint64_t>(out[i]) << (8 * i);
    h[1] |= static_cast<std::uint64_t>(out[8 + i]) << (8 * i);
  }
  return h;
}

inline std::uint64_t keyed_u64(std::uint64_t seed, std::string_view name_space, std::string_view vertex) {
  return keyed_hash128({seed, name_space, vertex})[0];
}

// Sub-seed for a named child stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name_space, std::string_view token) {
  return keyed_hash128({seed, name_space, token})[1];
}

// Maps a uniform 64-bit value to a uniform integer in [0, den).
inline std::uint64_t scale_to(std::uint64_t h, std::uint64_t den) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * den) >> 64);
}

inline bool keyed_bernoulli(std::uint64_t h, SmallFraction p) { return scale_to(h, p.den) < p.num; }

// Picks an index with probability weights[i]/sum(weights).
inline std::size_t keyed_choice(std::uint64_t h, std::span<const std::uint64_t> weights) {
  std::uint64_t total = 0;
  for (auto w : weights) total += w;
  std::uint64_t t = scale_to(h, total);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (t < weights[i]) return i;
    t -= weights[i];
  }
  return weights.size() - 1;
}

}  // namespace irs
