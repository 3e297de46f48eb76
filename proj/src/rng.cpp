// Copyright (c) 2026 The rpf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rpf/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace rpf {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = base;
  for (std::uint64_t v : labels) {
    h = mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
  }
  return h;
}

std::uint64_t Rng64::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double Rng64::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng64::next_symmetric(double h) { return h * (2.0 * next_unit() - 1.0); }

std::uint64_t Rng64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng64::next_below: bound must be >= 1");
  // 2^64 mod bound; draws below it are rejected so the survivors cover a
  // whole number of residue classes.
  const std::uint64_t threshold = (-bound) % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x < threshold);
  return x % bound;
}

std::vector<std::uint32_t> Rng64::permutation(std::uint32_t count) {
  std::vector<std::uint32_t> p(count);
  std::iota(p.begin(), p.end(), 0u);
  for (std::uint32_t i = count; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(next_below(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

bool Rng64::next_coin() { return (next_u64() >> 63) != 0; }

}  // namespace rpf
