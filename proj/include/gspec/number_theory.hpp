#pragma once

#include <cstdint>
#include <vector>

namespace gspec {

/// Möbius function μ(n) for n ≥ 1.
int mobius(std::uint64_t n);

/// Euler's totient φ(n) for n ≥ 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace gspec
