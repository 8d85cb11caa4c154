#pragma once

#include <cstdint>
#include <string>

namespace symcap {

/// Unsigned 128-bit count used for closed-form bounds, which outgrow 64 bits
/// long before anything can be enumerated.
using Count = unsigned __int128;

/// C(n, r) in exact arithmetic. Returns 0 when r > n. Throws Overflow when the
/// value does not fit in 128 bits.
Count binomial(std::uint64_t n, std::uint64_t r);

/// C(n, r) narrowed to 64 bits; throws Overflow if it does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r);

/// Number of weak compositions of k into n parts, C(k+n-1, n-1). n must be >= 1.
Count composition_count(std::uint64_t n, std::uint64_t k);

std::string to_string(Count value);

}  // namespace symcap
