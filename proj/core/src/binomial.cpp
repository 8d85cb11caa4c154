#include "symcap/binomial.hpp"

#include <algorithm>
#include <limits>

#include "symcap/error.hpp"

namespace symcap {

namespace {

// std::gcd rejects __int128 in strict mode.
Count gcd(Count a, Count b) {
  while (b != 0) {
    const Count t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Count binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  Count result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i is exact; cancel the gcd first so the
    // intermediate product stays as small as the final value allows.
    Count factor = n - r + i;
    Count divisor = i;
    const Count g = gcd(result, divisor);
    result /= g;
    divisor /= g;
    factor /= divisor;
    if (factor != 0 && result > std::numeric_limits<Count>::max() / factor)
      throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                     ") exceeds 128 bits");
    result *= factor;
  }
  return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  const Count c = binomial(n, r);
  if (c > std::numeric_limits<std::uint64_t>::max())
    throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") exceeds 64 bits");
  return static_cast<std::uint64_t>(c);
}

Count composition_count(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw InvalidArgument("composition_count: n must be >= 1");
  return binomial(k + n - 1, n - 1);
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace symcap
