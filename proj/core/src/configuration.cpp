#include "symcap/configuration.hpp"

#include <charconv>
#include <numeric>

#include "symcap/binomial.hpp"
#include "symcap/error.hpp"

namespace symcap {

Configuration::Configuration(std::vector<Weight> weights) : weights_(std::move(weights)) {
  std::uint64_t sum = 0;
  for (Weight w : weights_) sum += w;
  if (sum > UINT32_MAX) throw InvalidArgument("configuration weight exceeds 32 bits");
  total_ = static_cast<Weight>(sum);
}

Configuration Configuration::point_mass(std::size_t n, std::size_t v, Weight k) {
  if (v >= n) throw InvalidArgument("point_mass: vertex out of range");
  std::vector<Weight> w(n, 0);
  w[v] = k;
  return Configuration(std::move(w));
}

bool next_configuration(std::vector<Weight>& c) {
  const std::size_t n = c.size();
  if (n < 2) return false;
  // Rightmost position i < n-1 with a pebble; move one pebble right and
  // gather the whole tail at i+1.
  std::size_t i = n - 1;
  while (i-- > 0)
    if (c[i] != 0) break;
  if (i == static_cast<std::size_t>(-1) || c[i] == 0) return false;
  Weight tail = 0;
  for (std::size_t j = i + 1; j < n; ++j) {
    tail += c[j];
    c[j] = 0;
  }
  --c[i];
  c[i + 1] = tail + 1;
  return true;
}

std::vector<Configuration> enumerate_configurations(std::size_t n, Weight k, std::uint64_t cap) {
  if (n == 0) throw InvalidArgument("enumerate_configurations: n must be >= 1");
  const Count count = composition_count(n, k);
  if (count > cap)
    throw CapExceeded("enumeration of " + to_string(count) + " configurations exceeds cap " +
                      std::to_string(cap));
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Weight> c(n, 0);
  c[0] = k;
  do {
    out.emplace_back(c);
  } while (next_configuration(c));
  return out;
}

// Configurations preceding c are those that agree on a prefix and then carry
// more weight at the first differing position. With r pebbles left for the
// m+1 remaining positions, the ones putting more than w on the current
// position number sum_{w'>w} C(r-w'+m-1, m-1) = C(r-w-1+m, m).
std::uint64_t rank(const Configuration& c) {
  const std::size_t n = c.size();
  if (n == 0) throw InvalidArgument("rank: empty configuration");
  std::uint64_t r = 0;
  std::uint64_t left = c.total();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t w = c[i];
    const std::uint64_t m = n - i - 1;
    if (left > w) r += binomial_u64(left - w - 1 + m, m);
    left -= w;
  }
  return r;
}

Configuration unrank(std::size_t n, Weight k, std::uint64_t r) {
  if (n == 0) throw InvalidArgument("unrank: n must be >= 1");
  const Count count = composition_count(n, k);
  if (r >= count)
    throw InvalidArgument("unrank: rank " + std::to_string(r) + " out of range (" +
                          to_string(count) + " configurations)");
  std::vector<Weight> w(n, 0);
  std::uint64_t left = k;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t m = n - i - 1;
    // Blocks in decreasing order of weight at position i; block w has
    // C(left-w+m-1, m-1) members.
    std::uint64_t take = left;
    while (true) {
      const std::uint64_t block = binomial_u64(left - take + m - 1, m - 1);
      if (r < block) break;
      r -= block;
      --take;
    }
    w[i] = static_cast<Weight>(take);
    left -= take;
  }
  w[n - 1] = static_cast<Weight>(left);
  return Configuration(std::move(w));
}

std::string to_string(const Configuration& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) s.push_back(',');
    s += std::to_string(c[i]);
  }
  return s;
}

Configuration parse_configuration(std::string_view text) {
  std::vector<Weight> w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    Weight value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("malformed configuration '" + std::string(text) + "'");
    w.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Configuration(std::move(w));
}

}  // namespace symcap
