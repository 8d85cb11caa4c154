#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symcap {

using Weight = std::uint32_t;

/// A distribution of k indistinguishable pebbles over the n vertices of a
/// graph: a vertex of the symmetric power G[k].
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Weight> weights);

  /// All k pebbles on vertex v.
  static Configuration point_mass(std::size_t n, std::size_t v, Weight k);

  std::size_t size() const { return weights_.size(); }
  Weight total() const { return total_; }
  Weight operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Weight>& weights() const { return weights_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Weight> weights_;
  Weight total_ = 0;
};

/// Default cap on materialized enumerations.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// All weak compositions of k into n parts in canonical order: lexicographically
/// decreasing, so (k,0,...,0) comes first and (0,...,0,k) last.
/// Throws CapExceeded when the count exceeds `cap`.
std::vector<Configuration> enumerate_configurations(std::size_t n, Weight k,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Position of c in the canonical order of its (n, k) class.
std::uint64_t rank(const Configuration& c);

/// Inverse of rank. Throws InvalidArgument when r >= C(k+n-1, n-1).
Configuration unrank(std::size_t n, Weight k, std::uint64_t r);

/// Advances c to its successor in canonical order; returns false (leaving c
/// unchanged) if c is the last configuration.
bool next_configuration(std::vector<Weight>& c);

/// "2,0,0,0,0" form used on the command line and in result files.
std::string to_string(const Configuration& c);
Configuration parse_configuration(std::string_view text);

}  // namespace symcap
