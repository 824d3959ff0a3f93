#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rbhopf/lincomb.hpp"

namespace rbhopf {

/// Exponent vector over the ordered basis of a Lie algebra; the basis of the
/// universal enveloping algebra. The unit is the all-zero vector.
struct PbwMonomial {
  std::vector<std::uint32_t> exps;

  int degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0,
                           [](int s, std::uint32_t e) { return s + static_cast<int>(e); });
  }
  bool is_unit() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }

  /// The monomial expanded as a sorted word of generator indices.
  std::vector<int> word() const {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(degree()));
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::uint32_t k = 0; k < exps[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
  }

  bool operator==(const PbwMonomial&) const = default;
};

/// Graded order: by total degree, then lexicographically on exponents.
inline bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps < b.exps;
}

template <>
struct LabelHash<PbwMonomial> {
  std::size_t operator()(const PbwMonomial& m) const {
    std::size_t seed = m.exps.size();
    for (auto e : m.exps) hash_mix(seed, static_cast<std::size_t>(e));
    return seed;
  }
};

}  // namespace rbhopf
