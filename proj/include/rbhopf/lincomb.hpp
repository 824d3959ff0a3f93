#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rbhopf/rational.hpp"

namespace rbhopf {

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename L>
struct LabelHash {
  std::size_t operator()(const L& l) const { return std::hash<L>{}(l); }
};

template <typename L, std::size_t N>
struct LabelHash<std::array<L, N>> {
  std::size_t operator()(const std::array<L, N>& a) const {
    std::size_t seed = N;
    LabelHash<L> h;
    for (const auto& x : a) hash_mix(seed, h(x));
    return seed;
  }
};

/// Finite formal linear combination of basis labels with rational
/// coefficients. Labels are hashable canonical forms: a PBW monomial, a
/// group-element index, or a flattened tuple of those for tensor factors.
/// Zero coefficients are never stored, so term-wise equality of the maps is
/// equality of elements.
template <typename L>
class LinComb {
 public:
  using Label = L;
  using TermMap = std::unordered_map<L, Rational, LabelHash<L>>;

  LinComb() = default;

  static LinComb basis(const L& label, const Rational& c = Rational(1)) {
    LinComb v;
    v.add_term(label, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const& { return terms_; }
  // Rvalue overload returns the map itself so iterating the terms of a
  // temporary (mul(...).terms() and friends) never dangles.
  TermMap terms() && { return std::move(terms_); }

  Rational coeff(const L& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const L& l, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
      terms_.emplace(l, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const LinComb& o, const Rational& c) {
    if (c.is_zero()) return;
    if (this == &o) {
      LinComb copy(o);
      add_scaled(copy, c);
      return;
    }
    for (const auto& [l, oc] : o.terms_) add_term(l, oc * c);
  }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [l, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  LinComb operator-() const {
    LinComb v(*this);
    return v *= Rational(-1);
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  /// Terms in increasing label order; the deterministic iteration used by
  /// serialization and reports.
  std::vector<std::pair<L, Rational>> sorted_terms() const {
    std::vector<std::pair<L, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  TermMap terms_;
};

/// Tensor product with flattened tuple labels: pairs stay pairs, a pair
/// tensored with an atom gives a triple (never nested pairs).
template <typename L>
LinComb<std::array<L, 2>> tensor(const LinComb<L>& a, const LinComb<L>& b) {
  LinComb<std::array<L, 2>> out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      out.add_term(std::array<L, 2>{la, lb}, ca * cb);
  return out;
}

template <typename L>
LinComb<std::array<L, 3>> tensor(const LinComb<std::array<L, 2>>& a, const LinComb<L>& b) {
  LinComb<std::array<L, 3>> out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      out.add_term(std::array<L, 3>{la[0], la[1], lb}, ca * cb);
  return out;
}

template <typename L>
LinComb<std::array<L, 3>> tensor(const LinComb<L>& a, const LinComb<std::array<L, 2>>& b) {
  LinComb<std::array<L, 3>> out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      out.add_term(std::array<L, 3>{la, lb[0], lb[1]}, ca * cb);
  return out;
}

/// Linear extension of a map on basis labels, f : L -> LinComb<M>.
template <typename L, typename F>
auto lift(const LinComb<L>& v, F&& f) {
  using Out = std::decay_t<std::invoke_result_t<F, const L&>>;
  Out acc;
  for (const auto& [l, c] : v.terms()) acc.add_scaled(f(l), c);
  return acc;
}

}  // namespace rbhopf
