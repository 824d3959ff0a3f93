#pragma once

#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rbhopf/group.hpp"
#include "rbhopf/lincomb.hpp"

namespace rbhopf {

/// Group algebra of a finite group: basis labels are element indices, the
/// product comes from the Cayley table, every basis element is group-like
/// (Delta(g) = g(x)g, counit 1), and the antipode inverts.
class GroupAlgebra {
 public:
  using Label = int;
  using Pair = std::array<int, 2>;

  explicit GroupAlgebra(FiniteGroup g) : g_(std::move(g)) {}

  const FiniteGroup& group() const { return g_; }
  Label unit_label() const { return g_.identity(); }

  LinComb<int> mul(int a, int b) const { return LinComb<int>::basis(g_.mul(a, b)); }
  LinComb<Pair> comul(int g) const {
    g_.name(g);  // bounds check
    return LinComb<Pair>::basis(Pair{g, g});
  }
  Rational counit(int g) const {
    g_.name(g);
    return Rational(1);
  }
  LinComb<int> antipode(int g) const { return LinComb<int>::basis(g_.inv(g)); }

  std::vector<int> basis() const {
    std::vector<int> out(static_cast<std::size_t>(g_.order()));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> verification_sample(int /*degree*/) const { return basis(); }

  std::string label_string(int g) const { return g_.name(g); }

 private:
  FiniteGroup g_;
};

}  // namespace rbhopf
