#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "rbhopf/lie.hpp"
#include "rbhopf/lincomb.hpp"
#include "rbhopf/pbw.hpp"

namespace rbhopf {

/// Which out-of-order adjacent pair a straightening step rewrites first. The
/// normal form is independent of the choice; keeping both lets tests confirm
/// confluence.
enum class Strategy { LeftmostSwap, RightmostSwap };

/// Universal enveloping algebra of a finite-dimensional Lie algebra, with the
/// PBW monomial basis e_1^{a_1}...e_n^{a_n} in the order of the input basis.
///
/// Multiplication concatenates exponent words and straightens: an adjacent
/// out-of-order pair e_j e_i (j > i) rewrites to e_i e_j + [e_j, e_i]. A swap
/// keeps the word length and lowers its inversion count; a bracket
/// replacement shortens the word, so rewriting terminates.
///
/// The coproduct is the algebra-map extension of Delta(e_i) = e_i(x)1 + 1(x)e_i,
/// evaluated on a monomial by the coordinate-wise binomial expansion
/// Delta(e^a) = sum_b prod_i C(a_i,b_i) e^b (x) e^(a-b); comul_via_generators
/// is the direct product-of-generator-coproducts route kept as a cross-check.
/// The antipode reverses the word with sign (-1)^degree and straightens.
class UniversalEnveloping {
 public:
  using Label = PbwMonomial;
  using Pair = std::array<Label, 2>;

  explicit UniversalEnveloping(LieAlgebra lie);

  const LieAlgebra& lie() const { return lie_; }
  int dim() const { return lie_.dim(); }

  Label unit_label() const { return Label{std::vector<std::uint32_t>(dim(), 0)}; }
  Label generator(int i) const;
  /// Lie element (combination of generators) as degree-1 monomials.
  LinComb<Label> embed(const LinComb<int>& lie_elt) const;

  LinComb<Label> normalize_word(std::span<const int> word,
                                Strategy strategy = Strategy::LeftmostSwap) const;

  /// Product of two basis monomials; memoized.
  const LinComb<Label>& mul(const Label& a, const Label& b) const;
  LinComb<Pair> comul(const Label& m) const;
  LinComb<Pair> comul_via_generators(const Label& m) const;
  Rational counit(const Label& m) const { return Rational(m.is_unit() ? 1 : 0); }
  LinComb<Label> antipode(const Label& m) const;

  std::vector<Label> basis_up_to(int degree) const;
  std::vector<Label> verification_sample(int degree) const { return basis_up_to(degree); }

  std::string label_string(const Label& m) const;

 private:
  void check_label(const Label& m) const;

  LieAlgebra lie_;
  mutable std::unordered_map<std::array<Label, 2>, LinComb<Label>, LabelHash<std::array<Label, 2>>>
      mul_cache_;
};

}  // namespace rbhopf
