#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "rbhopf/enveloping.hpp"
#include "rbhopf/group_algebra.hpp"
#include "rbhopf/hopf.hpp"

namespace rbhopf {

enum class Provenance {
  ExtendedFromLie,
  ExtendedFromGroup,
  Tilde,
  Split,
  Antipode,
  Custom,
};

std::string_view provenance_name(Provenance p);

/// A coalgebra map B on a Hopf algebra, represented by its action on basis
/// labels and extended linearly. Evaluations are memoized per label, so
/// recursively defined actions stay cheap; the cache behaves as a pure
/// function of the label. Operators are cheap to copy and share their cache.
/// Hopf-level operators here satisfy the weight-one identity
/// B(x)B(y) = B( x_(1) B(x_(2)) y S(B(x_(3))) ); there is no weight
/// parameter at this level.
template <typename L>
class RBOperator {
 public:
  using Action = std::function<LinComb<L>(const L&)>;

  RBOperator() = default;
  RBOperator(Action action, Provenance prov)
      : state_(std::make_shared<State>(State{std::move(action), prov, {}})) {}

  const LinComb<L>& apply(const L& label) const {
    auto it = state_->cache.find(label);
    if (it != state_->cache.end()) return it->second;
    auto [ins, _] = state_->cache.emplace(label, state_->action(label));
    return ins->second;
  }

  LinComb<L> apply(const LinComb<L>& v) const {
    LinComb<L> acc;
    for (const auto& [l, c] : v.terms()) acc.add_scaled(apply(l), c);
    return acc;
  }

  Provenance provenance() const { return state_->prov; }

 private:
  struct State {
    Action action;
    Provenance prov;
    mutable std::unordered_map<L, LinComb<L>, LabelHash<L>> cache;
  };
  std::shared_ptr<State> state_;
};

/// x_(1) B(x_(2)) y S(B(x_(3))), the inner expression of the defining
/// identity and the star product of the descendent algebra.
template <HopfInstance H>
LinComb<LabelOf<H>> star(const H& h, const RBOperator<LabelOf<H>>& b,
                         const LinComb<LabelOf<H>>& x, const LinComb<LabelOf<H>>& y) {
  using L = LabelOf<H>;
  LinComb<L> acc;
  for (const auto& [lx, cx] : x.terms()) {
    for (const auto& [t, c] : comul3_label(h, lx).terms()) {
      LinComb<L> term = mul(h, LinComb<L>::basis(t[0]), b.apply(t[1]));
      term = mul(h, term, y);
      term = mul(h, term, antipode(h, b.apply(t[2])));
      acc.add_scaled(term, c * cx);
    }
  }
  return acc;
}

/// B(x)B(y) = B( x_(1) B(x_(2)) y S(B(x_(3))) ) on all sample pairs.
template <HopfInstance H>
Report check_rb_hopf(const H& h, const RBOperator<LabelOf<H>>& b,
                     const std::vector<LabelOf<H>>& sample) {
  using L = LabelOf<H>;
  Report rep{"rb-hopf", {}};
  for (const L& x : sample)
    for (const L& y : sample) {
      LinComb<L> lhs = mul(h, b.apply(x), b.apply(y));
      LinComb<L> rhs = b.apply(star(h, b, LinComb<L>::basis(x), LinComb<L>::basis(y)));
      if (lhs != rhs)
        rep.violations.push_back(
            {{h.label_string(x), h.label_string(y)}, render(h, lhs), render(h, rhs)});
    }
  return rep;
}

/// Delta(B(m)) = (B(x)B)(Delta(m)) and counit(B(m)) = counit(m) on the sample.
template <HopfInstance H>
Report check_coalgebra_map(const H& h, const RBOperator<LabelOf<H>>& b,
                           const std::vector<LabelOf<H>>& sample) {
  using L = LabelOf<H>;
  Report rep{"coalgebra-map", {}};
  for (const L& m : sample) {
    const std::vector<std::string> who{h.label_string(m)};
    auto lhs = comul(h, b.apply(m));
    LinComb<std::array<L, 2>> rhs;
    for (const auto& [p, c] : h.comul(m).terms())
      rhs.add_scaled(tensor(b.apply(p[0]), b.apply(p[1])), c);
    if (lhs != rhs) rep.violations.push_back({who, render(h, lhs), render(h, rhs)});
    Rational el = counit(h, b.apply(m));
    Rational er = h.counit(m);
    if (el != er)
      rep.violations.push_back({who, {{"value", el.str()}}, {{"value", er.str()}}});
  }
  return rep;
}

/// The antipode as an operator; satisfies the defining identity on any
/// cocommutative instance.
template <HopfInstance H>
RBOperator<LabelOf<H>> antipode_rb(const H& h) {
  using L = LabelOf<H>;
  return RBOperator<L>([hp = &h](const L& m) { return hp->antipode(m); }, Provenance::Antipode);
}

/// x -> S(x_(1)) B(S(x_(2))). On primitives this is the companion -x - B(x);
/// on group-likes it is g^{-1} B(g^{-1}). Involutive on operators.
/// The result captures the carrier by reference and must not outlive it.
template <HopfInstance H>
RBOperator<LabelOf<H>> tilde_hopf(const H& h, const RBOperator<LabelOf<H>>& b) {
  using L = LabelOf<H>;
  return RBOperator<L>(
      [hp = &h, b](const L& m) {
        LinComb<L> acc;
        for (const auto& [p, c] : hp->comul(m).terms()) {
          LinComb<L> term = mul(*hp, hp->antipode(p[0]), b.apply(hp->antipode(p[1])));
          acc.add_scaled(term, c);
        }
        return acc;
      },
      Provenance::Tilde);
}

/// Linear extension of a group operator: group-likes map to group-likes, so
/// the extension is tabulated on the basis. Validates the group-level
/// identity first; throws std::domain_error if it fails.
RBOperator<int> extend_group_rb(const GroupAlgebra& h, const GroupMap& b);

/// Recursive extension of a weight-1 Lie operator to the enveloping algebra:
/// B(1) = 1 and, peeling the lowest generator x of a monomial m = x h,
///   B(x h) = B(x) B(h) - B([B(x), h]).
/// The commutator [B(x), h] has degree <= deg h because top-degree symbols
/// commute, so the recursion strictly lowers total degree and terminates.
/// Values are memoized per monomial. Validates the weight-1 identity on the
/// Lie algebra first; throws std::domain_error if it fails.
RBOperator<PbwMonomial> extend_lie_rb(const UniversalEnveloping& h, const LieOperator& r);

/// Matrix of B restricted to the generators. Throws std::domain_error when
/// some image fails to be primitive.
LieOperator restrict_to_primitives(const UniversalEnveloping& h, const RBOperator<PbwMonomial>& b);

/// Per-element images of B on the group basis. Throws std::domain_error when
/// some image fails to be group-like.
GroupMap restrict_to_grouplikes(const GroupAlgebra& h, const RBOperator<int>& b);

/// B(h1 h2) = counit(h1) S(h2) for an exact group factorization G = G1 G2.
RBOperator<int> split_rb_hopf(const GroupAlgebra& h, const std::vector<int>& g1,
                              const std::vector<int>& g2);

/// B(h1 h2) = counit(h1) S(h2) for a generator split of the Lie algebra:
/// generators [0, split_at) span the first subalgebra, the rest the second,
/// and the PBW order makes every monomial factor as m1 m2. Both index ranges
/// must be closed under the bracket; throws std::domain_error otherwise.
RBOperator<PbwMonomial> split_rb_hopf(const UniversalEnveloping& h, int split_at);

/// Closed form for the extension of the sl2 operator R(x)=0, R(h)=-h/2,
/// R(y)=-y: B(x^i h^j y^k) = 0 for i > 0, else (-1)^(j+k) 2^(-j) y^k h^j in
/// PBW form. Independent oracle for extend_lie_rb on sl2.
LinComb<PbwMonomial> sl2_closed_form(const UniversalEnveloping& sl2, int i, int j, int k);

}  // namespace rbhopf
