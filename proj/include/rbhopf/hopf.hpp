#pragma once

#include <array>
#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "rbhopf/lincomb.hpp"
#include "rbhopf/report.hpp"

namespace rbhopf {

/// A concrete cocommutative Hopf algebra: a basis-label kind plus the five
/// structure maps evaluated on basis labels. Linear/bilinear extensions and
/// all identity checks are generic over this surface.
template <typename H>
concept HopfInstance = requires(const H& h, const typename H::Label& a,
                                const typename H::Label& b) {
  typename H::Label;
  { h.mul(a, b) } -> std::convertible_to<LinComb<typename H::Label>>;
  { h.comul(a) } -> std::convertible_to<LinComb<std::array<typename H::Label, 2>>>;
  { h.counit(a) } -> std::convertible_to<Rational>;
  { h.antipode(a) } -> std::convertible_to<LinComb<typename H::Label>>;
  { h.unit_label() } -> std::convertible_to<typename H::Label>;
  { h.label_string(a) } -> std::convertible_to<std::string>;
};

template <HopfInstance H>
using LabelOf = typename H::Label;

template <HopfInstance H>
LinComb<LabelOf<H>> unit_lincomb(const H& h) {
  return LinComb<LabelOf<H>>::basis(h.unit_label());
}

template <HopfInstance H>
LinComb<LabelOf<H>> mul(const H& h, const LinComb<LabelOf<H>>& a, const LinComb<LabelOf<H>>& b) {
  LinComb<LabelOf<H>> acc;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) acc.add_scaled(h.mul(la, lb), ca * cb);
  return acc;
}

/// Componentwise product on H(x)H.
template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 2>> mul_pair(const H& h,
                                            const LinComb<std::array<LabelOf<H>, 2>>& a,
                                            const LinComb<std::array<LabelOf<H>, 2>>& b) {
  LinComb<std::array<LabelOf<H>, 2>> acc;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      acc.add_scaled(tensor(h.mul(la[0], lb[0]), h.mul(la[1], lb[1])), ca * cb);
  return acc;
}

template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 2>> comul(const H& h, const LinComb<LabelOf<H>>& v) {
  return lift(v, [&h](const LabelOf<H>& l) { return h.comul(l); });
}

template <HopfInstance H>
LinComb<LabelOf<H>> antipode(const H& h, const LinComb<LabelOf<H>>& v) {
  return lift(v, [&h](const LabelOf<H>& l) { return h.antipode(l); });
}

template <HopfInstance H>
Rational counit(const H& h, const LinComb<LabelOf<H>>& v) {
  Rational acc(0);
  for (const auto& [l, c] : v.terms()) acc += h.counit(l) * c;
  return acc;
}

/// (Delta (x) id) Delta on a basis label; labels come out as flat triples.
template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 3>> comul3_label(const H& h, const LabelOf<H>& m) {
  LinComb<std::array<LabelOf<H>, 3>> out;
  for (const auto& [p, c] : h.comul(m).terms())
    for (const auto& [q, c2] : h.comul(p[0]).terms())
      out.add_term(std::array<LabelOf<H>, 3>{q[0], q[1], p[1]}, c * c2);
  return out;
}

template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 3>> comul3_left(const H& h, const LinComb<LabelOf<H>>& v) {
  return lift(v, [&h](const LabelOf<H>& l) { return comul3_label(h, l); });
}

/// (id (x) Delta) Delta; equals comul3_left by coassociativity.
template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 3>> comul3_right(const H& h, const LinComb<LabelOf<H>>& v) {
  LinComb<std::array<LabelOf<H>, 3>> out;
  for (const auto& [l, c] : v.terms())
    for (const auto& [p, c1] : h.comul(l).terms())
      for (const auto& [q, c2] : h.comul(p[1]).terms())
        out.add_term(std::array<LabelOf<H>, 3>{p[0], q[0], q[1]}, c * c1 * c2);
  return out;
}

template <HopfInstance H>
LinComb<std::array<LabelOf<H>, 2>> swap_pair(const LinComb<std::array<LabelOf<H>, 2>>& v,
                                             const H&) {
  LinComb<std::array<LabelOf<H>, 2>> out;
  for (const auto& [l, c] : v.terms())
    out.add_term(std::array<LabelOf<H>, 2>{l[1], l[0]}, c);
  return out;
}

/// Delta(v) = v(x)v and counit(v) = 1.
template <HopfInstance H>
bool is_grouplike(const H& h, const LinComb<LabelOf<H>>& v) {
  return counit(h, v) == Rational(1) && comul(h, v) == tensor(v, v);
}

/// Delta(v) = v(x)1 + 1(x)v.
template <HopfInstance H>
bool is_primitive(const H& h, const LinComb<LabelOf<H>>& v) {
  const LinComb<LabelOf<H>> one = unit_lincomb(h);
  return comul(h, v) == tensor(v, one) + tensor(one, v);
}

template <HopfInstance H>
std::string label_text(const H& h, const LabelOf<H>& l) {
  return h.label_string(l);
}

template <HopfInstance H, std::size_t N>
std::string label_text(const H& h, const std::array<LabelOf<H>, N>& t) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += "⊗";  // tensor sign
    s += h.label_string(t[i]);
  }
  return s;
}

template <HopfInstance H, typename LL>
std::map<std::string, std::string> render(const H& h, const LinComb<LL>& v) {
  std::map<std::string, std::string> out;
  for (const auto& [l, c] : v.terms()) out[label_text(h, l)] = c.str();
  return out;
}

/// Checks every Hopf-algebra axiom on the sample: associativity and unit,
/// coassociativity and counit, the antipode convolution law, cocommutativity,
/// and that Delta and the counit are algebra maps. Identities are linear in
/// each slot, so basis tuples verify the span of the sample.
template <HopfInstance H>
std::vector<Report> verify_hopf_axioms(const H& h, const std::vector<LabelOf<H>>& sample) {
  using L = LabelOf<H>;
  Report assoc{"associativity", {}};
  Report unit{"unit", {}};
  Report coassoc{"coassociativity", {}};
  Report counit_law{"counit", {}};
  Report antipode_law{"antipode-convolution", {}};
  Report cocomm{"cocommutativity", {}};
  Report comul_alg{"comul-algebra-map", {}};
  Report counit_alg{"counit-algebra-map", {}};

  const LinComb<L> one = unit_lincomb(h);
  for (const L& a : sample) {
    const LinComb<L> va = LinComb<L>::basis(a);
    const std::vector<std::string> who{h.label_string(a)};

    LinComb<L> left_unit = mul(h, one, va);
    LinComb<L> right_unit = mul(h, va, one);
    if (left_unit != va || right_unit != va)
      unit.violations.push_back({who, render(h, left_unit), render(h, right_unit)});

    auto d3l = comul3_left(h, va);
    auto d3r = comul3_right(h, va);
    if (d3l != d3r) coassoc.violations.push_back({who, render(h, d3l), render(h, d3r)});

    auto d = comul(h, va);
    LinComb<L> eps_id, id_eps;
    for (const auto& [p, c] : d.terms()) {
      eps_id.add_term(p[1], c * h.counit(p[0]));
      id_eps.add_term(p[0], c * h.counit(p[1]));
    }
    if (eps_id != va || id_eps != va)
      counit_law.violations.push_back({who, render(h, eps_id), render(h, id_eps)});

    LinComb<L> conv_l, conv_r;
    for (const auto& [p, c] : d.terms()) {
      conv_l.add_scaled(mul(h, LinComb<L>::basis(p[0]), h.antipode(p[1])), c);
      conv_r.add_scaled(mul(h, h.antipode(p[0]), LinComb<L>::basis(p[1])), c);
    }
    LinComb<L> eps_one = one * h.counit(a);
    if (conv_l != eps_one || conv_r != eps_one)
      antipode_law.violations.push_back({who, render(h, conv_l), render(h, conv_r)});

    if (swap_pair(d, h) != d)
      cocomm.violations.push_back({who, render(h, d), render(h, swap_pair(d, h))});
  }

  for (const L& a : sample)
    for (const L& b : sample) {
      const std::vector<std::string> who{h.label_string(a), h.label_string(b)};
      LinComb<L> ab = h.mul(a, b);
      auto lhs = comul(h, ab);
      auto rhs = mul_pair(h, h.comul(a), h.comul(b));
      if (lhs != rhs) comul_alg.violations.push_back({who, render(h, lhs), render(h, rhs)});
      Rational el = counit(h, ab);
      Rational er = h.counit(a) * h.counit(b);
      if (el != er)
        counit_alg.violations.push_back({who, {{"value", el.str()}}, {{"value", er.str()}}});
    }

  for (const L& a : sample)
    for (const L& b : sample)
      for (const L& c : sample) {
        LinComb<L> lhs = mul(h, h.mul(a, b), LinComb<L>::basis(c));
        LinComb<L> rhs = mul(h, LinComb<L>::basis(a), h.mul(b, c));
        if (lhs != rhs)
          assoc.violations.push_back(
              {{h.label_string(a), h.label_string(b), h.label_string(c)},
               render(h, lhs),
               render(h, rhs)});
      }

  return {assoc, unit, coassoc, counit_law, antipode_law, cocomm, comul_alg, counit_alg};
}

}  // namespace rbhopf
