#include "rbhopf/rb_operator.hpp"

#include <stdexcept>

namespace rbhopf {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ExtendedFromLie: return "extended-from-lie";
    case Provenance::ExtendedFromGroup: return "extended-from-group";
    case Provenance::Tilde: return "tilde";
    case Provenance::Split: return "split";
    case Provenance::Antipode: return "antipode";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

RBOperator<int> extend_group_rb(const GroupAlgebra& h, const GroupMap& b) {
  Report rep = check_rb_group(h.group(), b);
  if (!rep.ok())
    throw std::domain_error("extend_group_rb: map fails the group identity on " +
                            std::to_string(rep.violations.size()) + " pairs");
  std::vector<int> image = b.image;
  return RBOperator<int>(
      [image](const int& g) { return LinComb<int>::basis(image.at(static_cast<std::size_t>(g))); },
      Provenance::ExtendedFromGroup);
}

namespace {

struct UegExtension {
  const UniversalEnveloping* u;
  LieOperator r;
  std::unordered_map<PbwMonomial, LinComb<PbwMonomial>, LabelHash<PbwMonomial>> memo;

  const LinComb<PbwMonomial>& eval(const PbwMonomial& m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    LinComb<PbwMonomial> val;
    if (m.is_unit()) {
      val = LinComb<PbwMonomial>::basis(u->unit_label());
    } else {
      std::size_t i = 0;
      while (m.exps[i] == 0) ++i;
      PbwMonomial rest = m;
      --rest.exps[i];
      LinComb<PbwMonomial> bx = u->embed(r.apply(static_cast<int>(i)));
      const LinComb<PbwMonomial> bh = eval(rest);  // copy: recursion below may grow memo
      LinComb<PbwMonomial> val1 = mul(*u, bx, bh);
      // [B(x), rest]: degree <= deg(rest) < deg(m), so the recursion on the
      // commutator terms strictly lowers total degree.
      LinComb<PbwMonomial> rest_lin = LinComb<PbwMonomial>::basis(rest);
      LinComb<PbwMonomial> comm = mul(*u, bx, rest_lin) - mul(*u, rest_lin, bx);
      LinComb<PbwMonomial> val2 = eval_lin(comm);
      val = val1 - val2;
    }
    auto [ins, _] = memo.emplace(m, std::move(val));
    return ins->second;
  }

  LinComb<PbwMonomial> eval_lin(const LinComb<PbwMonomial>& v) {
    LinComb<PbwMonomial> acc;
    for (const auto& [l, c] : v.terms()) acc.add_scaled(eval(l), c);
    return acc;
  }
};

}  // namespace

RBOperator<PbwMonomial> extend_lie_rb(const UniversalEnveloping& h, const LieOperator& r) {
  Report rep = check_rb_weight(h.lie(), r, Rational(1));
  if (!rep.ok())
    throw std::domain_error("extend_lie_rb: operator fails the weight-1 identity on " +
                            std::to_string(rep.violations.size()) + " basis pairs");
  auto state = std::make_shared<UegExtension>(UegExtension{&h, r, {}});
  return RBOperator<PbwMonomial>(
      [state](const PbwMonomial& m) { return state->eval(m); },
      Provenance::ExtendedFromLie);
}

LieOperator restrict_to_primitives(const UniversalEnveloping& h,
                                   const RBOperator<PbwMonomial>& b) {
  LieOperator out(h.dim());
  for (int k = 0; k < h.dim(); ++k) {
    const LinComb<PbwMonomial>& img = b.apply(h.generator(k));
    if (!is_primitive(h, img))
      throw std::domain_error("restrict_to_primitives: image of generator " +
                              h.lie().name(k) + " is not primitive");
    for (const auto& [m, c] : img.terms()) {
      std::size_t i = 0;
      while (m.exps[i] == 0) ++i;
      out.set(static_cast<int>(i), k, c);
    }
  }
  return out;
}

GroupMap restrict_to_grouplikes(const GroupAlgebra& h, const RBOperator<int>& b) {
  GroupMap out;
  out.image.resize(static_cast<std::size_t>(h.group().order()));
  for (int g = 0; g < h.group().order(); ++g) {
    const LinComb<int>& img = b.apply(g);
    if (img.size() != 1 || !is_grouplike(h, img))
      throw std::domain_error("restrict_to_grouplikes: image of " + h.group().name(g) +
                              " is not group-like");
    out.image[static_cast<std::size_t>(g)] = img.terms().begin()->first;
  }
  return out;
}

RBOperator<int> split_rb_hopf(const GroupAlgebra& h, const std::vector<int>& g1,
                              const std::vector<int>& g2) {
  const FiniteGroup& g = h.group();
  GroupMap split = split_rb_group(g, g1, g2);  // validates the factorization
  std::vector<int> image = split.image;
  return RBOperator<int>(
      [image](const int& x) { return LinComb<int>::basis(image.at(static_cast<std::size_t>(x))); },
      Provenance::Split);
}

RBOperator<PbwMonomial> split_rb_hopf(const UniversalEnveloping& h, int split_at) {
  const LieAlgebra& lie = h.lie();
  if (split_at < 0 || split_at > lie.dim())
    throw std::domain_error("split_rb_hopf: split index out of range");
  auto closed = [&lie](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j)
        for (const auto& [l, c] : lie.bracket(i, j).terms()) {
          (void)c;
          if (l < lo || l >= hi) return false;
        }
    return true;
  };
  if (!closed(0, split_at))
    throw std::domain_error("split_rb_hopf: leading generators do not span a subalgebra");
  if (!closed(split_at, lie.dim()))
    throw std::domain_error("split_rb_hopf: trailing generators do not span a subalgebra");
  return RBOperator<PbwMonomial>(
      [hp = &h, split_at](const PbwMonomial& m) {
        for (int i = 0; i < split_at; ++i)
          if (m.exps[static_cast<std::size_t>(i)] > 0) return LinComb<PbwMonomial>{};
        return hp->antipode(m);
      },
      Provenance::Split);
}

LinComb<PbwMonomial> sl2_closed_form(const UniversalEnveloping& sl2, int i, int j, int k) {
  if (sl2.dim() != 3) throw std::invalid_argument("sl2_closed_form: carrier must be 3-dimensional");
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("sl2_closed_form: negative exponent");
  if (i > 0) return {};
  std::vector<int> word;
  word.insert(word.end(), static_cast<std::size_t>(k), 2);  // y^k
  word.insert(word.end(), static_cast<std::size_t>(j), 1);  // h^j
  Rational coeff = Rational(1, 2).pow(static_cast<unsigned>(j));
  if ((j + k) % 2 != 0) coeff *= Rational(-1);
  return sl2.normalize_word(word) * coeff;
}

}  // namespace rbhopf
