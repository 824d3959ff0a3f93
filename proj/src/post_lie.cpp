#include "rbhopf/descendent.hpp"

namespace rbhopf {

namespace {

struct DotRecursion {
  const UniversalEnveloping* u;
  const LieOperator* r;

  // [R(e_i), v]
  LinComb<PbwMonomial> adjoint(int i, const LinComb<PbwMonomial>& v) const {
    LinComb<PbwMonomial> rx = u->embed(r->apply(i));
    return mul(*u, rx, v) - mul(*u, v, rx);
  }

  LinComb<PbwMonomial> dot_label(const PbwMonomial& m, const LinComb<PbwMonomial>& g) const {
    if (m.is_unit()) return g;
    std::size_t i = 0;
    while (m.exps[i] == 0) ++i;
    PbwMonomial rest = m;
    --rest.exps[i];
    // (x f).g = x.(f.g) - (x.f).g with x.u = [R(x), u]
    LinComb<PbwMonomial> term1 = adjoint(static_cast<int>(i), dot_label(rest, g));
    LinComb<PbwMonomial> xf = adjoint(static_cast<int>(i), LinComb<PbwMonomial>::basis(rest));
    LinComb<PbwMonomial> term2 = dot_lin(xf, g);
    return term1 - term2;
  }

  LinComb<PbwMonomial> dot_lin(const LinComb<PbwMonomial>& f,
                               const LinComb<PbwMonomial>& g) const {
    LinComb<PbwMonomial> acc;
    for (const auto& [l, c] : f.terms()) acc.add_scaled(dot_label(l, g), c);
    return acc;
  }
};

}  // namespace

LinComb<PbwMonomial> post_lie_dot_recursive(const UniversalEnveloping& h, const LieOperator& r,
                                            const LinComb<PbwMonomial>& f,
                                            const LinComb<PbwMonomial>& g) {
  if (r.dim() != h.dim())
    throw std::invalid_argument("post_lie_dot_recursive: dimension mismatch");
  DotRecursion rec{&h, &r};
  return rec.dot_lin(f, g);
}

}  // namespace rbhopf
