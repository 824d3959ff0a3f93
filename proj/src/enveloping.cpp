#include "rbhopf/enveloping.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rbhopf {

UniversalEnveloping::UniversalEnveloping(LieAlgebra lie) : lie_(std::move(lie)) {}

UniversalEnveloping::Label UniversalEnveloping::generator(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("UniversalEnveloping: generator index");
  Label m = unit_label();
  m.exps[static_cast<std::size_t>(i)] = 1;
  return m;
}

LinComb<UniversalEnveloping::Label> UniversalEnveloping::embed(const LinComb<int>& lie_elt) const {
  LinComb<Label> out;
  for (const auto& [i, c] : lie_elt.terms()) out.add_term(generator(i), c);
  return out;
}

void UniversalEnveloping::check_label(const Label& m) const {
  if (static_cast<int>(m.exps.size()) != dim())
    throw std::invalid_argument("UniversalEnveloping: monomial arity mismatch");
}

static PbwMonomial monomial_from_sorted_word(int dim, const std::vector<int>& word) {
  PbwMonomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(dim), 0)};
  for (int g : word) ++m.exps[static_cast<std::size_t>(g)];
  return m;
}

LinComb<UniversalEnveloping::Label> UniversalEnveloping::normalize_word(
    std::span<const int> word, Strategy strategy) const {
  for (int g : word)
    if (g < 0 || g >= dim()) throw std::out_of_range("normalize_word: generator index");
  LinComb<Label> out;
  std::vector<std::pair<std::vector<int>, Rational>> work;
  work.emplace_back(std::vector<int>(word.begin(), word.end()), Rational(1));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    int pos = -1;
    const int len = static_cast<int>(w.size());
    if (strategy == Strategy::LeftmostSwap) {
      for (int i = 0; i + 1 < len; ++i)
        if (w[i] > w[i + 1]) {
          pos = i;
          break;
        }
    } else {
      for (int i = len - 2; i >= 0; --i)
        if (w[i] > w[i + 1]) {
          pos = i;
          break;
        }
    }
    if (pos < 0) {
      out.add_term(monomial_from_sorted_word(dim(), w), c);
      continue;
    }
    // e_a e_b with a > b: rewrite to e_b e_a + [e_a, e_b]
    const int a = w[static_cast<std::size_t>(pos)];
    const int b = w[static_cast<std::size_t>(pos) + 1];
    LinComb<int> br = lie_.bracket(a, b);
    for (const auto& [g, coef] : br.terms()) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(shorter), c * coef);
    }
    std::swap(w[static_cast<std::size_t>(pos)], w[static_cast<std::size_t>(pos) + 1]);
    work.emplace_back(std::move(w), c);
  }
  return out;
}

const LinComb<UniversalEnveloping::Label>& UniversalEnveloping::mul(const Label& a,
                                                                    const Label& b) const {
  check_label(a);
  check_label(b);
  const std::array<Label, 2> key{a, b};
  auto it = mul_cache_.find(key);
  if (it != mul_cache_.end()) return it->second;
  std::vector<int> w = a.word();
  std::vector<int> wb = b.word();
  w.insert(w.end(), wb.begin(), wb.end());
  auto [ins, _] = mul_cache_.emplace(key, normalize_word(w));
  return ins->second;
}

LinComb<UniversalEnveloping::Pair> UniversalEnveloping::comul(const Label& m) const {
  check_label(m);
  LinComb<Pair> out;
  const std::size_t n = m.exps.size();
  std::vector<std::uint32_t> b(n, 0);
  for (;;) {
    Rational coeff(1);
    for (std::size_t i = 0; i < n; ++i) coeff *= Rational::binomial(m.exps[i], b[i]);
    Label left{b};
    Label right = m;
    for (std::size_t i = 0; i < n; ++i) right.exps[i] -= b[i];
    out.add_term(Pair{std::move(left), std::move(right)}, coeff);
    // odometer over 0 <= b <= exps
    std::size_t i = 0;
    while (i < n && b[i] == m.exps[i]) b[i++] = 0;
    if (i == n) break;
    ++b[i];
  }
  return out;
}

LinComb<UniversalEnveloping::Pair> UniversalEnveloping::comul_via_generators(
    const Label& m) const {
  check_label(m);
  LinComb<Pair> acc = LinComb<Pair>::basis(Pair{unit_label(), unit_label()});
  for (int g : m.word()) {
    LinComb<Pair> gen;
    gen.add_term(Pair{generator(g), unit_label()}, Rational(1));
    gen.add_term(Pair{unit_label(), generator(g)}, Rational(1));
    LinComb<Pair> next;
    for (const auto& [la, ca] : acc.terms())
      for (const auto& [lb, cb] : gen.terms()) {
        const LinComb<Label>& p0 = mul(la[0], lb[0]);
        const LinComb<Label>& p1 = mul(la[1], lb[1]);
        next.add_scaled(tensor(p0, p1), ca * cb);
      }
    acc = std::move(next);
  }
  return acc;
}

LinComb<UniversalEnveloping::Label> UniversalEnveloping::antipode(const Label& m) const {
  check_label(m);
  std::vector<int> w = m.word();
  std::reverse(w.begin(), w.end());
  LinComb<Label> out = normalize_word(w);
  if (m.degree() % 2 != 0) out *= Rational(-1);
  return out;
}

std::vector<UniversalEnveloping::Label> UniversalEnveloping::basis_up_to(int degree) const {
  std::vector<Label> out;
  Label m = unit_label();
  const std::size_t n = m.exps.size();
  for (;;) {
    if (m.degree() <= degree) out.push_back(m);
    // odometer over 0 <= exps <= degree per coordinate, filtered by total
    std::size_t i = 0;
    while (i < n && static_cast<int>(m.exps[i]) == degree) m.exps[i++] = 0;
    if (i == n) break;
    ++m.exps[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string UniversalEnveloping::label_string(const Label& m) const {
  check_label(m);
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    s += lie_.name(static_cast<int>(i));
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s;
}

}  // namespace rbhopf
