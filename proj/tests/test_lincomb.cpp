#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rbhopf/lincomb.hpp"

using namespace rbhopf;
using V = LinComb<int>;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

V random_comb() {
  std::uniform_int_distribution<int> label(0, 5), nterms(0, 4);
  V v;
  for (int i = nterms(rng); i > 0; --i) v.add_term(label(rng), random_rational());
  return v;
}

template <typename L>
bool normalized(const LinComb<L>& v) {
  for (const auto& [l, c] : v.terms()) {
    (void)l;
    if (c.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("addition") {
  V a = V::basis(0, Rational(2));
  CHECK((a + V::basis(0, Rational(-2))).is_zero());
  V sum = V::basis(0) + V::basis(1);
  CHECK(sum.coeff(0) == Rational(1));
  CHECK(sum.coeff(1) == Rational(1));
  CHECK(sum.size() == 2);
  V thirds = V::basis(0, Rational(1, 2)) + V::basis(0, Rational(1, 3));
  CHECK(thirds == V::basis(0, Rational(5, 6)));
}

TEST_CASE("scaling") {
  V v = V::basis(0, Rational(5));
  CHECK((v * Rational(0)).is_zero());
  CHECK(v * Rational(1) == v);
  CHECK(V::basis(0, Rational(4)) * Rational(-1, 2) == V::basis(0, Rational(-2)));
  CHECK(-v == V::basis(0, Rational(-5)));
}

TEST_CASE("tensor products flatten to tuples") {
  auto t = tensor(V::basis(0, Rational(2)), V::basis(1, Rational(3)));
  CHECK(t == LinComb<std::array<int, 2>>::basis({0, 1}, Rational(6)));
  CHECK(tensor(V{}, V::basis(1)).is_zero());
  auto bil = tensor(V::basis(0) + V::basis(1), V::basis(2));
  CHECK(bil.coeff({0, 2}) == Rational(1));
  CHECK(bil.coeff({1, 2}) == Rational(1));
  CHECK(bil.size() == 2);

  // pair (x) atom and atom (x) pair both give flat triples
  auto triple = tensor(t, V::basis(2));
  CHECK(triple == LinComb<std::array<int, 3>>::basis({0, 1, 2}, Rational(6)));
  auto triple2 = tensor(V::basis(2), t);
  CHECK(triple2 == LinComb<std::array<int, 3>>::basis({2, 0, 1}, Rational(6)));
}

TEST_CASE("algebraic properties on random combinations") {
  for (int iter = 0; iter < 300; ++iter) {
    V a = random_comb(), b = random_comb(), c = random_comb();
    Rational s = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + b) * s == a * s + b * s);
    CHECK(tensor(a + b, c) == tensor(a, c) + tensor(b, c));
    CHECK(tensor(c, a + b) == tensor(c, a) + tensor(c, b));
    CHECK(normalized(a + b));
    CHECK(normalized(a - b));
    CHECK(normalized(a * s));
    CHECK(normalized(tensor(a, b)));
  }
}

TEST_CASE("sorted_terms is deterministic") {
  V v;
  v.add_term(3, Rational(1));
  v.add_term(1, Rational(2));
  v.add_term(2, Rational(3));
  auto sorted = v.sorted_terms();
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].first == 1);
  CHECK(sorted[1].first == 2);
  CHECK(sorted[2].first == 3);
}

TEST_CASE("lift extends label maps linearly") {
  V v = V::basis(0, Rational(2)) + V::basis(1, Rational(-1));
  auto doubled = lift(v, [](const int& l) { return V::basis(l + 10); });
  CHECK(doubled.coeff(10) == Rational(2));
  CHECK(doubled.coeff(11) == Rational(-1));
}
