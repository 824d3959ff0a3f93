#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbhopf/descendent.hpp"
#include "rbhopf/fixtures.hpp"

using namespace rbhopf;
using P = PbwMonomial;
using VP = LinComb<P>;

namespace {

struct Sl2Fix {
  UniversalEnveloping u{sl2()};
  LieOperator r = sl2_standard_operator();
  RBOperator<P> b = extend_lie_rb(u, r);
};

GroupMap inverse_map(const FiniteGroup& g) {
  GroupMap m;
  for (int x = 0; x < g.order(); ++x) m.image.push_back(g.inv(x));
  return m;
}

}  // namespace

TEST_CASE("star product basics") {
  Sl2Fix f;
  VP one = unit_lincomb(f.u);
  for (const P& m : f.u.basis_up_to(2)) {
    CHECK(star(f.u, f.b, one, VP::basis(m)) == VP::basis(m));
    CHECK(star(f.u, f.b, VP::basis(m), one) == VP::basis(m));
  }

  SUBCASE("on primitives x*y = xy + [B(x), y]") {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        VP x = VP::basis(f.u.generator(i)), y = VP::basis(f.u.generator(j));
        VP bx = f.b.apply(f.u.generator(i));
        VP expected = mul(f.u, x, y) + mul(f.u, bx, y) - mul(f.u, y, bx);
        CHECK(star(f.u, f.b, x, y) == expected);
      }
  }

  SUBCASE("on group-likes g*h = g B(g) h B(g)^{-1}") {
    GroupAlgebra h(builtin_group("S3"));
    auto [a3, flip] = s3_factorization();
    GroupMap bg = split_rb_group(h.group(), a3, flip);
    auto bop = extend_group_rb(h, bg);
    for (int g1 : h.basis())
      for (int g2 : h.basis()) {
        int bg1 = bg.image[static_cast<std::size_t>(g1)];
        int expected = h.group().mul(h.group().mul(g1, bg1),
                                     h.group().mul(g2, h.group().inv(bg1)));
        CHECK(star(h, bop, LinComb<int>::basis(g1), LinComb<int>::basis(g2)) ==
              LinComb<int>::basis(expected));
      }
  }
}

TEST_CASE("descendent antipode") {
  Sl2Fix f;
  CHECK(s_b(f.u, f.b, unit_lincomb(f.u)) == unit_lincomb(f.u));
  // primitives: S_B(x) = -x
  for (int i = 0; i < 3; ++i)
    CHECK(s_b(f.u, f.b, VP::basis(f.u.generator(i))) == -VP::basis(f.u.generator(i)));

  SUBCASE("group-likes: S_B(g) = B(g)^{-1} g^{-1} B(g), the descendent inverse") {
    GroupAlgebra h(builtin_group("S3"));
    auto [a3, flip] = s3_factorization();
    GroupMap bg = split_rb_group(h.group(), a3, flip);
    auto bop = extend_group_rb(h, bg);
    FiniteGroup desc = descendent_group(h.group(), bg);
    for (int g : h.basis())
      CHECK(s_b(h, bop, LinComb<int>::basis(g)) == LinComb<int>::basis(desc.inv(g)));
  }
}

TEST_CASE("post-Lie product through the operator") {
  Sl2Fix f;
  VP one = unit_lincomb(f.u);
  for (const P& m : f.u.basis_up_to(2)) {
    CHECK(post_lie_dot(f.u, f.b, one, VP::basis(m)) == VP::basis(m));  // 1.g = g
    // f.1 = counit(f) 1
    CHECK(post_lie_dot(f.u, f.b, VP::basis(m), one) == one * f.u.counit(m));
  }

  SUBCASE("generator pairs match the structure-level post-Lie table") {
    PostLieProduct table = post_lie_product(f.u.lie(), f.r);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(post_lie_dot(f.u, f.b, VP::basis(f.u.generator(i)), VP::basis(f.u.generator(j))) ==
              f.u.embed(table.dot(i, j)));
  }
}

TEST_CASE("recursive route for the post-Lie product") {
  Sl2Fix f;
  VP one = unit_lincomb(f.u);
  for (const P& m : f.u.basis_up_to(2))
    CHECK(post_lie_dot_recursive(f.u, f.r, one, VP::basis(m)) == VP::basis(m));

  SUBCASE("agrees with the operator route up to degree 2") {
    for (const P& m : f.u.basis_up_to(2))
      for (const P& n : f.u.basis_up_to(2))
        CHECK(post_lie_dot_recursive(f.u, f.r, VP::basis(m), VP::basis(n)) ==
              post_lie_dot(f.u, f.b, VP::basis(m), VP::basis(n)));
  }

  SUBCASE("generator action splits over products") {
    for (int i = 0; i < 3; ++i) {
      VP x = VP::basis(f.u.generator(i));
      for (const P& g : f.u.basis_up_to(2))
        for (const P& h : f.u.basis_up_to(2)) {
          VP gh = f.u.mul(g, h);
          VP lhs = post_lie_dot_recursive(f.u, f.r, x, gh);
          VP rhs = mul(f.u, post_lie_dot_recursive(f.u, f.r, x, VP::basis(g)), VP::basis(h)) +
                   mul(f.u, VP::basis(g), post_lie_dot_recursive(f.u, f.r, x, VP::basis(h)));
          CHECK(lhs == rhs);
        }
    }
  }

  SUBCASE("coproduct splitting holds for higher-degree left factors") {
    // f.(gh) = (f_(1).g)(f_(2).h)
    for (const P& m : f.u.basis_up_to(2)) {
      for (const P& g : f.u.basis_up_to(1))
        for (const P& h : f.u.basis_up_to(1)) {
          VP lhs = post_lie_dot_recursive(f.u, f.r, VP::basis(m), f.u.mul(g, h));
          VP rhs;
          auto dm = f.u.comul(m);
          for (const auto& [p, c] : dm.terms()) {
            VP t = mul(f.u, post_lie_dot_recursive(f.u, f.r, VP::basis(p[0]), VP::basis(g)),
                       post_lie_dot_recursive(f.u, f.r, VP::basis(p[1]), VP::basis(h)));
            rhs.add_scaled(t, c);
          }
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("descendent Hopf algebra") {
  SUBCASE("constant-identity operator leaves the structure unchanged") {
    GroupAlgebra h(builtin_group("S3"));
    auto b = extend_group_rb(h, GroupMap{std::vector<int>(6, 0)});
    DescendentHopf d = build_descendent(h, b, h.basis());
    for (int x : h.basis())
      for (int y : h.basis()) CHECK(d.mul(x, y) == h.mul(x, y));
    for (int x : h.basis()) CHECK(d.antipode(x) == h.antipode(x));
  }

  SUBCASE("group algebra of the descendent group") {
    GroupAlgebra h(builtin_group("S3"));
    auto [a3, flip] = s3_factorization();
    GroupMap bg = split_rb_group(h.group(), a3, flip);
    DescendentHopf d = build_descendent(h, extend_group_rb(h, bg), h.basis());
    FiniteGroup desc = descendent_group(h.group(), bg);
    for (int x : h.basis())
      for (int y : h.basis())
        CHECK(d.mul(x, y) == LinComb<int>::basis(desc.mul(x, y)));
  }

  SUBCASE("enveloping carrier: axioms, bracket witness") {
    Sl2Fix f;
    auto sample = f.u.basis_up_to(2);
    DescendentHopf d = build_descendent(f.u, f.b, sample);
    CHECK(all_ok(verify_descendent(d, sample)));
    LieAlgebra desc = descendent_bracket(f.u.lie(), f.r);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        VP comm = d.mul(f.u.generator(i), f.u.generator(j)) -
                  d.mul(f.u.generator(j), f.u.generator(i));
        CHECK(comm == f.u.embed(desc.bracket(i, j)));
      }
  }

  SUBCASE("a non-operator fails verification") {
    GroupAlgebra h(builtin_group("S3"));
    // the identity map is not a Rota-Baxter operator on a nonabelian group
    RBOperator<int> not_rb([](const int& g) { return LinComb<int>::basis(g); },
                           Provenance::Custom);
    CHECK_THROWS_AS(build_descendent(h, not_rb, h.basis()), std::domain_error);
  }
}

TEST_CASE("operator is a homomorphism into the descendent algebra") {
  GroupAlgebra h(builtin_group("S3"));
  DescendentHopf d(h, antipode_rb(h));
  CHECK(all_ok(check_b_homomorphism(d, h.basis())));

  Sl2Fix f;
  DescendentHopf du(f.u, f.b);
  CHECK(all_ok(check_b_homomorphism(du, f.u.basis_up_to(2))));
}
