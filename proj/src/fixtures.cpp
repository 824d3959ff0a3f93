#include "rbhopf/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace rbhopf {

LieAlgebra sl2() {
  std::vector<LieAlgebra::BracketEntry> entries;
  entries.push_back({1, 0, LinComb<int>::basis(0, Rational(2))});    // [h,x] = 2x
  entries.push_back({1, 2, LinComb<int>::basis(2, Rational(-2))});   // [h,y] = -2y
  entries.push_back({0, 2, LinComb<int>::basis(1)});                 // [x,y] = h
  return LieAlgebra({"x", "h", "y"}, entries);
}

LieOperator sl2_standard_operator() {
  LieOperator r(3);
  r.set(1, 1, Rational(-1, 2));
  r.set(2, 2, Rational(-1));
  return r;
}

namespace {

FiniteGroup make_cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    names.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i)));
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup make_klein4() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
  return FiniteGroup(std::move(t), {"e", "a", "b", "ab"});
}

FiniteGroup make_s3() {
  // Permutations of {0,1,2}; composition (p*q)(i) = p(q(i)).
  const std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  auto find = [&perms](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw std::logic_error("make_s3: composition not found");
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t[a][b] = find(c);
    }
  return FiniteGroup(std::move(t), {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

FiniteGroup make_d4() {
  // r^i s^j with r^4 = s^2 = e and s r s = r^{-1}; index = i + 4j.
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          int left = idx(i, j), right = idx(k, l);
          int prod = idx(j ? i - k : i + k, j + l);
          t[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)] = prod;
        }
  return FiniteGroup(std::move(t), {"e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"});
}

FiniteGroup make_q8() {
  // Indices: 1, -1, i, -i, j, -j, k, -k as (axis, sign) with axis 0..3.
  auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // axis products: table[a][b] = (axis, sign) for a*b with axes 1,i,j,k
  const int axis_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_prod[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int a = 0; a < 4; ++a)
    for (int sa = 1; sa >= -1; sa -= 2)
      for (int b = 0; b < 4; ++b)
        for (int sb = 1; sb >= -1; sb -= 2) {
          int axis = axis_prod[a][b];
          int sign = sign_prod[a][b] * sa * sb;
          t[static_cast<std::size_t>(enc(a, sa))][static_cast<std::size_t>(enc(b, sb))] =
              enc(axis, sign);
        }
  return FiniteGroup(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "C2") return make_cyclic(2);
  if (name == "C3") return make_cyclic(3);
  if (name == "C4") return make_cyclic(4);
  if (name == "C5") return make_cyclic(5);
  if (name == "C6") return make_cyclic(6);
  if (name == "V4") return make_klein4();
  if (name == "S3") return make_s3();
  if (name == "D4") return make_d4();
  if (name == "Q8") return make_q8();
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
  return {"C2", "C3", "C4", "C5", "C6", "V4", "S3", "D4", "Q8"};
}

std::pair<std::vector<int>, std::vector<int>> s3_factorization() {
  return {{0, 4, 5}, {0, 1}};  // A3 = {e, (123), (132)}, <(12)> = {e, (12)}
}

}  // namespace rbhopf
