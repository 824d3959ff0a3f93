#include "rbhopf/lie.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace rbhopf {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       const std::vector<BracketEntry>& entries)
    : names_(std::move(basis_names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw std::invalid_argument("LieAlgebra: duplicate basis names");
  const int n = dim();
  upper_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), LinComb<int>{});

  std::set<std::pair<int, int>> filled;
  for (const auto& e : entries) {
    check_index(e.left);
    check_index(e.right);
    if (e.left == e.right)
      throw std::invalid_argument("LieAlgebra: bracket of a basis vector with itself must be omitted");
    for (const auto& [l, c] : e.value.terms()) {
      (void)c;
      check_index(l);
    }
    int i = e.left, j = e.right;
    LinComb<int> v = e.value;
    if (i > j) {
      std::swap(i, j);
      v *= Rational(-1);
    }
    if (!filled.insert({i, j}).second)
      throw std::invalid_argument("LieAlgebra: bracket pair supplied twice (directly or via both orientations)");
    upper_[static_cast<std::size_t>(i) * n + j] = std::move(v);
  }
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("LieAlgebra: basis index out of range");
}

const std::string& LieAlgebra::name(int i) const {
  check_index(i);
  return names_[static_cast<std::size_t>(i)];
}

int LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

LinComb<int> LieAlgebra::bracket(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return {};
  if (i < j) return upper_[static_cast<std::size_t>(i) * dim() + j];
  return -upper_[static_cast<std::size_t>(j) * dim() + i];
}

LinComb<int> LieAlgebra::bracket(const LinComb<int>& x, const LinComb<int>& y) const {
  LinComb<int> acc;
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) acc.add_scaled(bracket(i, j), ci * cj);
  return acc;
}

std::map<std::string, std::string> LieAlgebra::render(const LinComb<int>& v) const {
  std::map<std::string, std::string> out;
  for (const auto& [l, c] : v.terms()) out[name(l)] = c.str();
  return out;
}

Report LieAlgebra::check_lie_axioms() const {
  Report rep{"jacobi", {}};
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        LinComb<int> defect = bracket(bracket(i, j), LinComb<int>::basis(k));
        defect += bracket(bracket(j, k), LinComb<int>::basis(i));
        defect += bracket(bracket(k, i), LinComb<int>::basis(j));
        if (!defect.is_zero())
          rep.violations.push_back({{name(i), name(j), name(k)}, render(defect), {}});
      }
  return rep;
}

LieOperator::LieOperator(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("LieOperator: negative dimension");
  mat_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Rational(0));
}

LieOperator LieOperator::identity(int dim) {
  LieOperator r(dim);
  for (int i = 0; i < dim; ++i) r.set(i, i, Rational(1));
  return r;
}

const Rational& LieOperator::at(int row, int col) const {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("LieOperator: index out of range");
  return mat_[static_cast<std::size_t>(row) * dim_ + col];
}

void LieOperator::set(int row, int col, const Rational& v) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("LieOperator: index out of range");
  mat_[static_cast<std::size_t>(row) * dim_ + col] = v;
}

LinComb<int> LieOperator::apply(int k) const {
  LinComb<int> out;
  for (int r = 0; r < dim_; ++r) out.add_term(r, at(r, k));
  return out;
}

LinComb<int> LieOperator::apply(const LinComb<int>& v) const {
  LinComb<int> acc;
  for (const auto& [l, c] : v.terms()) acc.add_scaled(apply(l), c);
  return acc;
}

LieOperator& LieOperator::operator*=(const Rational& c) {
  for (auto& v : mat_) v *= c;
  return *this;
}

LieOperator operator+(const LieOperator& a, const LieOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("LieOperator: dimension mismatch");
  LieOperator out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c));
  return out;
}

LieOperator companion(const LieOperator& r) {
  return r * Rational(-1) + LieOperator::identity(r.dim()) * Rational(-1);
}

Report check_rb_weight(const LieAlgebra& L, const LieOperator& r, const Rational& weight) {
  if (r.dim() != L.dim()) throw std::invalid_argument("check_rb_weight: dimension mismatch");
  Report rep{"rb-weight", {}};
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) {
      LinComb<int> lhs = L.bracket(r.apply(i), r.apply(j));
      LinComb<int> inner = L.bracket(r.apply(i), LinComb<int>::basis(j));
      inner += L.bracket(LinComb<int>::basis(i), r.apply(j));
      inner.add_scaled(L.bracket(i, j), weight);
      LinComb<int> rhs = r.apply(inner);
      if (lhs != rhs)
        rep.violations.push_back({{L.name(i), L.name(j)}, L.render(lhs), L.render(rhs)});
    }
  return rep;
}

PostLieProduct::PostLieProduct(int dim, std::vector<LinComb<int>> table)
    : dim_(dim), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw std::invalid_argument("PostLieProduct: table size mismatch");
}

const LinComb<int>& PostLieProduct::dot(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::out_of_range("PostLieProduct: index out of range");
  return table_[static_cast<std::size_t>(i) * dim_ + j];
}

LinComb<int> PostLieProduct::dot(const LinComb<int>& x, const LinComb<int>& y) const {
  LinComb<int> acc;
  for (const auto& [i, ci] : x.terms())
    for (const auto& [j, cj] : y.terms()) acc.add_scaled(dot(i, j), ci * cj);
  return acc;
}

Report check_post_lie_axioms(const LieAlgebra& L, const PostLieProduct& p) {
  Report rep{"post-lie", {}};
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const LinComb<int> x = LinComb<int>::basis(i);
        const LinComb<int> y = LinComb<int>::basis(j);
        const LinComb<int> z = LinComb<int>::basis(k);
        // [x,y].z = (y.x).z - y.(x.z) - (x.y).z + x.(y.z)
        LinComb<int> lhs1 = p.dot(L.bracket(i, j), z);
        LinComb<int> rhs1 = p.dot(p.dot(j, i), z);
        rhs1 -= p.dot(y, p.dot(i, k));
        rhs1 -= p.dot(p.dot(i, j), z);
        rhs1 += p.dot(x, p.dot(j, k));
        if (lhs1 != rhs1)
          rep.violations.push_back(
              {{L.name(i), L.name(j), L.name(k)}, L.render(lhs1), L.render(rhs1)});
        // x.[y,z] = [x.y, z] + [y, x.z]
        LinComb<int> lhs2 = p.dot(x, L.bracket(j, k));
        LinComb<int> rhs2 = L.bracket(p.dot(i, j), z) + L.bracket(y, p.dot(i, k));
        if (lhs2 != rhs2)
          rep.violations.push_back(
              {{L.name(i), L.name(j), L.name(k)}, L.render(lhs2), L.render(rhs2)});
      }
  return rep;
}

PostLieProduct post_lie_product(const LieAlgebra& L, const LieOperator& r) {
  if (r.dim() != L.dim()) throw std::invalid_argument("post_lie_product: dimension mismatch");
  const int n = L.dim();
  std::vector<LinComb<int>> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = L.bracket(r.apply(i), LinComb<int>::basis(j));
  PostLieProduct p(n, std::move(table));
  Report rep = check_post_lie_axioms(L, p);
  if (!rep.ok())
    throw std::domain_error("post_lie_product: axioms fail on " +
                            std::to_string(rep.violations.size()) +
                            " basis triples (operator is not weight-1 Rota-Baxter)");
  return p;
}

LieAlgebra descendent_bracket(const LieAlgebra& L, const LieOperator& r) {
  if (r.dim() != L.dim()) throw std::invalid_argument("descendent_bracket: dimension mismatch");
  std::vector<LieAlgebra::BracketEntry> entries;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      LinComb<int> v = L.bracket(r.apply(i), LinComb<int>::basis(j));
      v += L.bracket(LinComb<int>::basis(i), r.apply(j));
      v += L.bracket(i, j);
      if (!v.is_zero()) entries.push_back({i, j, std::move(v)});
    }
  LieAlgebra out(L.names(), entries);
  Report rep = out.check_lie_axioms();
  if (!rep.ok())
    throw std::domain_error("descendent_bracket: Jacobi fails on " +
                            std::to_string(rep.violations.size()) +
                            " basis triples (operator is not weight-1 Rota-Baxter)");
  return out;
}

}  // namespace rbhopf
