#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "rbhopf/lincomb.hpp"
#include "rbhopf/report.hpp"

namespace rbhopf {

/// Finite-dimensional Lie algebra presented by an ordered basis and structure
/// constants. Brackets are stored for index pairs i < j only; the other
/// orientation follows by antisymmetry. Construction normalizes entry
/// orientation and rejects duplicates; it does not enforce the Jacobi
/// identity, which check_lie_axioms reports on.
class LieAlgebra {
 public:
  struct BracketEntry {
    int left;
    int right;
    LinComb<int> value;  // [e_left, e_right] over basis indices
  };

  LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& entries);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const;
  int index_of(const std::string& name) const;  // -1 when absent

  LinComb<int> bracket(int i, int j) const;
  LinComb<int> bracket(const LinComb<int>& x, const LinComb<int>& y) const;

  /// Jacobi identity on every basis triple i < j < k; exhaustive by
  /// trilinearity. Empty report means the table is a Lie algebra.
  Report check_lie_axioms() const;

  std::string label_string(int i) const { return name(i); }
  std::map<std::string, std::string> render(const LinComb<int>& v) const;

 private:
  void check_index(int i) const;

  std::vector<std::string> names_;
  std::vector<LinComb<int>> upper_;  // entry (i,j), i<j, at i*dim+j
};

/// Linear operator on a Lie algebra; column k holds the image of basis
/// vector e_k.
class LieOperator {
 public:
  explicit LieOperator(int dim);
  static LieOperator identity(int dim);

  int dim() const { return dim_; }
  const Rational& at(int row, int col) const;
  void set(int row, int col, const Rational& v);

  LinComb<int> apply(int k) const;  // image of e_k
  LinComb<int> apply(const LinComb<int>& v) const;

  LieOperator& operator*=(const Rational& c);
  friend LieOperator operator*(LieOperator r, const Rational& c) { return r *= c; }
  friend LieOperator operator+(const LieOperator& a, const LieOperator& b);
  bool operator==(const LieOperator&) const = default;

 private:
  int dim_;
  std::vector<Rational> mat_;  // row-major dim x dim
};

/// -R - id, the companion operator of a weight-1 operator.
LieOperator companion(const LieOperator& r);

/// Checks R(x)R(y) = R( R(x)y + xR(y) + weight*xy ) on all basis pairs, where
/// juxtaposition is the bracket; exhaustive by bilinearity.
Report check_rb_weight(const LieAlgebra& L, const LieOperator& r, const Rational& weight);

/// Bilinear product table e_i . e_j, kept with its ambient algebra so it can
/// be evaluated on arbitrary elements.
class PostLieProduct {
 public:
  PostLieProduct(int dim, std::vector<LinComb<int>> table);
  int dim() const { return dim_; }
  const LinComb<int>& dot(int i, int j) const;
  LinComb<int> dot(const LinComb<int>& x, const LinComb<int>& y) const;

 private:
  int dim_;
  std::vector<LinComb<int>> table_;  // i*dim+j
};

/// Both compatibility axioms of a post-Lie product on all basis triples.
Report check_post_lie_axioms(const LieAlgebra& L, const PostLieProduct& p);

/// The product e_i . e_j = [R(e_i), e_j] induced by a weight-1 operator.
/// Verifies both post-Lie axioms and throws std::domain_error on violation
/// (which signals that R was not a weight-1 operator).
PostLieProduct post_lie_product(const LieAlgebra& L, const LieOperator& r);

/// New Lie algebra on the same basis with {x,y} = [R(x),y] + [x,R(y)] + [x,y].
/// Validates the Jacobi identity of the result and throws std::domain_error
/// on failure.
LieAlgebra descendent_bracket(const LieAlgebra& L, const LieOperator& r);

}  // namespace rbhopf
